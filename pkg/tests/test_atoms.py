"""Atom profiles and the lemma validators."""

import pytest
from hypothesis import given, settings

from relgame import (
    AtomStructure,
    ProfileError,
    build_concrete,
    check_axioms,
    profile_atoms,
    validate_lemmas,
)

from strategies import units


class TestProfiles:
    def test_full2_e01(self, full2):
        p = profile_atoms(full2)[full2.atom_index("e01")]
        # reading the arrow 0->1: converse flips it, loops sit at its ends
        assert not p.is_identity
        assert full2.atoms[p.conv] == "e10"
        assert p.has_st and p.has_end
        assert full2.atoms[p.s_atom] == "e00"
        assert full2.atoms[p.e_atom] == "e11"

    def test_refl1_identity_atom_is_fixed_point(self, refl1):
        p = profile_atoms(refl1)[0]
        assert p.is_identity
        assert p.conv == p.s_atom == p.e_atom == 0

    def test_arrow_no_st_no_end(self, arrow):
        p = profile_atoms(arrow)[0]
        assert p.conv is None
        assert not p.has_st and not p.has_end
        assert p.s_atom is None and p.e_atom is None

    def test_reliability_flag(self, full2):
        assert not profile_atoms(full2).reliable
        assert profile_atoms(full2, axioms_ok=True).reliable

    def test_uniqueness_failure(self):
        # two identity atoms both reproduce a on the left
        a = AtomStructure(
            atoms=("i1", "i2", "a"),
            identity=frozenset({"i1", "i2"}),
            converse={},
            composition={
                ("i1", "a"): frozenset({"a"}),
                ("i2", "a"): frozenset({"a"}),
            },
        )
        with pytest.raises(ProfileError, match="2 start identity atoms"):
            profile_atoms(a)

    def test_existence_failure(self):
        # st(a) is non-zero but no identity atom reproduces a
        a = AtomStructure(
            atoms=("i", "a", "b"),
            identity=frozenset({"i"}),
            converse={},
            composition={("i", "a"): frozenset({"b"})},
        )
        with pytest.raises(ProfileError, match="0 start identity atoms"):
            profile_atoms(a)


class TestLemmaValidators:
    def test_full2_all_clauses_pass(self, full2):
        report = validate_lemmas(full2)
        assert report.passed
        clause_names = {c.clause for c in report.clauses}
        assert {"cdef/involution", "secomp", "identityatoms/fixed-point",
                "secons/st", "secons/end", "secons/mid",
                "cycles/identity-flip", "cycles/conv-full"} <= clause_names

    def test_sym2_conv_clauses_pass_secons_vacuous(self, sym2):
        report = validate_lemmas(sym2)
        assert report.passed  # empty composition: triple clauses are vacuous

    def test_refl1_and_full3(self, refl1, full3):
        assert validate_lemmas(refl1).passed
        assert validate_lemmas(full3).passed

    def test_conv_involution_violation_detected(self):
        a = AtomStructure(
            atoms=("a", "b", "c"),
            identity=frozenset(),
            converse={"a": "b", "b": "c", "c": "a"},
            composition={},
        )
        report = validate_lemmas(a)
        assert not report.passed
        assert report.first_violation.clause == "cdef/involution"

    def test_identity_comp_diagonal_violation(self):
        a = AtomStructure(
            atoms=("i", "j"),
            identity=frozenset({"i", "j"}),
            converse={"i": "i", "j": "j"},
            composition={
                ("i", "i"): frozenset({"i"}),
                ("j", "j"): frozenset({"j"}),
                ("i", "j"): frozenset({"i"}),
            },
        )
        report = validate_lemmas(a)
        assert not report.passed
        assert report.first_violation.clause == "identityatoms/comp-diagonal"

    def test_profile_error_becomes_report_content(self):
        a = AtomStructure(
            atoms=("i1", "i2", "a"),
            identity=frozenset({"i1", "i2"}),
            converse={},
            composition={
                ("i1", "a"): frozenset({"a"}),
                ("i2", "a"): frozenset({"a"}),
            },
        )
        report = validate_lemmas(a)
        assert not report.passed
        assert report.first_violation.clause == "sedef/unique"

    def test_json_shape(self, full2):
        data = validate_lemmas(full2).to_json()
        assert data["passed"] is True
        assert all({"clause", "passed", "witness"} <= set(c) for c in data["clauses"])


@settings(max_examples=60, deadline=None)
@given(units(max_base=3))
def test_master_property_axiom_passing_implies_lemmas(u):
    # the lemmas are theorems of the axioms: on any concrete structure
    # (easy direction: axioms hold) the whole validator suite must pass
    a = build_concrete(u)
    report = validate_lemmas(a)
    assert report.passed, report.first_violation


@settings(max_examples=30, deadline=None)
@given(units(max_base=3))
def test_conv_idempotent_on_domain(u):
    a = build_concrete(u)
    profiles = profile_atoms(a)
    for p in profiles:
        if p.conv is not None:
            assert profiles[p.conv].conv == p.index


def test_identity_pairs_on_fixtures(refl1, full2, full3):
    for a in (refl1, full2, full3):
        ids = [i for i in range(a.n) if a.is_identity_atom(i)]
        for i in ids:
            assert a.comp_atoms(i, i) >> i & 1
            for j in ids:
                if i != j:
                    assert a.comp_atoms(i, j) == 0
