"""Unit catalogs and the brute-force representation search."""

import pytest
from hypothesis import given, settings

from relgame import (
    GuardError,
    build_concrete,
    brute_force_representation,
    check_axioms,
    unit_catalog,
    validate_witness,
)
from relgame.fixtures import ARROW_UNIT, FULL2_UNIT, SYM2_UNIT


class TestCatalog:
    def test_base_one(self):
        cat = unit_catalog(1)
        assert [set(u.unit) for u in cat] == [set(), {("0", "0")}]

    def test_base_two_members(self):
        cat = unit_catalog(2)
        pair_sets = [u.pair_set for u in cat]
        assert ARROW_UNIT.pair_set in pair_sets
        assert SYM2_UNIT.pair_set in pair_sets
        assert FULL2_UNIT.pair_set in pair_sets

    def test_swap_classes_collapse(self):
        # {(0,1)} and {(1,0)} are the same unit up to renaming the base
        cat = unit_catalog(2)
        assert frozenset({("1", "0")}) not in [u.pair_set for u in cat]

    def test_counts_by_burnside(self):
        # orbits of subsets of a 2x2 (3x3) square under base permutations
        assert len(unit_catalog(2)) == 10
        assert len(unit_catalog(3)) == 104

    def test_guard(self):
        with pytest.raises(GuardError):
            unit_catalog(4)


class TestBruteForce:
    def test_full2_found_at_base_two(self, full2):
        result = brute_force_representation(full2, 2)
        assert result.found and result.verdict == "found"
        unit, assignment = result.witness
        assert unit.pair_set == FULL2_UNIT.pair_set
        assert validate_witness(full2, unit, assignment)

    def test_arrow_found(self, arrow):
        result = brute_force_representation(arrow, 2)
        assert result.found
        unit, assignment = result.witness
        assert unit.pair_set == {("0", "1")}
        assert validate_witness(arrow, unit, assignment)

    def test_full2_bad_none_up_to_three(self, full2_bad):
        result = brute_force_representation(full2_bad, 3)
        assert not result.found
        assert result.verdict == "none up to bound"
        assert result.bases_tried == 104  # the whole catalog up to base 3

    def test_full2_bad_none_up_to_four(self, full2_bad):
        result = brute_force_representation(full2_bad, 4)
        assert not result.found

    def test_atom_guard(self, full3):
        with pytest.raises(GuardError):
            brute_force_representation(full3, 3)
        # explicit override lifts the guard
        result = brute_force_representation(full3, 3, max_atoms=9)
        assert result.found

    def test_base_guard(self, full2):
        with pytest.raises(GuardError):
            brute_force_representation(full2, 5)

    def test_result_json(self, arrow):
        data = brute_force_representation(arrow, 2).to_json()
        assert data["found"] is True and data["verdict"] == "found"
        assert data["witness"]["unit"]["unit"] == [["0", "1"]]


class TestAgreement:
    def test_positive_agreement_base_two(self):
        # every catalog unit's structure passes the axioms, and the
        # search refinds a representation at the original base size
        for u in unit_catalog(2):
            a = build_concrete(u)
            assert check_axioms(a, mode="exhaustive").ok
            result = brute_force_representation(a, len(u.base), max_atoms=9)
            assert result.found, u.unit

    def test_positive_agreement_sampled_base_three(self):
        import random

        cat3 = [u for u in unit_catalog(3) if len(u.base) == 3]
        rng = random.Random(0)
        for u in rng.sample(cat3, 6):
            a = build_concrete(u)
            assert check_axioms(a, mode="exhaustive", budget=2**27).ok
            result = brute_force_representation(a, 3, max_atoms=9)
            assert result.found, u.unit

    def test_negative_agreement(self, full2_bad):
        # an axiom-failing structure is never found representable
        assert not check_axioms(full2_bad, mode="exhaustive").ok
        for bound in (2, 3):
            assert not brute_force_representation(full2_bad, bound).found


def test_witness_validation_rejects_corruption(full2):
    result = brute_force_representation(full2, 2)
    unit, assignment = result.witness
    corrupted = dict(assignment)
    corrupted["e00"], corrupted["e11"] = corrupted["e11"], corrupted["e00"]
    assert not validate_witness(full2, unit, corrupted)
