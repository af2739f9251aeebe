"""Per-atom derived data and executable validators for the atom lemmas.

For each atom the profile records whether it is an identity atom, its
converse atom if any, whether ``st(a) = 1';a`` and ``end(a) = a;1'`` are
non-zero, and in that case the unique identity atoms ``S a`` (with
``Sa;a = a``) and ``E a`` (with ``a;Ea = a``).  Existence and uniqueness
of those identity atoms are theorems of the axioms, so their failure is
reported as a :class:`ProfileError` rather than silently patched: it
means the structure slipped past the axiom checker (e.g. sampled mode).

``validate_lemmas`` turns every atom-level lemma into an executable
check, quantified exhaustively over atoms and composition triples.  On
an axiom-passing structure every clause must pass; a violation is an
implementation bug or a checker escape, which is exactly what the
report is for.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import AtomStructure
from .errors import ProfileError

__all__ = ["AtomProfile", "AtomProfiles", "profile_atoms", "LemmaReport", "validate_lemmas"]


@dataclass(frozen=True)
class AtomProfile:
    index: int
    name: str
    is_identity: bool
    conv: int | None
    has_st: bool
    has_end: bool
    s_atom: int | None
    e_atom: int | None


@dataclass(frozen=True)
class AtomProfiles:
    profiles: tuple[AtomProfile, ...]
    # True when the caller has established the axioms hold; profiles on
    # other structures are still computed but not to be trusted.
    reliable: bool = False

    def __getitem__(self, i: int) -> AtomProfile:
        return self.profiles[i]

    def __iter__(self) -> Iterator[AtomProfile]:
        return iter(self.profiles)

    def __len__(self) -> int:
        return len(self.profiles)


def _identity_candidates(a: AtomStructure, atom: int, side: str) -> list[int]:
    out = []
    for i in range(a.n):
        if not a.is_identity_atom(i):
            continue
        prod = a.comp_atoms(i, atom) if side == "st" else a.comp_atoms(atom, i)
        if prod >> atom & 1:
            out.append(i)
    return out


def profile_atoms(a: AtomStructure, *, axioms_ok: bool = False) -> AtomProfiles:
    """Compute every atom's profile.

    Raises :class:`ProfileError` when an atom with non-zero ``st``/``end``
    has no unique start/end identity atom.
    """
    idm = a.identity_mask
    profiles = []
    for atom in range(a.n):
        amask = 1 << atom
        has_st = a.compose_mask(idm, amask) != 0
        has_end = a.compose_mask(amask, idm) != 0
        s_atom = e_atom = None
        if has_st:
            cands = _identity_candidates(a, atom, "st")
            if len(cands) != 1:
                raise ProfileError(
                    f"atom {a.atoms[atom]!r}: st is non-zero but "
                    f"{len(cands)} start identity atoms qualify "
                    f"({[a.atoms[i] for i in cands]}); structure is not in REL"
                )
            s_atom = cands[0]
        if has_end:
            cands = _identity_candidates(a, atom, "end")
            if len(cands) != 1:
                raise ProfileError(
                    f"atom {a.atoms[atom]!r}: end is non-zero but "
                    f"{len(cands)} end identity atoms qualify "
                    f"({[a.atoms[i] for i in cands]}); structure is not in REL"
                )
            e_atom = cands[0]
        profiles.append(
            AtomProfile(
                index=atom,
                name=a.atoms[atom],
                is_identity=a.is_identity_atom(atom),
                conv=a.conv_atom(atom),
                has_st=has_st,
                has_end=has_end,
                s_atom=s_atom,
                e_atom=e_atom,
            )
        )
    return AtomProfiles(tuple(profiles), reliable=axioms_ok)


@dataclass
class ClauseCheck:
    clause: str
    passed: bool
    witness: dict | None = None


@dataclass
class LemmaReport:
    clauses: list[ClauseCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    @property
    def first_violation(self) -> ClauseCheck | None:
        for c in self.clauses:
            if not c.passed:
                return c
        return None

    def to_json(self) -> dict:
        return {
            "schema": "relgame.lemma-report/1",
            "passed": self.passed,
            "clauses": [
                {"clause": c.clause, "passed": c.passed, "witness": c.witness}
                for c in self.clauses
            ],
        }


def _comp_triples(a: AtomStructure) -> Iterator[tuple[int, int, int]]:
    """All (atom, left, right) with atom below the product left;right."""
    for b in range(a.n):
        for c in range(a.n):
            prod = a.comp_atoms(b, c)
            for x in range(a.n):
                if prod >> x & 1:
                    yield x, b, c


def validate_lemmas(a: AtomStructure, profiles: AtomProfiles | None = None) -> LemmaReport:
    """Check every atom lemma exhaustively; meaningful on axiom-passing input."""
    clauses: list[ClauseCheck] = []

    def record(clause: str, witness: dict | None) -> None:
        clauses.append(ClauseCheck(clause, witness is None, witness))

    try:
        p = profiles or profile_atoms(a)
    except ProfileError as exc:
        record("sedef/unique", {"error": str(exc)})
        return LemmaReport(clauses)
    record("sedef/unique", None)
    name = a.atoms

    def conv_ok() -> dict | None:
        for prof in p:
            if prof.conv is not None and not 0 <= prof.conv < a.n:
                return {"a": prof.name}
        return None

    record("cdef/conv-atom", conv_ok())

    def involution() -> dict | None:
        for prof in p:
            if prof.conv is None:
                continue
            back = p[prof.conv].conv
            if back is None or back != prof.index:
                return {"a": prof.name, "conv": name[prof.conv]}
        return None

    record("cdef/involution", involution())

    def injective() -> dict | None:
        seen: dict[int, int] = {}
        for prof in p:
            if prof.conv is None:
                continue
            if prof.conv in seen:
                return {"a": name[seen[prof.conv]], "b": prof.name}
            seen[prof.conv] = prof.index
        return None

    record("cdef/injective", injective())

    def secomp() -> tuple[str, dict | None]:
        for prof in p:
            if prof.conv is None:
                continue
            q = p[prof.conv]
            if prof.has_st and (not q.has_end or q.e_atom != prof.s_atom):
                return "secomp/st-conv", {"a": prof.name}
            if prof.has_end and (not q.has_st or q.s_atom != prof.e_atom):
                return "secomp/end-conv", {"a": prof.name}
            if prof.has_st and not (
                a.comp_atoms(prof.index, prof.conv) >> prof.s_atom & 1
            ):
                return "secomp/s-below-a-conv", {"a": prof.name}
            if prof.has_end and not (
                a.comp_atoms(prof.conv, prof.index) >> prof.e_atom & 1
            ):
                return "secomp/e-below-conv-a", {"a": prof.name}
        return "secomp", None

    record(*secomp())

    def identity_atoms() -> dict | None:
        for prof in p:
            if not prof.is_identity:
                continue
            if (
                prof.conv != prof.index
                or not prof.has_st
                or not prof.has_end
                or prof.s_atom != prof.index
                or prof.e_atom != prof.index
            ):
                return {"a": prof.name}
        return None

    record("identityatoms/fixed-point", identity_atoms())

    def identity_pairs() -> dict | None:
        ids = [i for i in range(a.n) if a.is_identity_atom(i)]
        for i in ids:
            if not a.comp_atoms(i, i) >> i & 1:
                return {"i": name[i]}
            for j in ids:
                if i != j and a.comp_atoms(i, j):
                    return {"i": name[i], "j": name[j]}
        return None

    record("identityatoms/comp-diagonal", identity_pairs())

    secons_checks = (
        ("secons/st", lambda x, b, c: _secons_st(p, x, b, c)),
        ("secons/end", lambda x, b, c: _secons_end(p, x, b, c)),
        ("secons/mid", lambda x, b, c: _secons_mid(p, x, b, c)),
    )
    cycles_checks = (
        ("cycles/identity-flip", lambda x, b, c: _cycle1(a, p, x, b, c)),
        ("cycles/left-rotate", lambda x, b, c: _cycle2(a, p, x, b, c)),
        ("cycles/right-rotate", lambda x, b, c: _cycle3(a, p, x, b, c)),
        ("cycles/conv-left", lambda x, b, c: _cycle4(a, p, x, b, c)),
        ("cycles/conv-right", lambda x, b, c: _cycle5(a, p, x, b, c)),
        ("cycles/conv-full", lambda x, b, c: _cycle6(a, p, x, b, c)),
    )
    triples = list(_comp_triples(a))
    for clause, fn in secons_checks + cycles_checks:
        witness = None
        for x, b, c in triples:
            if not fn(x, b, c):
                witness = {"a": name[x], "b": name[b], "c": name[c]}
                break
        record(clause, witness)

    return LemmaReport(clauses)


def _secons_st(p: AtomProfiles, x: int, b: int, c: int) -> bool:
    if p[x].has_st != p[b].has_st:
        return False
    return not p[x].has_st or p[x].s_atom == p[b].s_atom


def _secons_end(p: AtomProfiles, x: int, b: int, c: int) -> bool:
    if p[x].has_end != p[c].has_end:
        return False
    return not p[x].has_end or p[x].e_atom == p[c].e_atom


def _secons_mid(p: AtomProfiles, x: int, b: int, c: int) -> bool:
    if p[b].has_end != p[c].has_st:
        return False
    return not p[b].has_end or p[b].e_atom == p[c].s_atom


def _cycle1(a: AtomStructure, p: AtomProfiles, x: int, b: int, c: int) -> bool:
    if not p[x].is_identity:
        return True
    return p[b].conv == c and p[c].conv == b


def _cycle2(a: AtomStructure, p: AtomProfiles, x: int, b: int, c: int) -> bool:
    cb = p[b].conv
    return cb is None or bool(a.comp_atoms(cb, x) >> c & 1)


def _cycle3(a: AtomStructure, p: AtomProfiles, x: int, b: int, c: int) -> bool:
    cc = p[c].conv
    return cc is None or bool(a.comp_atoms(x, cc) >> b & 1)


def _cycle4(a: AtomStructure, p: AtomProfiles, x: int, b: int, c: int) -> bool:
    ca, cb = p[x].conv, p[b].conv
    if ca is None or cb is None:
        return True
    return bool(a.comp_atoms(c, ca) >> cb & 1)


def _cycle5(a: AtomStructure, p: AtomProfiles, x: int, b: int, c: int) -> bool:
    ca, cc = p[x].conv, p[c].conv
    if ca is None or cc is None:
        return True
    return bool(a.comp_atoms(ca, b) >> cc & 1)


def _cycle6(a: AtomStructure, p: AtomProfiles, x: int, b: int, c: int) -> bool:
    ca, cb, cc = p[x].conv, p[b].conv, p[c].conv
    if ca is None or cb is None or cc is None:
        return True
    return bool(a.comp_atoms(cc, cb) >> ca & 1)
