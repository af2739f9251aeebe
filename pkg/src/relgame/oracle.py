"""Independent ground truth: unit catalogs and brute-force search.

This module deliberately re-evaluates everything set-theoretically on
explicit pair sets (its own composition, converse and diagonal code)
instead of going through the structure's operation tables, so that it
can catch systematic bugs in the main pipeline.

``unit_catalog`` enumerates every unit relation over small bases up to
base permutation.  ``brute_force_representation`` searches those units
for a labeling of the pairs by atoms that makes the structure's tables
match the concrete evaluation; a negative answer is always reported as
"none up to bound", never as non-representability, since representations
may need larger bases than the search tries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .algebra import AtomStructure, ConcreteUnit
from .errors import GuardError

__all__ = [
    "unit_catalog",
    "brute_force_representation",
    "SearchResult",
    "validate_witness",
]

MAX_CATALOG_BASE = 3
MAX_SEARCH_BASE = 4
MAX_SEARCH_ATOMS = 6

SPair = tuple[str, str]


def _canonical_masks(m: int) -> list[int]:
    """Units over exactly m points (full support), one mask per orbit."""
    if m == 0:
        return [0]
    bits = m * m
    masks = np.arange(1 << bits, dtype=np.int64)

    keep = np.ones(masks.shape, dtype=bool)
    for p in range(m):
        occurs = np.zeros(masks.shape, dtype=bool)
        for b in range(bits):
            i, j = divmod(b, m)
            if i == p or j == p:
                occurs |= (masks >> b) & 1 == 1
        keep &= occurs

    for sigma in permutations(range(m)):
        if sigma == tuple(range(m)):
            continue
        mapped = np.zeros_like(masks)
        for b in range(bits):
            i, j = divmod(b, m)
            nb = sigma[i] * m + sigma[j]
            mapped |= ((masks >> b) & 1) << nb
        keep &= mapped >= masks

    return [int(v) for v in masks[keep]]


def _unit_from_mask(m: int, mask: int) -> ConcreteUnit:
    base = tuple(str(p) for p in range(m))
    pairs = tuple(
        (str(b // m), str(b % m)) for b in range(m * m) if mask >> b & 1
    )
    return ConcreteUnit(base=base, unit=pairs)


def unit_catalog(max_base: int) -> list[ConcreteUnit]:
    """All units over bases up to ``max_base``, deduplicated by permutation."""
    if max_base > MAX_CATALOG_BASE:
        raise GuardError(f"catalog limited to base {MAX_CATALOG_BASE}")
    out = []
    for m in range(max_base + 1):
        for mask in _canonical_masks(m):
            out.append(_unit_from_mask(m, mask))
    return out


# ----------------------------------------------------------------------
# direct set evaluation over a pair set (the oracle's own code path)


def _flip_pairs(rel: set[SPair], unit: set[SPair]) -> set[SPair]:
    return {(x, y) for (x, y) in unit if (y, x) in rel}


def _compose_pairs(
    r: set[SPair], s: set[SPair], base: tuple[str, ...], unit: set[SPair]
) -> set[SPair]:
    out = set()
    for x, z0 in r:
        for z, y in s:
            if z0 == z and (x, y) in unit:
                out.add((x, y))
    return out


def _check_assignment(
    a: AtomStructure, u: ConcreteUnit, label: dict[SPair, str]
) -> bool:
    """Full acceptance test of a total labeling, by direct evaluation."""
    unit = set(u.unit)
    blocks: dict[str, set[SPair]] = {name: set() for name in a.atoms}
    for pair, name in label.items():
        blocks[name].add(pair)
    if any(not b for b in blocks.values()):
        return False

    diagonal = {p for p in unit if p[0] == p[1]}
    identity_union: set[SPair] = set()
    for name in a.identity:
        identity_union |= blocks[name]
    if identity_union != diagonal:
        return False

    for name in a.atoms:
        j = a.conv_atom(a.index[name])
        expected = blocks[a.atoms[j]] if j is not None else set()
        if _flip_pairs(blocks[name], unit) != expected:
            return False

    for bn in a.atoms:
        for cn in a.atoms:
            mask = a.comp_atoms(a.index[bn], a.index[cn])
            image: set[SPair] = set()
            for k in range(a.n):
                if mask >> k & 1:
                    image |= blocks[a.atoms[k]]
            if _compose_pairs(blocks[bn], blocks[cn], u.base, unit) != image:
                return False

    if "r" in a.h_flags and not u.is_reflexive:
        return False
    if "s" in a.h_flags and not u.is_symmetric:
        return False
    return True


def _search_unit(a: AtomStructure, u: ConcreteUnit) -> dict[SPair, str] | None:
    """Backtracking search for an accepting labeling of one unit."""
    pairs = list(u.unit)
    if len(pairs) < a.n:
        return None
    unit = set(pairs)
    conv_image = {a.conv_table[i] for i in range(a.n) if a.conv_table[i] >= 0}
    label: dict[SPair, str] = {}
    atom_of: dict[SPair, int] = {}
    used_counts = [0] * a.n

    def candidate_ok(pair: SPair, atom: int) -> bool:
        x, y = pair
        if a.is_identity_atom(atom) != (x == y):
            return False
        rev = (y, x)
        if rev not in unit:
            # the label may not lie in the converse image, else its
            # block would need a flipped pair
            if atom in conv_image:
                return False
            if a.conv_table[atom] >= 0:
                return False
        else:
            back = atom_of.get(rev)
            if back is not None:
                if a.conv_table[back] != atom or a.conv_table[atom] != back:
                    return False
            else:
                if a.conv_table[atom] < 0 or atom not in conv_image:
                    return False
        # composition soundness on every triangle this pair completes
        for z in u.base:
            left = atom_of.get((x, z))
            right = atom_of.get((z, y))
            if left is not None and right is not None:
                if not a.comp_atoms(left, right) >> atom & 1:
                    return False
            # pair plays the left role: (x, y); (y, w) -> (x, w)
            mid = atom_of.get((y, z))
            whole = atom_of.get((x, z))
            if mid is not None and whole is not None:
                if not a.comp_atoms(atom, mid) >> whole & 1:
                    return False
            # pair plays the right role: (w, x); (x, y) -> (w, y)
            first = atom_of.get((z, x))
            whole2 = atom_of.get((z, y))
            if first is not None and whole2 is not None:
                if not a.comp_atoms(first, atom) >> whole2 & 1:
                    return False
        return True

    def search(k: int) -> bool:
        if k == len(pairs):
            return _check_assignment(a, u, label)
        remaining = len(pairs) - k
        unused = sum(1 for c in used_counts if c == 0)
        if unused > remaining:
            return False
        pair = pairs[k]
        for atom in range(a.n):
            if not candidate_ok(pair, atom):
                continue
            label[pair] = a.atoms[atom]
            atom_of[pair] = atom
            used_counts[atom] += 1
            if search(k + 1):
                return True
            used_counts[atom] -= 1
            del atom_of[pair]
            del label[pair]
        return False

    return dict(label) if search(0) else None


@dataclass
class SearchResult:
    found: bool
    witness: tuple[ConcreteUnit, dict[str, tuple[SPair, ...]]] | None
    bases_tried: int
    max_base: int

    @property
    def verdict(self) -> str:
        return "found" if self.found else "none up to bound"

    def to_json(self) -> dict:
        witness = None
        if self.witness is not None:
            unit, assignment = self.witness
            witness = {
                "unit": unit.to_dict(),
                "assignment": {
                    name: [list(p) for p in pairs]
                    for name, pairs in assignment.items()
                },
            }
        return {
            "schema": "relgame.search/1",
            "found": self.found,
            "verdict": self.verdict,
            "bases_tried": self.bases_tried,
            "max_base": self.max_base,
            "witness": witness,
        }


def brute_force_representation(
    a: AtomStructure,
    max_base: int = MAX_SEARCH_BASE,
    *,
    max_atoms: int = MAX_SEARCH_ATOMS,
) -> SearchResult:
    """Search every unit up to ``max_base`` for a representation of ``a``.

    Accepts the first witness in canonical enumeration order (base size,
    then canonical unit mask, then lexicographic labeling).  A negative
    result means only: none up to the bound.
    """
    if a.n > max_atoms:
        raise GuardError(
            f"{a.n} atoms exceeds the search guard ({max_atoms}); "
            "raise max_atoms explicitly to override"
        )
    if max_base > MAX_SEARCH_BASE:
        raise GuardError(f"search limited to base {MAX_SEARCH_BASE}")
    tried = 0
    for m in range(max_base + 1):
        for mask in _canonical_masks(m):
            unit = _unit_from_mask(m, mask)
            tried += 1
            found = _search_unit(a, unit)
            if found is not None:
                assignment: dict[str, list[SPair]] = {n: [] for n in a.atoms}
                for pair, name in found.items():
                    assignment[name].append(pair)
                witness = {
                    name: tuple(sorted(ps)) for name, ps in assignment.items()
                }
                return SearchResult(True, (unit, witness), tried, max_base)
    return SearchResult(False, None, tried, max_base)


def validate_witness(
    a: AtomStructure,
    unit: ConcreteUnit,
    assignment: dict[str, tuple[SPair, ...]],
) -> bool:
    """Re-run the acceptance test on a reported witness."""
    label: dict[SPair, str] = {}
    for name, pairs in assignment.items():
        for pair in pairs:
            if pair in label:
                return False
            label[pair] = name
    if set(label) != set(unit.unit):
        return False
    return _check_assignment(a, unit, label)
