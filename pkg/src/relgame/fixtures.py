"""The fixture catalog used throughout the test suite and docs.

Every fixture value is produced by :func:`build_concrete` (direct set
evaluation over an explicit unit), never hand-entered; FULL2_BAD is the
one deliberate mutation, used for negative paths.
"""

from __future__ import annotations

from .algebra import AtomStructure, ConcreteUnit, build_concrete

__all__ = [
    "REFL1_UNIT", "ARROW_UNIT", "SYM2_UNIT", "FULL2_UNIT", "FULL3_UNIT",
    "refl1", "arrow", "sym2", "full2", "full2_bad", "full3",
]

REFL1_UNIT = ConcreteUnit(base=("0",), unit=((("0", "0")),))
ARROW_UNIT = ConcreteUnit(base=("0", "1"), unit=((("0", "1")),))
SYM2_UNIT = ConcreteUnit(base=("0", "1"), unit=(("0", "1"), ("1", "0")))
FULL2_UNIT = ConcreteUnit(
    base=("0", "1"),
    unit=tuple((x, y) for x in "01" for y in "01"),
)
FULL3_UNIT = ConcreteUnit(
    base=("0", "1", "2"),
    unit=tuple((x, y) for x in "012" for y in "012"),
)


def refl1() -> AtomStructure:
    return build_concrete(REFL1_UNIT)


def arrow() -> AtomStructure:
    return build_concrete(ARROW_UNIT)


def sym2() -> AtomStructure:
    return build_concrete(SYM2_UNIT)


def full2() -> AtomStructure:
    return build_concrete(FULL2_UNIT)


def full3() -> AtomStructure:
    return build_concrete(FULL3_UNIT)


def full2_bad() -> AtomStructure:
    """FULL2 with comp(e00, e01) corrupted to {e01, e00}; fails Ax 6."""
    good = full2()
    composition = dict(good.composition)
    composition[("e00", "e01")] = frozenset({"e01", "e00"})
    return AtomStructure(
        atoms=good.atoms,
        identity=good.identity,
        converse=good.converse,
        composition=composition,
        h_flags=good.h_flags,
    )
