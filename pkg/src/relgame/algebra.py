"""Finite atom structures and the complex algebras they generate.

An atom structure is the finite presentation of an atomic algebra of
relation type: an ordered list of atom names, the subset of identity
atoms, a partial converse map, and a composition table listing the atoms
below each product ``a;b``.  Elements of the complex algebra are sets of
atoms stored as bitmasks; converse and composition extend to elements
additively, so they are normal and completely additive by construction.

Concrete structures come from an explicit unit relation ``W``: the atoms
are the pairs of ``W`` and the operations are read off by direct set
evaluation of relational composition, relational converse and the
diagonal, all relativized to ``W``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import StructureError

__all__ = [
    "Element",
    "AtomStructure",
    "ConcreteUnit",
    "build_concrete",
    "load_structure",
    "load_structure_file",
    "dump_structure",
    "load_unit",
    "load_unit_file",
    "dump_unit",
]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Element:
    """A set of atoms of a fixed-width structure, stored as a bitmask."""

    mask: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise StructureError("element width must be non-negative")
        if not 0 <= self.mask < (1 << self.width):
            raise StructureError(
                f"mask {self.mask:#x} out of range for width {self.width}"
            )

    def _check(self, other: "Element") -> None:
        if self.width != other.width:
            raise StructureError(
                f"width mismatch: {self.width} vs {other.width}"
            )

    def join(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.mask | other.mask, self.width)

    def meet(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.mask & other.mask, self.width)

    def complement(self) -> "Element":
        return Element(((1 << self.width) - 1) ^ self.mask, self.width)

    __or__ = join
    __and__ = meet
    __invert__ = complement

    def __le__(self, other: "Element") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    def atom_indices(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def atom_names(self, structure: "AtomStructure") -> tuple[str, ...]:
        if self.width != structure.n:
            raise StructureError("element does not belong to this structure")
        return tuple(structure.atoms[i] for i in _bits(self.mask))


@dataclass(frozen=True, eq=False)
class AtomStructure:
    """Finite presentation of an atomic algebra of relation type.

    ``atoms`` fixes the canonical order used by every iteration, report
    and tie-break in the package.  ``converse`` is a partial map (an
    absent key means the converse is zero) and ``composition`` maps an
    atom pair to the set of atoms below the product (an absent entry
    means the product is zero).  ``h_flags`` is the subset of ``{r, s}``
    the structure claims for its unit.
    """

    atoms: tuple[str, ...]
    identity: frozenset[str]
    converse: Mapping[str, str]
    composition: Mapping[tuple[str, str], frozenset[str]]
    h_flags: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if len(set(atoms)) != len(atoms):
            raise StructureError("duplicate atom name")
        for name in atoms:
            if not isinstance(name, str) or not name:
                raise StructureError(f"bad atom name {name!r}")
        index = {name: i for i, name in enumerate(atoms)}

        def resolve(name: str, where: str) -> int:
            if name not in index:
                raise StructureError(f"{where}: unknown atom {name!r}")
            return index[name]

        identity = frozenset(self.identity)
        object.__setattr__(self, "identity", identity)
        id_mask = 0
        for name in identity:
            id_mask |= 1 << resolve(name, "identity")

        converse = dict(self.converse)
        object.__setattr__(self, "converse", converse)
        conv = [-1] * len(atoms)
        for a, b in converse.items():
            conv[resolve(a, "converse")] = resolve(b, "converse")

        composition = {
            (a, b): frozenset(v) for (a, b), v in dict(self.composition).items()
        }
        object.__setattr__(self, "composition", composition)
        comp = [[0] * len(atoms) for _ in atoms]
        for (a, b), products in composition.items():
            mask = 0
            for c in products:
                mask |= 1 << resolve(c, "composition")
            comp[resolve(a, "composition")][resolve(b, "composition")] = mask

        flags = frozenset(self.h_flags)
        if not flags <= {"r", "s"}:
            raise StructureError(f"unknown H flags {sorted(flags - {'r', 's'})}")
        object.__setattr__(self, "h_flags", flags)

        object.__setattr__(self, "index", index)
        object.__setattr__(self, "identity_mask", id_mask)
        object.__setattr__(self, "conv_table", tuple(conv))
        object.__setattr__(self, "comp_table", tuple(tuple(row) for row in comp))

    # __post_init__ fills in: index (name -> position), identity_mask,
    # conv_table (-1 for undefined) and comp_table (bitmask matrix)

    @property
    def n(self) -> int:
        return len(self.atoms)

    # ------------------------------------------------------------------
    # element constructors

    @property
    def zero(self) -> Element:
        return Element(0, self.n)

    @property
    def one(self) -> Element:
        return Element((1 << self.n) - 1, self.n)

    @property
    def identity_element(self) -> Element:
        return Element(self.identity_mask, self.n)

    def atom_element(self, i: int) -> Element:
        if not 0 <= i < self.n:
            raise StructureError(f"atom index {i} out of range")
        return Element(1 << i, self.n)

    def element(self, names: Iterable[str]) -> Element:
        mask = 0
        for name in names:
            if name not in self.index:
                raise StructureError(f"unknown atom {name!r}")
            mask |= 1 << self.index[name]
        return Element(mask, self.n)

    def atom_index(self, name: str) -> int:
        if name not in self.index:
            raise StructureError(f"unknown atom {name!r}")
        return self.index[name]

    def is_identity_atom(self, i: int) -> bool:
        return bool(self.identity_mask >> i & 1)

    def conv_atom(self, i: int) -> int | None:
        j = self.conv_table[i]
        return None if j < 0 else j

    def comp_atoms(self, i: int, j: int) -> int:
        """Bitmask of the atoms below the product of atoms ``i`` and ``j``."""
        return self.comp_table[i][j]

    # ------------------------------------------------------------------
    # additive operations on raw masks (used by the checkers and game)

    def compose_mask(self, xm: int, ym: int) -> int:
        acc = 0
        comp = self.comp_table
        for a in _bits(xm):
            row = comp[a]
            for b in _bits(ym):
                acc |= row[b]
        return acc

    def converse_mask(self, xm: int) -> int:
        acc = 0
        conv = self.conv_table
        for a in _bits(xm):
            j = conv[a]
            if j >= 0:
                acc |= 1 << j
        return acc

    def compose(self, x: Element, y: Element) -> Element:
        if x.width != self.n or y.width != self.n:
            raise StructureError("element does not belong to this structure")
        return Element(self.compose_mask(x.mask, y.mask), self.n)

    def converse_el(self, x: Element) -> Element:
        if x.width != self.n:
            raise StructureError("element does not belong to this structure")
        return Element(self.converse_mask(x.mask), self.n)

    # ------------------------------------------------------------------
    # serialization

    def to_dict(self) -> dict:
        converse = {
            a: self.converse[a] for a in self.atoms if a in self.converse
        }
        composition: dict[str, dict[str, list[str]]] = {}
        order = self.index
        for a in self.atoms:
            inner: dict[str, list[str]] = {}
            for b in self.atoms:
                entry = self.composition.get((a, b))
                if entry:
                    inner[b] = sorted(entry, key=order.__getitem__)
            if inner:
                composition[a] = inner
        return {
            "atoms": list(self.atoms),
            "identity": sorted(self.identity, key=order.__getitem__),
            "converse": converse,
            "composition": composition,
            "h": sorted(self.h_flags),
        }

    def digest(self) -> str:
        """Stable content hash of the canonical serialization."""
        return hashlib.sha256(dump_structure(self).encode()).hexdigest()[:16]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"AtomStructure(atoms={list(self.atoms)!r}, h={sorted(self.h_flags)})"


# ----------------------------------------------------------------------
# concrete units


@dataclass(frozen=True, eq=False)
class ConcreteUnit:
    """An explicit unit relation: a base set and a set of ordered pairs.

    The order of ``unit`` fixes the atom order of the structure built
    from it.  The base may contain declared points that occur in no
    pair; reflexivity is judged against the declared base.
    """

    base: tuple[str, ...]
    unit: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        base = tuple(self.base)
        object.__setattr__(self, "base", base)
        if len(set(base)) != len(base):
            raise StructureError("duplicate base point")
        points = set(base)
        unit = tuple((str(x), str(y)) for x, y in self.unit)
        object.__setattr__(self, "unit", unit)
        if len(set(unit)) != len(unit):
            raise StructureError("duplicate unit pair")
        for x, y in unit:
            if x not in points or y not in points:
                raise StructureError(f"pair ({x!r}, {y!r}) off the base")

    @property
    def pair_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.unit)

    @property
    def is_reflexive(self) -> bool:
        pairs = self.pair_set
        return all((b, b) in pairs for b in self.base)

    @property
    def is_symmetric(self) -> bool:
        pairs = self.pair_set
        return all((y, x) in pairs for x, y in pairs)

    def to_dict(self) -> dict:
        return {"base": list(self.base), "unit": [list(p) for p in self.unit]}


def _atom_name(unit: ConcreteUnit, x: str, y: str) -> str:
    if all(len(b) == 1 for b in unit.base):
        return f"e{x}{y}"
    bi = {b: i for i, b in enumerate(unit.base)}
    return f"e{bi[x]}_{bi[y]}"


def build_concrete(u: ConcreteUnit) -> AtomStructure:
    """Atom structure of the full algebra over an explicit unit.

    Atoms are the singleton pairs of ``u``; identity, converse and
    composition are evaluated directly on pairs (an arrow ``(x, y)``
    composes with ``(y, z)`` to ``(x, z)`` when that pair lies in the
    unit, and converse flips an arrow when the flip lies in the unit).
    """
    pairs = list(u.unit)
    pair_set = u.pair_set
    name = {p: _atom_name(u, *p) for p in pairs}
    atoms = tuple(name[p] for p in pairs)

    identity = frozenset(name[p] for p in pairs if p[0] == p[1])
    converse = {
        name[(x, y)]: name[(y, x)] for x, y in pairs if (y, x) in pair_set
    }
    composition: dict[tuple[str, str], frozenset[str]] = {}
    for x, y in pairs:
        for z, w in pairs:
            if y == z and (x, w) in pair_set:
                composition[(name[(x, y)], name[(z, w)])] = frozenset(
                    {name[(x, w)]}
                )

    flags = set()
    if u.is_reflexive:
        flags.add("r")
    if u.is_symmetric:
        flags.add("s")
    return AtomStructure(
        atoms=atoms,
        identity=identity,
        converse=converse,
        composition=composition,
        h_flags=frozenset(flags),
    )


# ----------------------------------------------------------------------
# file formats (UTF-8 JSON, canonical key and array order)


def _no_dup_pairs_hook(pairs):
    d = {}
    for k, v in pairs:
        if k in d:
            raise StructureError(f"duplicate key {k!r}")
        d[k] = v
    return d


def _parse_json(text: str) -> dict:
    try:
        data = json.loads(text, object_pairs_hook=_no_dup_pairs_hook)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise StructureError("top-level value must be an object")
    return data


def load_structure(text: str) -> AtomStructure:
    """Parse the structure file format.

    ``{"atoms": [...], "identity": [...], "converse": {...},
    "composition": {"a": {"b": ["c", ...]}}, "h": [...]}`` with omitted
    converse/composition entries meaning zero.
    """
    data = _parse_json(text)
    unknown = set(data) - {"atoms", "identity", "converse", "composition", "h"}
    if unknown:
        raise StructureError(f"unknown fields {sorted(unknown)}")
    atoms = data.get("atoms")
    if not isinstance(atoms, list) or not all(isinstance(a, str) for a in atoms):
        raise StructureError("'atoms' must be a list of strings")

    identity = data.get("identity", [])
    if not isinstance(identity, list):
        raise StructureError("'identity' must be a list")

    converse = data.get("converse", {})
    if not isinstance(converse, dict) or not all(
        isinstance(v, str) for v in converse.values()
    ):
        raise StructureError("'converse' must map atom names to atom names")

    raw_comp = data.get("composition", {})
    if not isinstance(raw_comp, dict):
        raise StructureError("'composition' must be an object")
    composition: dict[tuple[str, str], frozenset[str]] = {}
    for a, inner in raw_comp.items():
        if not isinstance(inner, dict):
            raise StructureError(f"composition[{a!r}] must be an object")
        for b, products in inner.items():
            if not isinstance(products, list) or not all(
                isinstance(c, str) for c in products
            ):
                raise StructureError(
                    f"composition[{a!r}][{b!r}] must be a list of atom names"
                )
            composition[(a, b)] = frozenset(products)

    flags = data.get("h", [])
    if not isinstance(flags, list):
        raise StructureError("'h' must be a list")

    return AtomStructure(
        atoms=tuple(atoms),
        identity=frozenset(identity),
        converse=converse,
        composition=composition,
        h_flags=frozenset(flags),
    )


def load_structure_file(path) -> AtomStructure:
    with open(path, encoding="utf-8") as fh:
        return load_structure(fh.read())


def dump_structure(a: AtomStructure) -> str:
    return json.dumps(a.to_dict(), indent=2, ensure_ascii=False) + "\n"


def load_unit(text: str) -> ConcreteUnit:
    """Parse the unit file format ``{"base": [...], "unit": [[x, y], ...]}``."""
    data = _parse_json(text)
    unknown = set(data) - {"base", "unit"}
    if unknown:
        raise StructureError(f"unknown fields {sorted(unknown)}")
    base = data.get("base")
    if not isinstance(base, list) or not all(isinstance(b, str) for b in base):
        raise StructureError("'base' must be a list of strings")
    raw = data.get("unit", [])
    if not isinstance(raw, list):
        raise StructureError("'unit' must be a list of pairs")
    pairs = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2):
            raise StructureError(f"bad unit pair {item!r}")
        pairs.append((item[0], item[1]))
    return ConcreteUnit(base=tuple(base), unit=tuple(pairs))


def load_unit_file(path) -> ConcreteUnit:
    with open(path, encoding="utf-8") as fh:
        return load_unit(fh.read())


def dump_unit(u: ConcreteUnit) -> str:
    return json.dumps(u.to_dict(), indent=2, ensure_ascii=False) + "\n"
