"""Extraction and verification of relativized set representations.

A finished (or truncated) play yields a base ``U`` (the nodes), a unit
``W`` (the labeled edges) and the candidate embedding ``h`` sending each
atom to the set of pairs carrying its label; elements map by union.  The
verifier then checks, inside the algebra of subsets of ``W``:

* the identity maps onto the diagonal of ``W``;
* converse maps onto relational converse relativized to ``W``;
* composition is sound on every fragment (the relational composite of
  two atom images is covered by the image of the composition), and
  complete exactly on saturated plays, where the missing direction is
  reported as pending with the open obligation count otherwise;
* injectivity (every atom labels at least one edge);
* each claimed H flag holds for ``W`` over ``U``.

The round trip additionally checks that the representation induces a
structure isomorphic to the input: the pairs of ``W`` are grouped into
label classes, the class operations are evaluated set-theoretically, and
a backtracking search looks for an atom-to-class bijection preserving
identity, converse and composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AtomStructure, ConcreteUnit, build_concrete
from .axioms import AxiomReport, check_axioms
from .errors import RelgameError
from .game import PlayTrace, run_game

__all__ = [
    "Representation",
    "VerificationReport",
    "extract",
    "verify",
    "verify_trace",
    "find_isomorphism",
    "RoundtripReport",
    "roundtrip_check",
]

Pair = tuple[int, int]


@dataclass
class Representation:
    base: tuple[int, ...]
    unit: frozenset[Pair]
    h: dict[str, frozenset[Pair]]  # atom name -> pairs, a partition of unit
    flags_observed: frozenset[str]

    def h_element(self, names) -> frozenset[Pair]:
        out: set[Pair] = set()
        for name in names:
            out |= self.h[name]
        return frozenset(out)

    def to_json(self) -> dict:
        return {
            "base": list(self.base),
            "unit": [list(p) for p in sorted(self.unit)],
            "h": {
                name: [list(p) for p in sorted(pairs)]
                for name, pairs in self.h.items()
            },
            "flags_observed": sorted(self.flags_observed),
        }


def _observed_flags(base: tuple[int, ...], unit: frozenset[Pair]) -> frozenset[str]:
    flags = set()
    if all((u, u) in unit for u in base):
        flags.add("r")
    if all((y, x) in unit for x, y in unit):
        flags.add("s")
    return frozenset(flags)


def extract(trace: PlayTrace) -> Representation:
    """Base, unit and atom map of the final network of a play."""
    final = trace.final
    base = tuple(sorted(final.nodes))
    unit = frozenset(final.labels)
    h = {
        name: frozenset(
            edge for edge, atom in final.labels.items() if trace.atoms[atom] == name
        )
        for name in trace.atoms
    }
    return Representation(
        base=base,
        unit=unit,
        h=h,
        flags_observed=_observed_flags(base, unit),
    )


def _otimes(rel: frozenset[Pair], unit: frozenset[Pair]) -> frozenset[Pair]:
    return frozenset((x, y) for (x, y) in unit if (y, x) in rel)


def _circ(
    r: frozenset[Pair], s: frozenset[Pair], unit: frozenset[Pair]
) -> frozenset[Pair]:
    by_source: dict[int, set[int]] = {}
    for x, z in r:
        by_source.setdefault(x, set()).add(z)
    targets: dict[int, set[int]] = {}
    for z, y in s:
        targets.setdefault(z, set()).add(y)
    out = set()
    for x, zs in by_source.items():
        for z in zs:
            for y in targets.get(z, ()):
                if (x, y) in unit:
                    out.add((x, y))
    return frozenset(out)


@dataclass
class VerificationReport:
    identity_ok: bool
    converse_ok: bool
    composition_sound: bool
    composition_complete: bool | None  # None = pending (unsaturated play)
    pending_count: int
    injective_ok: bool | None  # None = atom moves still pending
    h_flag_ok: dict[str, bool]
    counterexamples: dict[str, object]

    def all_ok(self, allow_partial: bool = False) -> bool:
        for pending_field in (self.composition_complete, self.injective_ok):
            if pending_field is None:
                if not allow_partial:
                    return False
            elif not pending_field:
                return False
        return (
            self.identity_ok
            and self.converse_ok
            and self.composition_sound
            and all(self.h_flag_ok.values())
        )

    def to_json(self) -> dict:
        def render(value: bool | None) -> bool | str:
            return "pending" if value is None else value

        return {
            "schema": "relgame.verification/1",
            "identity_ok": self.identity_ok,
            "converse_ok": self.converse_ok,
            "composition_sound": self.composition_sound,
            "composition_complete": render(self.composition_complete),
            "pending_count": self.pending_count,
            "injective_ok": render(self.injective_ok),
            "h_flag_ok": dict(sorted(self.h_flag_ok.items())),
            "counterexamples": self.counterexamples,
        }


def verify(
    rep: Representation,
    a: AtomStructure,
    saturated: bool,
    pending_count: int = 0,
    atoms_pending: bool = False,
) -> VerificationReport:
    """Check every property the extraction is supposed to have.

    ``atoms_pending`` marks truncated plays whose queue still holds atom
    moves; an atom without edges is then reported as pending rather than
    as an injectivity failure.
    """
    if set(rep.h) != set(a.atoms):
        raise RelgameError("representation does not match the structure's atoms")
    unit = rep.unit
    cex: dict[str, object] = {}

    diagonal = frozenset(p for p in unit if p[0] == p[1])
    identity_image = rep.h_element(a.identity)
    identity_ok = identity_image == diagonal
    if not identity_ok:
        cex["identity"] = sorted(identity_image ^ diagonal)

    converse_ok = True
    for name in a.atoms:
        i = a.index[name]
        j = a.conv_atom(i)
        expected = rep.h[a.atoms[j]] if j is not None else frozenset()
        got = _otimes(rep.h[name], unit)
        if got != expected:
            converse_ok = False
            cex["converse"] = {"atom": name, "difference": sorted(got ^ expected)}
            break

    composition_sound = True
    complete_ok: bool | None = True if saturated else None
    for bn in a.atoms:
        for cn in a.atoms:
            composite = _circ(rep.h[bn], rep.h[cn], unit)
            image = rep.h_element(
                a.atoms[k]
                for k in range(a.n)
                if a.comp_atoms(a.index[bn], a.index[cn]) >> k & 1
            )
            if composition_sound and not composite <= image:
                composition_sound = False
                cex["composition_sound"] = {
                    "left": bn,
                    "right": cn,
                    "extra": sorted(composite - image),
                }
            if saturated and complete_ok and not image <= composite:
                complete_ok = False
                cex["composition_complete"] = {
                    "left": bn,
                    "right": cn,
                    "missing": sorted(image - composite),
                }

    injective_ok: bool | None = True
    for name in a.atoms:
        if not rep.h[name]:
            injective_ok = None if atoms_pending else False
            if injective_ok is False:
                cex["injective"] = {"atom": name}
            break

    h_flag_ok = {flag: flag in rep.flags_observed for flag in sorted(a.h_flags)}
    for flag, ok in h_flag_ok.items():
        if not ok:
            cex[f"flag_{flag}"] = "unit lacks the claimed property"

    return VerificationReport(
        identity_ok=identity_ok,
        converse_ok=converse_ok,
        composition_sound=composition_sound,
        composition_complete=complete_ok,
        pending_count=0 if saturated else pending_count,
        injective_ok=injective_ok,
        h_flag_ok=h_flag_ok,
        counterexamples=cex,
    )


def verify_trace(
    trace: PlayTrace, rep: Representation, a: AtomStructure
) -> VerificationReport:
    """Verify against a play, deriving the pending context from its queue."""
    from .game import AtomMove

    return verify(
        rep,
        a,
        trace.saturated,
        pending_count=len(trace.pending),
        atoms_pending=any(isinstance(m, AtomMove) for m in trace.pending),
    )


# ----------------------------------------------------------------------
# induced structure and isomorphism search


def _label_classes(rep: Representation) -> list[frozenset[Pair]]:
    """Nonempty label classes in canonical order (by smallest member)."""
    classes = [pairs for pairs in rep.h.values() if pairs]
    return sorted(classes, key=lambda c: min(c))


def find_isomorphism(
    a: AtomStructure,
    classes: list[frozenset[Pair]],
    unit: frozenset[Pair],
) -> dict[str, frozenset[Pair]] | None:
    """Bijection atoms -> classes preserving identity, converse, composition.

    The class side is evaluated set-theoretically inside the subset
    algebra of ``unit``; nothing from the play's labeling is assumed
    beyond the partition itself.
    """
    if len(classes) != a.n:
        return None
    class_ids = list(range(len(classes)))
    is_diag = [all(x == y for x, y in cls) for cls in classes]
    meets_diag = [any(x == y for x, y in cls) for cls in classes]

    # converse of each class must be empty or exactly another class
    by_set = {cls: k for k, cls in enumerate(classes)}
    conv_class: list[int | None] = []
    for cls in classes:
        flipped = _otimes(cls, unit)
        if not flipped:
            conv_class.append(None)
        elif flipped in by_set:
            conv_class.append(by_set[flipped])
        else:
            return None  # converse not class-shaped: no bijection can work

    circ_cache: dict[tuple[int, int], frozenset[Pair]] = {}

    def circ(i: int, j: int) -> frozenset[Pair]:
        key = (i, j)
        if key not in circ_cache:
            circ_cache[key] = _circ(classes[i], classes[j], unit)
        return circ_cache[key]

    assignment: dict[int, int] = {}  # atom index -> class id
    used = set()

    def compatible(atom: int, cls: int) -> bool:
        if a.is_identity_atom(atom) != is_diag[cls]:
            return False
        if not a.is_identity_atom(atom) and meets_diag[cls]:
            return False
        j = a.conv_atom(atom)
        if (j is None) != (conv_class[cls] is None):
            return False
        if j is not None and j in assignment:
            if assignment[j] != conv_class[cls]:
                return False
        # composition constraints among already-assigned atoms
        for b, cb in list(assignment.items()) + [(atom, cls)]:
            for c, cc in list(assignment.items()) + [(atom, cls)]:
                prod_mask = a.comp_atoms(b, c)
                composite = circ(cb, cc)
                for x, cx in list(assignment.items()) + [(atom, cls)]:
                    below = bool(prod_mask >> x & 1)
                    covered = classes[cx] <= composite
                    disjoint = not (classes[cx] & composite)
                    if below and not covered:
                        return False
                    if not below and not disjoint:
                        return False
        return True

    def search(atom: int) -> bool:
        if atom == a.n:
            return _exact_check()
        for cls in class_ids:
            if cls in used:
                continue
            if not compatible(atom, cls):
                continue
            assignment[atom] = cls
            used.add(cls)
            if search(atom + 1):
                return True
            del assignment[atom]
            used.discard(cls)
        return False

    def _exact_check() -> bool:
        diagonal = frozenset(p for p in unit if p[0] == p[1])
        id_union: set[Pair] = set()
        for atom in range(a.n):
            if a.is_identity_atom(atom):
                id_union |= classes[assignment[atom]]
        if frozenset(id_union) != diagonal:
            return False
        for atom in range(a.n):
            j = a.conv_atom(atom)
            expected = classes[assignment[j]] if j is not None else frozenset()
            if _otimes(classes[assignment[atom]], unit) != expected:
                return False
        for b in range(a.n):
            for c in range(a.n):
                image: set[Pair] = set()
                mask = a.comp_atoms(b, c)
                for x in range(a.n):
                    if mask >> x & 1:
                        image |= classes[assignment[x]]
                if circ(assignment[b], assignment[c]) != frozenset(image):
                    return False
        return True

    if search(0):
        return {a.atoms[i]: classes[assignment[i]] for i in range(a.n)}
    return None


def _components(rep: Representation) -> list[set[int]]:
    adjacency: dict[int, set[int]] = {u: set() for u in rep.base}
    for x, y in rep.unit:
        adjacency[x].add(y)
        adjacency[y].add(x)
    seen: set[int] = set()
    out = []
    for start in rep.base:
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            node = stack.pop()
            if node in comp:
                continue
            comp.add(node)
            stack.extend(adjacency[node] - comp)
        seen |= comp
        out.append(comp)
    return out


@dataclass
class ComponentReport:
    nodes: tuple[int, ...]
    edge_count: int
    covers_all_atoms: bool
    isomorphic: bool | None  # None when the component misses atoms

    def to_json(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "edge_count": self.edge_count,
            "covers_all_atoms": self.covers_all_atoms,
            "isomorphic": self.isomorphic,
        }


@dataclass
class RoundtripReport:
    axioms: AxiomReport
    saturated: bool
    verification: VerificationReport
    isomorphic: bool
    atom_map: dict[str, frozenset[Pair]] | None
    components: list[ComponentReport]

    def to_json(self) -> dict:
        return {
            "schema": "relgame.roundtrip/1",
            "axioms_ok": self.axioms.ok,
            "saturated": self.saturated,
            "verification": self.verification.to_json(),
            "isomorphic": self.isomorphic,
            "atom_map": None
            if self.atom_map is None
            else {
                name: [list(p) for p in sorted(pairs)]
                for name, pairs in self.atom_map.items()
            },
            "components": [c.to_json() for c in self.components],
        }


def roundtrip_check(
    u: ConcreteUnit,
    budget: int = 64,
    seed: int = 0,
    mode: str = "fifo",
) -> RoundtripReport:
    """Concrete unit -> structure -> play -> extraction -> isomorphism.

    The isomorphism target is the structure induced by the label classes
    of the whole extracted unit (components amalgamated); per-component
    results are reported for components that realize every atom.
    """
    a = build_concrete(u)
    report = check_axioms(a)
    if not report.ok:
        raise RelgameError(
            "concrete structure failed the axioms; this is a bug: "
            f"{report.failing_axioms()}"
        )
    trace = run_game(a, budget, seed=seed, mode=mode, axiom_report=report)
    rep = extract(trace)
    verification = verify_trace(trace, rep, a)

    atom_map = None
    isomorphic = False
    if trace.saturated and verification.all_ok():
        atom_map = find_isomorphism(a, _label_classes(rep), rep.unit)
        isomorphic = atom_map is not None

    components = []
    for comp in sorted(_components(rep), key=min):
        comp_unit = frozenset(p for p in rep.unit if p[0] in comp)
        comp_classes = [
            frozenset(p for p in pairs if p[0] in comp)
            for pairs in rep.h.values()
        ]
        comp_classes = sorted(
            (c for c in comp_classes if c), key=lambda c: min(c)
        )
        covers = len(comp_classes) == a.n
        iso: bool | None = None
        if covers:
            iso = find_isomorphism(a, comp_classes, comp_unit) is not None
        components.append(
            ComponentReport(
                nodes=tuple(sorted(comp)),
                edge_count=len(comp_unit),
                covers_all_atoms=covers,
                isomorphic=iso,
            )
        )

    return RoundtripReport(
        axioms=report,
        saturated=trace.saturated,
        verification=verification,
        isomorphic=isomorphic,
        atom_map=atom_map,
        components=components,
    )
