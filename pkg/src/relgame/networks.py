"""Pre-networks, the network conditions N1 - N3, and their builders.

A pre-network is a finite node set with a partial atom-valued labeling
of node pairs.  A network additionally satisfies, for every edge
``(x, y)`` with label ``a``:

* N1a: ``a`` is an identity atom iff ``x == y``;
* N1b: ``st(a)`` non-zero iff the loop ``(x, x)`` is an edge;
* N1c: ``end(a)`` non-zero iff the loop ``(y, y)`` is an edge;
* N1d: the converse of ``a`` is non-zero iff ``(y, x)`` is an edge;
* N2: when ``(y, x)`` is an edge, its label converses back to ``a``;
* N3: for every triple with ``(x, y), (x, z), (z, y)`` all edges, the
  label of ``(x, y)`` lies below the product of the other two labels.

Labels are atoms, so the meet conditions reduce to table membership.
Pre-networks are value-like: extension returns a new instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .algebra import AtomStructure
from .atoms import AtomProfiles, profile_atoms
from .errors import ChainError, StructureError

__all__ = [
    "PreNetwork",
    "NetworkViolation",
    "check_network",
    "initial_network",
    "restrict",
    "union_chain",
    "network_to_json",
    "network_from_json",
    "network_to_dot",
]


@dataclass(frozen=True)
class PreNetwork:
    nodes: frozenset[int]
    labels: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (x, y) in self.labels:
            if x not in self.nodes or y not in self.nodes:
                raise StructureError(f"edge ({x}, {y}) uses an unknown node")

    @staticmethod
    def empty() -> "PreNetwork":
        return PreNetwork(frozenset(), {})

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.labels))

    def label(self, x: int, y: int) -> int | None:
        return self.labels.get((x, y))

    @property
    def is_empty(self) -> bool:
        return not self.nodes

    def extended(
        self,
        new_nodes: Iterable[int],
        new_edges: Iterable[tuple[int, int, int]],
    ) -> "PreNetwork":
        """New pre-network with extra nodes and labeled edges.

        Re-labeling an existing edge differently is an error; writing
        the same label twice is allowed (the initial-network shapes do
        this when the two endpoints coincide).
        """
        nodes = set(self.nodes)
        nodes.update(new_nodes)
        labels = dict(self.labels)
        for x, y, atom in new_edges:
            prev = labels.get((x, y))
            if prev is not None and prev != atom:
                raise StructureError(
                    f"edge ({x}, {y}) already labeled {prev}, refusing {atom}"
                )
            labels[(x, y)] = atom
        return PreNetwork(frozenset(nodes), labels)

    def contains(self, other: "PreNetwork") -> bool:
        """True when ``other`` is a subnetwork with agreeing labels."""
        if not other.nodes <= self.nodes:
            return False
        for edge, atom in other.labels.items():
            if self.labels.get(edge) != atom:
                return False
        return True


@dataclass(frozen=True)
class NetworkViolation:
    condition: str  # N1a | N1b | N1c | N1d | N2 | N3
    nodes: tuple[int, ...]
    atoms: tuple[str, ...]
    message: str

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "nodes": list(self.nodes),
            "atoms": list(self.atoms),
            "message": self.message,
        }


def check_network(
    n: PreNetwork,
    a: AtomStructure,
    profiles: AtomProfiles | None = None,
) -> NetworkViolation | None:
    """First violated network condition in canonical scan order, or None.

    Edges are scanned in sorted order for N1a-N1d and N2, then all
    triples with the three relevant edges present for N3.
    """
    p = profiles or profile_atoms(a)
    labels = n.labels
    for atom in labels.values():
        if not 0 <= atom < a.n:
            raise StructureError(f"unknown atom label {atom}")

    for (x, y) in sorted(labels):
        atom = labels[(x, y)]
        prof = p[atom]
        name = (a.atoms[atom],)
        if prof.is_identity != (x == y):
            return NetworkViolation(
                "N1a", (x, y), name,
                f"label {a.atoms[atom]} identity={prof.is_identity} on "
                f"{'loop' if x == y else 'non-loop'} ({x}, {y})",
            )
        if prof.has_st != ((x, x) in labels):
            return NetworkViolation(
                "N1b", (x, y), name,
                f"st({a.atoms[atom]}) non-zero is {prof.has_st} but loop "
                f"({x}, {x}) present is {(x, x) in labels}",
            )
        if prof.has_end != ((y, y) in labels):
            return NetworkViolation(
                "N1c", (x, y), name,
                f"end({a.atoms[atom]}) non-zero is {prof.has_end} but loop "
                f"({y}, {y}) present is {(y, y) in labels}",
            )
        if (prof.conv is not None) != ((y, x) in labels):
            return NetworkViolation(
                "N1d", (x, y), name,
                f"converse of {a.atoms[atom]} defined is {prof.conv is not None} "
                f"but reverse edge ({y}, {x}) present is {(y, x) in labels}",
            )
        back = labels.get((y, x))
        if back is not None and p[back].conv != atom:
            return NetworkViolation(
                "N2", (x, y), (a.atoms[atom], a.atoms[back]),
                f"label {a.atoms[back]} of ({y}, {x}) does not converse to "
                f"{a.atoms[atom]}",
            )

    successors: dict[int, list[int]] = {}
    for (x, z) in labels:
        successors.setdefault(x, []).append(z)
    for zs in successors.values():
        zs.sort()
    for (x, y) in sorted(labels):
        for z in successors.get(x, ()):
            right = labels.get((z, y))
            if right is None:
                continue
            left = labels[(x, z)]
            atom = labels[(x, y)]
            if not a.comp_atoms(left, right) >> atom & 1:
                return NetworkViolation(
                    "N3", (x, y, z),
                    (a.atoms[atom], a.atoms[left], a.atoms[right]),
                    f"{a.atoms[atom]} not below "
                    f"{a.atoms[left]};{a.atoms[right]} at ({x},{y}) via {z}",
                )
    return None


def initial_network(
    a: AtomStructure,
    atom: int,
    x: int,
    y: int,
    profiles: AtomProfiles | None = None,
) -> PreNetwork:
    """Two-node (or one-node) network seeded by a single atom edge.

    ``(x, y)`` carries the atom; the start loop, end loop and converse
    edge are added exactly when the profile says they exist.
    """
    p = profiles or profile_atoms(a)
    prof = p[atom]
    if prof.is_identity != (x == y):
        raise StructureError(
            f"atom {a.atoms[atom]} identity={prof.is_identity} requires "
            f"{'equal' if prof.is_identity else 'distinct'} nodes"
        )
    edges = [(x, y, atom)]
    if prof.has_st:
        edges.append((x, x, prof.s_atom))
    if prof.has_end:
        edges.append((y, y, prof.e_atom))
    if prof.conv is not None:
        edges.append((y, x, prof.conv))
    return PreNetwork.empty().extended({x, y}, edges)


def restrict(n: PreNetwork, keep: Iterable[int]) -> PreNetwork:
    """Restriction to a node subset; labels are inherited."""
    keep_set = frozenset(keep)
    if not keep_set <= n.nodes:
        raise StructureError(f"nodes {sorted(keep_set - n.nodes)} not in network")
    labels = {
        (x, y): atom
        for (x, y), atom in n.labels.items()
        if x in keep_set and y in keep_set
    }
    return PreNetwork(keep_set, labels)


def union_chain(networks: list[PreNetwork]) -> PreNetwork:
    """Union of a containment chain of pre-networks (given in chain order)."""
    result = PreNetwork.empty()
    for i, net in enumerate(networks):
        if not net.contains(result):
            raise ChainError(
                f"pre-network {i} does not extend its predecessor "
                "(node/edge containment or label agreement fails)"
            )
        result = net
    return result


# ----------------------------------------------------------------------
# serialization


def network_to_json(n: PreNetwork, a: AtomStructure) -> dict:
    return {
        "nodes": sorted(n.nodes),
        "edges": [
            {"from": x, "to": y, "atom": a.atoms[n.labels[(x, y)]]}
            for (x, y) in sorted(n.labels)
        ],
    }


def network_from_json(data: dict, a: AtomStructure) -> PreNetwork:
    if not isinstance(data, dict) or "nodes" not in data:
        raise StructureError("network object needs 'nodes' and 'edges'")
    nodes = data["nodes"]
    if not isinstance(nodes, list) or not all(isinstance(v, int) for v in nodes):
        raise StructureError("'nodes' must be a list of integers")
    labels: dict[tuple[int, int], int] = {}
    for e in data.get("edges", []):
        try:
            x, y, atom_name = e["from"], e["to"], e["atom"]
        except (TypeError, KeyError) as exc:
            raise StructureError(f"bad edge entry {e!r}") from exc
        if atom_name not in a.index:
            raise StructureError(f"unknown atom label {atom_name!r}")
        if (x, y) in labels:
            raise StructureError(f"duplicate edge ({x}, {y})")
        labels[(x, y)] = a.index[atom_name]
    return PreNetwork(frozenset(nodes), labels)


def network_to_dot(n: PreNetwork, a: AtomStructure) -> str:
    """DOT rendering: forward edges solid, converse edges and loops dashed."""
    lines = ["digraph network {", "  rankdir=LR;"]
    for node in sorted(n.nodes):
        lines.append(f'  n{node} [label="n{node}" shape=circle];')
    for (x, y) in sorted(n.labels):
        atom = a.atoms[n.labels[(x, y)]]
        dashed = x == y or ((y, x) in n.labels and y < x)
        style = " style=dashed" if dashed else ""
        lines.append(f'  n{x} -> n{y} [label="{atom}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
