"""The network-building game with the builder's winning strategy.

The adversary's moves are restricted to atoms (atom moves) and atom
pairs (witness moves); by complete additivity this realizes every
element-level demand, and it makes saturation detectable.  A
deterministic FIFO scheduler plays the adversary: the queue starts with
one atom move per atom, and whenever an edge labeled ``a`` appears, a
witness obligation ``(x, y, b, c)`` is queued for every atom pair with
``a`` below ``b;c`` (in lexicographic atom order, each obligation only
once).  An optional seeded random mode pops a random queue entry instead
and is used to fuzz the winning invariant.

The builder responds per the winning strategy: an atom move adds a
disjoint initial network on fresh nodes; a witness move is a no-op when
some existing node already witnesses it, and otherwise adds a single
fresh node with the edge pattern dictated by the atom calculus.  After
every round the new network is checked against N1 - N3; a violation
aborts the play as an implementation bug.

Plays are finite: rounds stop at the budget or at saturation (empty
queue).  Unsaturated plays are reported honestly via the pending queue
snapshot in the trace.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterator

from .algebra import AtomStructure
from .atoms import AtomProfiles, profile_atoms
from .axioms import AxiomReport, check_axioms
from .errors import GameInvariantError, GameRefusedError, StructureError
from .networks import PreNetwork, check_network, initial_network

__all__ = [
    "AtomMove",
    "WitnessMove",
    "Scheduler",
    "respond_atom_move",
    "respond_witness_move",
    "run_game",
    "RoundRecord",
    "PlayTrace",
]


@dataclass(frozen=True)
class AtomMove:
    atom: int

    def to_json(self, a: AtomStructure) -> dict:
        return {"type": "atom", "atom": a.atoms[self.atom]}


@dataclass(frozen=True)
class WitnessMove:
    x: int
    y: int
    b: int
    c: int

    def to_json(self, a: AtomStructure) -> dict:
        return {
            "type": "witness",
            "x": self.x,
            "y": self.y,
            "b": a.atoms[self.b],
            "c": a.atoms[self.c],
        }


Move = AtomMove | WitnessMove


class Scheduler:
    """Fair adversary: FIFO queue of moves, optionally drained at random."""

    def __init__(
        self,
        structure: AtomStructure,
        mode: str = "fifo",
        seed: int = 0,
    ) -> None:
        if mode not in ("fifo", "random"):
            raise ValueError(f"unknown scheduler mode {mode!r}")
        self.structure = structure
        self.mode = mode
        self.queue: list[Move] = [AtomMove(i) for i in range(structure.n)]
        self._seen: set[tuple[int, int, int, int]] = set()
        self._rng = random.Random(seed)

    def note_edge(self, x: int, y: int, atom: int) -> None:
        """Queue the witness obligations of a freshly labeled edge."""
        a = self.structure
        for b in range(a.n):
            for c in range(a.n):
                if not a.comp_atoms(b, c) >> atom & 1:
                    continue
                key = (x, y, b, c)
                if key in self._seen:
                    continue
                self._seen.add(key)
                self.queue.append(WitnessMove(x, y, b, c))

    def next_move(self) -> Move | None:
        """Pop the next move, or None at saturation."""
        if not self.queue:
            return None
        if self.mode == "fifo":
            return self.queue.pop(0)
        return self.queue.pop(self._rng.randrange(len(self.queue)))

    def pending(self) -> tuple[Move, ...]:
        return tuple(self.queue)


def respond_atom_move(
    network: PreNetwork,
    a: AtomStructure,
    atom: int,
    fresh: tuple[int, int],
    profiles: AtomProfiles | None = None,
) -> PreNetwork:
    """Extend disjointly by the initial network of ``atom`` on fresh nodes."""
    p = profiles or profile_atoms(a)
    x, y = fresh
    if x in network.nodes or y in network.nodes:
        raise StructureError("fresh nodes already occur in the network")
    if p[atom].is_identity:
        y = x
    piece = initial_network(a, atom, x, y, p)
    return network.extended(piece.nodes, [(u, v, w) for (u, v), w in piece.labels.items()])


def respond_witness_move(
    network: PreNetwork,
    a: AtomStructure,
    move: WitnessMove,
    fresh: int,
    profiles: AtomProfiles | None = None,
) -> tuple[PreNetwork, int | None]:
    """Answer a witness obligation.

    Returns the (possibly unchanged) network and the witnessing node:
    an existing node when one already carries the required labels, else
    the fresh node added with the strategy's edge pattern.  The fresh
    branch asserts the strategy's proof obligations: the split atoms are
    non-identity, and a fresh loop label agrees between ``end`` of the
    left atom and ``start`` of the right one.
    """
    p = profiles or profile_atoms(a)
    labels = network.labels
    edge_atom = labels.get((move.x, move.y))
    if edge_atom is None:
        raise StructureError(f"edge ({move.x}, {move.y}) not in network")
    if not a.comp_atoms(move.b, move.c) >> edge_atom & 1:
        raise StructureError(
            f"invalid witness move: {a.atoms[edge_atom]} not below "
            f"{a.atoms[move.b]};{a.atoms[move.c]}"
        )
    for z in sorted(network.nodes):
        if labels.get((move.x, z)) == move.b and labels.get((z, move.y)) == move.c:
            return network, z

    bp, cp = p[move.b], p[move.c]
    if bp.is_identity or cp.is_identity:
        raise GameInvariantError(
            "fresh witness split through an identity atom: "
            f"{a.atoms[move.b]};{a.atoms[move.c]} under {a.atoms[edge_atom]}"
        )
    z = fresh
    if z in network.nodes:
        raise StructureError("fresh node already occurs in the network")
    edges = [(move.x, z, move.b), (z, move.y, move.c)]
    if bp.conv is not None:
        edges.append((z, move.x, bp.conv))
    if cp.conv is not None:
        edges.append((move.y, z, cp.conv))
    if bp.has_end:
        if not cp.has_st or bp.e_atom != cp.s_atom:
            raise GameInvariantError(
                f"loop label mismatch at fresh witness: end({a.atoms[move.b]}) "
                f"vs start({a.atoms[move.c]})"
            )
        edges.append((z, z, bp.e_atom))
    try:
        return network.extended({z}, edges), z
    except StructureError as exc:
        raise GameInvariantError(f"conflicting witness edges: {exc}") from exc


@dataclass(frozen=True)
class RoundRecord:
    round: int
    move: Move
    # "new-component" for atom moves, "existing"/"fresh" for witness moves
    response: str
    witness_node: int | None
    new_nodes: tuple[int, ...]
    new_edges: tuple[tuple[int, int, int], ...]

    def to_json(self, a: AtomStructure) -> dict:
        return {
            "round": self.round,
            "move": self.move.to_json(a),
            "response": self.response,
            "witness_node": self.witness_node,
            "new_nodes": list(self.new_nodes),
            "new_edges": [[x, y, a.atoms[atom]] for x, y, atom in self.new_edges],
            "network": self.round,
        }


@dataclass
class PlayTrace:
    """Complete record of one play; replays to bit-identical serialization."""

    structure_digest: str
    atoms: tuple[str, ...]
    budget: int
    seed: int
    mode: str
    warnings: list[str]
    rounds: list[RoundRecord]
    pending: tuple[Move, ...]
    saturated: bool
    rounds_used: int
    final: PreNetwork

    def networks(self) -> Iterator[PreNetwork]:
        """Replay the chain of networks, one per round, from the deltas."""
        current = PreNetwork.empty()
        for rec in self.rounds:
            current = current.extended(rec.new_nodes, rec.new_edges)
            yield current

    def to_json(self, a: AtomStructure) -> dict:
        from .networks import network_to_json

        return {
            "schema": "relgame.trace/1",
            "structure": self.structure_digest,
            "atoms": list(self.atoms),
            "budget": self.budget,
            "seed": self.seed,
            "mode": self.mode,
            "warnings": list(self.warnings),
            "rounds": [r.to_json(a) for r in self.rounds],
            "pending": [m.to_json(a) for m in self.pending],
            "saturated": self.saturated,
            "rounds_used": self.rounds_used,
            "final_network": network_to_json(self.final, a),
        }

    def serialize(self, a: AtomStructure) -> str:
        return json.dumps(self.to_json(a), indent=2, ensure_ascii=False) + "\n"


def run_game(
    a: AtomStructure,
    budget: int,
    seed: int = 0,
    mode: str = "fifo",
    axiom_report: AxiomReport | None = None,
) -> PlayTrace:
    """Run one play against the scheduled adversary.

    The structure must pass the axiom check (done here when no report is
    passed in; a sampled-mode report is accepted with a warning recorded
    in the trace).  Every network played is checked against N1 - N3; a
    violation raises :class:`GameInvariantError` since the strategy is
    supposed to win.  Deterministic in (structure, budget, seed, mode).
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    report = axiom_report if axiom_report is not None else check_axioms(a)
    if not report.ok:
        raise GameRefusedError(
            f"structure fails axioms: {', '.join(report.failing_axioms())}"
        )
    warnings = []
    if report.mode == "sampled":
        warnings.append(
            "axiom check ran in sampled mode; REL membership is not certain"
        )
    if budget < a.n:
        warnings.append(
            f"budget {budget} is below the atom count {a.n}; "
            "the play cannot saturate"
        )

    profiles = profile_atoms(a, axioms_ok=report.mode == "exhaustive")
    sched = Scheduler(a, mode=mode, seed=seed)
    network = PreNetwork.empty()
    counter = 0
    rounds: list[RoundRecord] = []

    for rnd in range(1, budget + 1):
        move = sched.next_move()
        if move is None:
            break
        if isinstance(move, AtomMove):
            fresh = (counter, counter + 1)
            extended = respond_atom_move(network, a, move.atom, fresh, profiles)
            counter += len(extended.nodes) - len(network.nodes)
            response, wnode = "new-component", None
        else:
            extended, wnode = respond_witness_move(
                network, a, move, counter, profiles
            )
            if wnode == counter and len(extended.nodes) > len(network.nodes):
                counter += 1
                response = "fresh"
            else:
                response = "existing"
        new_nodes = tuple(sorted(extended.nodes - network.nodes))
        new_edges = tuple(
            (x, y, extended.labels[(x, y)])
            for (x, y) in sorted(set(extended.labels) - set(network.labels))
        )
        violation = check_network(extended, a, profiles)
        if violation is not None:
            raise GameInvariantError(
                f"round {rnd}: network violates {violation.condition}: "
                f"{violation.message}"
            )
        network = extended
        rounds.append(
            RoundRecord(rnd, move, response, wnode, new_nodes, new_edges)
        )
        for x, y, atom in new_edges:
            sched.note_edge(x, y, atom)

    pending = sched.pending()
    return PlayTrace(
        structure_digest=a.digest(),
        atoms=a.atoms,
        budget=budget,
        seed=seed,
        mode=mode,
        warnings=warnings,
        rounds=rounds,
        pending=pending,
        saturated=not pending,
        rounds_used=len(rounds),
        final=network,
    )
