"""The game engine: responses, scheduling, full plays and their invariants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relgame import (
    AtomMove,
    GameRefusedError,
    PreNetwork,
    Scheduler,
    StructureError,
    WitnessMove,
    build_concrete,
    check_axioms,
    check_network,
    profile_atoms,
    run_game,
)
from relgame.game import respond_atom_move, respond_witness_move

from strategies import units


class TestRespondAtomMove:
    def test_empty_plus_full2_atom(self, full2):
        n = respond_atom_move(PreNetwork.empty(), full2, full2.atom_index("e01"), (0, 1))
        assert len(n.nodes) == 2 and len(n.labels) == 4

    def test_empty_plus_arrow_atom(self, arrow):
        n = respond_atom_move(PreNetwork.empty(), arrow, 0, (0, 1))
        assert len(n.nodes) == 2 and len(n.labels) == 1

    def test_identity_atom_uses_single_node(self, refl1):
        n = respond_atom_move(PreNetwork.empty(), refl1, 0, (0, 1))
        assert n.nodes == {0}

    def test_disjoint_extension_keeps_old_component(self, full2):
        base = respond_atom_move(PreNetwork.empty(), full2, full2.atom_index("e01"), (0, 1))
        bigger = respond_atom_move(base, full2, full2.atom_index("e10"), (2, 3))
        assert {(x, y): a for (x, y), a in bigger.labels.items() if x < 2} == dict(base.labels)
        assert not any(
            (x < 2) != (y < 2) for (x, y) in bigger.labels
        )  # no edges between old and new


class TestRespondWitnessMove:
    def test_existing_witness_leaves_network_unchanged(self, full2):
        e = full2.atom_index
        n = respond_atom_move(PreNetwork.empty(), full2, e("e01"), (0, 1))
        got, z = respond_witness_move(n, full2, WitnessMove(0, 1, e("e00"), e("e01")), 99)
        assert z == 0 and got is n

    def test_fresh_witness_edge_pattern(self, full3):
        # splitting the 0->1 arrow through the middle point of the base
        e = full3.atom_index
        n = respond_atom_move(PreNetwork.empty(), full3, e("e01"), (0, 1))
        got, z = respond_witness_move(n, full3, WitnessMove(0, 1, e("e02"), e("e21")), 2)
        assert z == 2
        added = {k: v for k, v in got.labels.items() if k not in n.labels}
        assert added == {
            (0, 2): e("e02"),
            (2, 1): e("e21"),
            (2, 0): e("e20"),
            (1, 2): e("e12"),
            (2, 2): e("e22"),
        }
        assert check_network(got, full3) is None

    def test_invalid_pair_rejected(self, full2):
        e = full2.atom_index
        n = respond_atom_move(PreNetwork.empty(), full2, e("e01"), (0, 1))
        with pytest.raises(StructureError, match="invalid witness move"):
            respond_witness_move(n, full2, WitnessMove(0, 1, e("e01"), e("e01")), 2)

    def test_missing_edge_rejected(self, full2):
        e = full2.atom_index
        n = respond_atom_move(PreNetwork.empty(), full2, e("e01"), (0, 1))
        with pytest.raises(StructureError, match="not in network"):
            respond_witness_move(n, full2, WitnessMove(1, 1, e("e10"), e("e01")), 2)

    def test_loop_edge_witness(self, full2):
        # splitting the identity loop through a fresh point: the converse
        # edges coincide with the witness edges and must stay consistent
        e = full2.atom_index
        n = respond_atom_move(PreNetwork.empty(), full2, e("e00"), (0, 1))
        got, z = respond_witness_move(n, full2, WitnessMove(0, 0, e("e01"), e("e10")), 1)
        assert z == 1
        assert dict(got.labels) == {
            (0, 0): e("e00"), (0, 1): e("e01"),
            (1, 0): e("e10"), (1, 1): e("e11"),
        }


class TestScheduler:
    def test_seeded_with_atom_moves_in_order(self, full2):
        s = Scheduler(full2)
        assert s.next_move() == AtomMove(0)  # e00 first

    def test_witness_obligations_after_edges(self, full2):
        e = full2.atom_index
        s = Scheduler(full2)
        s.next_move()  # e00
        s.next_move()  # e01
        n = respond_atom_move(PreNetwork.empty(), full2, e("e01"), (0, 1))
        for (x, y), atom in sorted(n.labels.items()):
            s.note_edge(x, y, atom)
        queued = [m for m in s.pending() if isinstance(m, WitnessMove)]
        assert WitnessMove(0, 1, e("e00"), e("e01")) in queued
        assert WitnessMove(0, 1, e("e01"), e("e11")) in queued
        # obligations follow comp membership: e01 = e00;e01 = e01;e11 only
        for m in queued:
            label = n.labels[(m.x, m.y)]
            assert full2.comp_atoms(m.b, m.c) >> label & 1

    def test_obligations_not_duplicated(self, full2):
        s = Scheduler(full2)
        s.note_edge(0, 0, full2.atom_index("e00"))
        size = len(s.pending())
        s.note_edge(0, 0, full2.atom_index("e00"))
        assert len(s.pending()) == size


class TestRunGame:
    def test_arrow_saturates_after_one_round(self, arrow):
        t = run_game(arrow, 10)
        assert t.saturated and t.rounds_used == 1
        assert len(t.final.nodes) == 2 and len(t.final.labels) == 1

    def test_full2_saturates_with_small_components(self, full2):
        t = run_game(full2, 64)
        assert t.saturated
        # components never outgrow two nodes: every witness is internal
        comps = _components(t.final)
        assert all(len(c) <= 2 for c in comps)

    def test_refused_on_axiom_failure(self, full2_bad):
        with pytest.raises(GameRefusedError):
            run_game(full2_bad, 16)

    def test_budget_zero_gives_empty_trace(self, full3):
        t = run_game(full3, 0)
        assert t.rounds_used == 0 and t.final.is_empty and not t.saturated
        assert len(t.pending) == full3.n

    def test_budget_below_atom_count_warns(self, full3):
        t = run_game(full3, 5)
        assert any("below the atom count" in w for w in t.warnings)
        assert not t.saturated

    def test_sampled_axiom_mode_warns(self, full3):
        t = run_game(full3, 9)
        assert any("sampled" in w for w in t.warnings)

    def test_determinism_bit_exact(self, full3):
        a = run_game(full3, 120, seed=3, mode="random").serialize(full3)
        b = run_game(full3, 120, seed=3, mode="random").serialize(full3)
        assert a == b

    def test_seeds_differ(self, full3):
        a = run_game(full3, 120, seed=0, mode="random").serialize(full3)
        b = run_game(full3, 120, seed=1, mode="random").serialize(full3)
        assert a != b

    def test_chain_and_replay(self, full2):
        t = run_game(full2, 64)
        previous = PreNetwork.empty()
        for net in t.networks():
            assert net.contains(previous)
            previous = net
        assert dict(previous.labels) == dict(t.final.labels)

    def test_every_intermediate_is_a_network(self, full3):
        t = run_game(full3, 60)
        for net in t.networks():
            assert check_network(net, full3) is None

    def test_fresh_witness_purity(self, full3):
        # whenever the fresh branch ran, the split atoms are non-identity
        t = run_game(full3, 200)
        for rec in t.rounds:
            if rec.response == "fresh":
                assert not full3.is_identity_atom(rec.move.b)
                assert not full3.is_identity_atom(rec.move.c)

    def test_trace_json_schema(self, arrow):
        data = run_game(arrow, 4).to_json(arrow)
        assert data["schema"] == "relgame.trace/1"
        assert data["saturated"] is True
        assert data["rounds"][0]["move"] == {"type": "atom", "atom": "e01"}


def _components(network):
    adj = {u: set() for u in network.nodes}
    for x, y in network.labels:
        adj[x].add(y)
        adj[y].add(x)
    seen, comps = set(), []
    for start in network.nodes:
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v not in comp:
                comp.add(v)
                stack.extend(adj[v] - comp)
        seen |= comp
        comps.append(comp)
    return comps


@settings(max_examples=20, deadline=None)
@given(units(max_base=3), st.integers(0, 10))
def test_winning_invariant_on_random_structures(u, seed):
    # the central theorem-as-test: every played network passes N1-N3
    # (run_game checks each round internally and raises otherwise)
    a = build_concrete(u)
    report = check_axioms(a)
    t = run_game(a, 80, seed=seed, mode="random", axiom_report=report)
    assert t.rounds_used <= 80
