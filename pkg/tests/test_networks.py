"""Network conditions, initial networks, restrictions and chains."""

import pytest
from hypothesis import given, settings

from relgame import (
    ChainError,
    PreNetwork,
    StructureError,
    build_concrete,
    check_network,
    initial_network,
    network_from_json,
    network_to_dot,
    network_to_json,
    restrict,
    union_chain,
)

from strategies import units


def edges_of(n):
    return dict(n.labels)


class TestInitialNetwork:
    def test_full2_e01_shape(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        expected = {
            (0, 1): full2.atom_index("e01"),
            (0, 0): full2.atom_index("e00"),
            (1, 1): full2.atom_index("e11"),
            (1, 0): full2.atom_index("e10"),
        }
        assert edges_of(n) == expected
        assert check_network(n, full2) is None

    def test_arrow_single_edge(self, arrow):
        n = initial_network(arrow, 0, 0, 1)
        assert edges_of(n) == {(0, 1): 0}
        assert check_network(n, arrow) is None

    def test_refl1_identity_loop(self, refl1):
        n = initial_network(refl1, 0, 5, 5)
        assert n.nodes == {5}
        assert edges_of(n) == {(5, 5): 0}
        assert check_network(n, refl1) is None

    def test_node_equality_mismatch(self, full2):
        with pytest.raises(StructureError):
            initial_network(full2, full2.atom_index("e01"), 3, 3)
        with pytest.raises(StructureError):
            initial_network(full2, full2.atom_index("e00"), 0, 1)


@settings(max_examples=60, deadline=None)
@given(units(max_base=3))
def test_initial_networks_always_pass(u):
    # for every atom of every concrete structure the seed network passes
    a = build_concrete(u)
    for atom in range(a.n):
        x, y = (0, 0) if a.is_identity_atom(atom) else (0, 1)
        assert check_network(initial_network(a, atom, x, y), a) is None


class TestCheckNetwork:
    def test_identity_label_on_non_loop_is_n1a(self, full2):
        n = PreNetwork(frozenset({0, 1}), {(0, 1): full2.atom_index("e00")})
        violation = check_network(n, full2)
        assert violation.condition == "N1a"
        assert violation.nodes == (0, 1)

    def test_missing_loop_is_n1b(self, full2):
        n = PreNetwork(frozenset({0, 1}), {(0, 1): full2.atom_index("e01")})
        assert check_network(n, full2).condition == "N1b"

    def test_missing_converse_edge_is_n1d(self, full2):
        e = full2.atom_index
        n = PreNetwork(
            frozenset({0, 1}),
            {(0, 1): e("e01"), (0, 0): e("e00"), (1, 1): e("e11")},
        )
        assert check_network(n, full2).condition == "N1d"

    def test_wrong_converse_label_is_n2(self, sym2):
        # both directions present but labeled identically: e01 conv is e10
        n = PreNetwork(
            frozenset({0, 1}),
            {(0, 1): sym2.atom_index("e01"), (1, 0): sym2.atom_index("e01")},
        )
        assert check_network(n, sym2).condition == "N2"

    def test_bad_triangle_is_n3(self, full2):
        # e01 composed with e01 is empty, so the triangle is inconsistent,
        # while loops and converses keep N1 and N2 satisfied
        e = full2.atom_index
        labels = {
            (0, 1): e("e01"), (0, 2): e("e01"), (2, 1): e("e01"),
            (0, 0): e("e00"), (1, 1): e("e11"), (2, 2): e("e11"),
            (1, 0): e("e10"), (2, 0): e("e10"), (1, 2): e("e10"),
        }
        violation = check_network(PreNetwork(frozenset({0, 1, 2}), labels), full2)
        assert violation.condition == "N3"
        assert violation.nodes == (0, 1, 2)
        assert violation.atoms == ("e01", "e01", "e01")

    def test_unknown_label_rejected(self, full2):
        n = PreNetwork(frozenset({0}), {(0, 0): 99})
        with pytest.raises(StructureError):
            check_network(n, full2)

    def test_empty_passes(self, full2):
        assert check_network(PreNetwork.empty(), full2) is None


class TestRestrict:
    def test_full_restriction_is_identity(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        r = restrict(n, n.nodes)
        assert r.nodes == n.nodes and edges_of(r) == edges_of(n)

    def test_single_node_keeps_loop(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        r = restrict(n, {0})
        assert edges_of(r) == {(0, 0): full2.atom_index("e00")}

    def test_empty_restriction(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        r = restrict(n, set())
        assert r.is_empty

    def test_restrict_outside_nodes(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        with pytest.raises(StructureError):
            restrict(n, {0, 7})


class TestUnionChain:
    def test_single(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        u = union_chain([n])
        assert u.nodes == n.nodes and edges_of(u) == edges_of(n)

    def test_ascending_pair_yields_larger(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        bigger = n.extended(
            {2, 3},
            [(2, 3, full2.atom_index("e01")),
             (2, 2, full2.atom_index("e00")),
             (3, 3, full2.atom_index("e11")),
             (3, 2, full2.atom_index("e10"))],
        )
        u = union_chain([n, bigger])
        assert edges_of(u) == edges_of(bigger)

    def test_conflicting_labels_rejected(self, full2):
        a = PreNetwork(frozenset({0}), {(0, 0): full2.atom_index("e00")})
        b = PreNetwork(frozenset({0}), {(0, 0): full2.atom_index("e11")})
        with pytest.raises(ChainError):
            union_chain([a, b])

    def test_non_containment_rejected(self, full2):
        a = PreNetwork(frozenset({0}), {(0, 0): full2.atom_index("e00")})
        b = PreNetwork(frozenset({1}), {(1, 1): full2.atom_index("e11")})
        with pytest.raises(ChainError):
            union_chain([a, b])

    def test_empty_chain(self):
        assert union_chain([]).is_empty


class TestSerialization:
    def test_json_roundtrip(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        data = network_to_json(n, full2)
        again = network_from_json(data, full2)
        assert again.nodes == n.nodes and edges_of(again) == edges_of(n)

    def test_unknown_atom_name(self, full2):
        data = {"nodes": [0], "edges": [{"from": 0, "to": 0, "atom": "zz"}]}
        with pytest.raises(StructureError):
            network_from_json(data, full2)

    def test_dot_shape(self, full2):
        n = initial_network(full2, full2.atom_index("e01"), 0, 1)
        dot = network_to_dot(n, full2)
        assert dot.startswith("digraph network {")
        assert 'n0 -> n1 [label="e01"];' in dot
        assert 'n1 -> n0 [label="e10" style=dashed];' in dot
        assert 'n0 -> n0 [label="e00" style=dashed];' in dot


def test_restrictions_of_witness_extensions_are_networks(full3):
    # the three restrictions used by the winning argument: old nodes,
    # {x, z} and {z, y} of a fresh witness extension
    from relgame import WitnessMove
    from relgame.game import respond_witness_move

    e = full3.atom_index
    n = initial_network(full3, e("e01"), 0, 1)
    extended, z = respond_witness_move(
        n, full3, WitnessMove(0, 1, e("e02"), e("e21")), fresh=2
    )
    assert z == 2
    for keep in (n.nodes, {0, 2}, {2, 1}):
        assert check_network(restrict(extended, keep), full3) is None
