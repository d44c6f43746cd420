import itertools
import random

import networkx as nx
import pytest

from chromroots.graph import DisconnectedError, Graph, GraphError, bridge_decomposition

from conftest import random_connected_graph, random_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def brute_two_cuts(g: Graph) -> list[tuple]:
    return sorted(p for p in itertools.combinations(g.vertices, 2)
                  if not g.remove_vertices(p).is_connected())


def test_basic_constructors():
    assert Graph.complete(4).m == 6
    assert Graph.cycle(5).m == 5
    assert Graph.path(4).edges == [(0, 1), (1, 2), (2, 3)]
    k23 = Graph.complete_bipartite(2, 3)
    assert (k23.n, k23.m) == (5, 6)
    assert sorted(k23.degree(v) for v in k23) == [2, 2, 2, 3, 3]
    with pytest.raises(GraphError):
        Graph.from_edges([(1, 1)])


def test_delete_and_contract():
    k4 = Graph.complete(4)
    d = k4.delete_edge(0, 1)
    assert d.m == 5 and not d.has_edge(0, 1) and d.n == 4
    c = k4.contract_edge(0, 1)
    assert c == Graph.complete(3).relabel({0: 0, 1: 2, 2: 3})
    assert k4.m == 6  # unchanged
    with pytest.raises(GraphError):
        d.delete_edge(0, 1)
    with pytest.raises(GraphError):
        d.contract_edge(0, 1)


def test_contract_edge_count_invariant(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 9), 0.5)
        for u, v in g.edges:
            common = len(g.neighbors(u) & g.neighbors(v))
            c = g.contract_edge(u, v)
            assert c.n == g.n - 1
            assert c.m == g.m - 1 - common


def test_components_and_connectivity():
    g = Graph.from_edges([(0, 1), (2, 3)], [4])
    assert sorted(map(sorted, g.components())) == [[0, 1], [2, 3], [4]]
    assert not g.is_connected()
    assert Graph.complete(1).is_connected()
    with pytest.raises(DisconnectedError):
        g.blocks()


def test_blocks_match_networkx(rng):
    for _ in range(150):
        g = random_connected_graph(rng, rng.randint(1, 12), rng.random() * 0.4)
        ours = sorted(sorted(b) for b in g.block_vertex_sets())
        theirs = sorted(sorted(b) for b in nx.biconnected_components(to_nx(g))) if g.n > 1 else [[0]]
        assert ours == theirs
        assert g.cut_vertices() == set(nx.articulation_points(to_nx(g)))


def test_block_cut_tree_is_tree(rng):
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 12), rng.random() * 0.3)
        blocks = g.block_vertex_sets()
        cuts = g.cut_vertices()
        bc = nx.Graph()
        bc.add_nodes_from(("b", i) for i in range(len(blocks)))
        bc.add_nodes_from(("c", v) for v in cuts)
        for i, b in enumerate(blocks):
            for v in b & cuts:
                bc.add_edge(("b", i), ("c", v))
        assert nx.is_tree(bc)
        assert sum(b.m for b in g.blocks()) == g.m


def test_two_cuts_examples():
    k23 = Graph.complete_bipartite(2, 3)
    assert k23.two_cuts() == [(0, 1)]
    assert Graph.complete(5).two_cuts() == []
    assert Graph.cycle(4).two_cuts() == [(0, 2), (1, 3)]
    assert not k23.is_three_connected()
    assert Graph.complete(4).is_three_connected()
    assert not Graph.complete(3).is_three_connected()


def test_two_cuts_match_brute_force(rng):
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(4, 10), rng.random() * 0.6)
        assert g.two_cuts() == brute_two_cuts(g)


def test_bridge_decomposition_reassembles(rng):
    checked = 0
    while checked < 60:
        g = random_connected_graph(rng, rng.randint(4, 10), rng.random() * 0.5)
        for x, y in g.two_cuts():
            dec = bridge_decomposition(g, x, y)
            assert len(dec) == len(g.remove_vertices([x, y]).components()) >= 2
            edges = set()
            inner = set()
            for b in dec.bridges:
                assert x in b and y in b
                if g.is_nonseparable():
                    assert b.is_connected()
                edges |= set(b.edges)
                own = set(b.vertices) - {x, y}
                assert not (own & inner)
                inner |= own
            assert edges == set(g.edges)
            assert inner | {x, y} == set(g.vertices)
            checked += 1
    with pytest.raises(GraphError):
        bridge_decomposition(Graph.complete(4), 0, 1)


def test_edge_list_round_trip(rng):
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10), 0.3)
        assert Graph.from_edge_list(g.to_edge_list()) == g
        assert Graph.from_json_dict(g.to_json_dict()) == g


def test_edge_list_parsing():
    text = "# comment\n\n0 1  # trailing\n1 2\n5\n"
    g = Graph.from_edge_list(text)
    assert g.vertices == [0, 1, 2, 5] and g.m == 2
    with pytest.raises(GraphError):
        Graph.from_edge_list("0 1 2\n")
    with pytest.raises(GraphError):
        Graph.from_edge_list("a b\n")
    with pytest.raises(GraphError):
        Graph.from_edge_list("-1 2\n")
