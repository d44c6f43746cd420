import itertools

import networkx as nx
import pytest

from chromroots.canon import are_isomorphic
from chromroots.families import make_F, make_G, make_H
from chromroots.graph import DisconnectedError, Graph, GraphError
from chromroots.structure import (bridge_contract, bridge_plus_edge, find_spanning_tree_max_leaves,
                                  has_property_delta)


def small_connected_graphs(max_n=6):
    for h in nx.graph_atlas_g():
        if 2 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            yield Graph.from_edges(h.edges, h.nodes)


def has_hamiltonian_path(g: Graph) -> bool:
    return any(all(g.has_edge(a, b) for a, b in zip(p, p[1:])) for p in itertools.permutations(g.vertices))


def min_leaves_brute(g: Graph) -> int:
    best = g.n
    for sub in itertools.combinations(g.edges, g.n - 1):
        t = Graph.from_edges(sub, g.vertices)
        if t.is_connected():
            best = min(best, sum(1 for v in t if t.degree(v) == 1))
    return best


def check_tree(g: Graph, res, max_leaves):
    t = Graph.from_edges(res.edges, g.vertices)
    assert t.m == g.n - 1 and t.is_connected()
    assert all(g.has_edge(u, v) for u, v in res.edges)
    leaves = sum(1 for v in t if t.degree(v) == 1)
    assert leaves == res.leaf_count <= max_leaves
    assert res.degree3_count == sum(1 for v in t if t.degree(v) == 3)


def test_two_leaves_iff_hamiltonian_path():
    for g in small_connected_graphs(6):
        res = find_spanning_tree_max_leaves(g, 2)
        assert (res is not None) == has_hamiltonian_path(g)
        if res is not None:
            check_tree(g, res, 2)


def test_leaf_bound_matches_brute_force():
    for g in small_connected_graphs(6):
        best = min_leaves_brute(g)
        for L in (2, 3, 4):
            res = find_spanning_tree_max_leaves(g, L)
            assert (res is not None) == (best <= L)
            if res is not None:
                check_tree(g, res, L)


def test_spanning_tree_examples():
    assert find_spanning_tree_max_leaves(Graph.star(4), 3) is None
    assert find_spanning_tree_max_leaves(Graph.star(3), 3).leaf_count == 3
    res = find_spanning_tree_max_leaves(make_G(4, 2, 3), 3)
    check_tree(make_G(4, 2, 3), res, 3)
    with pytest.raises(ValueError):
        find_spanning_tree_max_leaves(Graph.path(3), 1)
    with pytest.raises(DisconnectedError):
        find_spanning_tree_max_leaves(Graph.from_edges([(0, 1), (2, 3)]), 3)


def test_delta_examples():
    assert has_property_delta(Graph.complete_bipartite(2, 3))
    assert has_property_delta(Graph.path(4)).clause == "separable"
    assert has_property_delta(Graph.complete(4)).clause == "three-connected"
    # C4: each 2-cut leaves two bridges
    assert has_property_delta(Graph.cycle(4)).clause == "bridge-count"
    # K4 minus an edge: the 2-cut is an edge
    assert has_property_delta(Graph.complete(4).delete_edge(2, 3)).clause == "cut-is-edge"
    # K_{2,4}: four bridges
    assert has_property_delta(Graph.complete_bipartite(2, 4)).clause == "bridge-count"
    # theta graph with one bridge replaced by K4-e on x, y (non-separable bridge)
    g = Graph.from_edges([(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (0, 5), (4, 5), (4, 1), (5, 1)])
    r = has_property_delta(g)
    assert not r and r.clause == "bridge-nonseparable" and r.cut == (0, 1)
    for k in range(1, 6):
        assert has_property_delta(make_H(k))


def test_bridge_operations():
    for k in range(0, 6):
        f = make_F(k)
        assert bridge_plus_edge(f) == make_H(k)
        assert bridge_contract(f).n == f.graph.n - 1
    assert are_isomorphic(bridge_plus_edge(make_F(1)), Graph.complete_bipartite(2, 3))
    with pytest.raises(GraphError):
        bridge_plus_edge(make_F(0).__class__(make_H(1), 1, 2))
