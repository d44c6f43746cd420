import random

import networkx as nx

from chromroots.canon import are_isomorphic, canonical_graph, canonical_key
from chromroots.graph import Graph

from conftest import random_graph


def shuffled(g: Graph, rng: random.Random) -> Graph:
    vs = g.vertices
    perm = vs[:]
    rng.shuffle(perm)
    return g.relabel(dict(zip(vs, perm)))


def test_key_invariant_under_relabelling(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 10), rng.random())
        assert canonical_key(shuffled(g, rng)) == canonical_key(g)
        assert are_isomorphic(canonical_graph(g), g)


def test_matches_networkx(rng):
    for _ in range(300):
        n = rng.randint(1, 8)
        m = rng.randint(0, n * (n - 1) // 2)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph.from_edges(rng.sample(pairs, m), range(n))
        h = Graph.from_edges(rng.sample(pairs, m), range(n))
        expected = nx.is_isomorphic(_nx(g), _nx(h))
        assert are_isomorphic(g, h) == expected


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_regular_graphs():
    petersen = Graph.from_edges(nx.petersen_graph().edges)
    assert are_isomorphic(petersen, shuffled(petersen, random.Random(1)))
    # C6 and two triangles are 2-regular on 6 vertices but not isomorphic
    two_triangles = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(Graph.cycle(6), two_triangles)
    assert are_isomorphic(Graph.complete_bipartite(3, 3), Graph.from_edges(nx.circulant_graph(6, [1, 3]).edges))
