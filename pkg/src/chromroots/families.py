"""Graph families: ``H_k``, ``F_k``, ``G_{i,j,k}``, generalized triangles, Whitney switches."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import count

from .graph import Graph, GraphError


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FamilyIndex:
    i: int
    j: int
    k: int

    def __post_init__(self):
        if min(self.i, self.j, self.k) < 0:
            raise ValueError(f"family indices must be non-negative, got {self}")

    def __iter__(self):
        return iter((self.i, self.j, self.k))

    @property
    def n_vertices(self) -> int:
        return 2 * (self.i + self.j + self.k) + 5

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


@dataclass(frozen=True)
class LabeledBridge:
    """A bridge with two attachment vertices.

    ``swapped`` records that the bridge was glued with the roles of its
    attachments exchanged, i.e. ``F(y, x, k)`` rather than ``F(x, y, k)``.
    """

    graph: Graph
    attach_x: int
    attach_y: int
    swapped: bool = False
    index: int | None = None

    def __post_init__(self):
        if self.attach_x == self.attach_y:
            raise GraphError("attachment vertices must be distinct")
        if self.attach_x not in self.graph or self.attach_y not in self.graph:
            raise GraphError("attachment vertices must belong to the bridge")


@lru_cache(maxsize=None)
def make_H(k: int) -> Graph:
    """``H_0 = K_3``; for ``k >= 1`` the path ``x_1 ... x_{2k+3}`` plus chords
    ``x_1 x_4``, ``x_{2k} x_{2k+3}`` and ``x_i x_{i+4}`` for even ``2 <= i <= 2k-2``.

    Vertex ``x_i`` has id ``i``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return Graph.from_edges([(1, 2), (2, 3), (1, 3)])
    n = 2 * k + 3
    edges = [(a, a + 1) for a in range(1, n)]
    edges.append((1, 4))
    edges.append((2 * k, 2 * k + 3))
    edges += [(a, a + 4) for a in range(2, 2 * k - 1, 2)]
    return Graph.from_edges(edges)


def make_F(k: int) -> LabeledBridge:
    """``F_k = H_k - x_1 x_2`` attached at ``x_1`` (x-side) and ``x_2`` (y-side)."""
    return LabeledBridge(make_H(k).delete_edge(1, 2), 1, 2, index=k)


@lru_cache(maxsize=None)
def _make_G(i: int, j: int, k: int) -> Graph:
    x, y = 0, 1
    fresh = count(2)
    g = Graph.from_edges([], [x, y])
    for idx, (ax, ay) in ((i, (x, y)), (j, (x, y)), (k, (y, x))):
        bridge = make_F(idx)
        mapping = {bridge.attach_x: ax, bridge.attach_y: ay}
        for v in bridge.graph.vertices:
            if v not in mapping:
                mapping[v] = next(fresh)
        g = g.union(bridge.graph.relabel(mapping))
    return g


def make_G(i, j: int | None = None, k: int | None = None) -> Graph:
    """``G_{i,j,k}``: vertices ``x = 0`` and ``y = 1`` joined by the bridges
    ``F(x,y,i)``, ``F(x,y,j)`` and ``F(y,x,k)``.

    Accepts either a :class:`FamilyIndex` or three integers.
    """
    if isinstance(i, FamilyIndex):
        idx = i
    elif isinstance(i, tuple):
        idx = FamilyIndex(*i)
    else:
        idx = FamilyIndex(i, j, k)
    return _make_G(idx.i, idx.j, idx.k)


def whitney_switch(g: Graph, cut: tuple, component) -> Graph:
    """Re-attach ``component`` of ``G - {x,y}`` with the roles of ``x`` and ``y`` exchanged."""
    x, y = cut
    if x == y or x not in g or y not in g:
        raise GraphError(f"invalid cut {cut!r}")
    rest = g.remove_vertices([x, y])
    comps = rest.components()
    if len(comps) < 2:
        raise GraphError(f"{cut!r} is not a cut-set")
    comp = frozenset(component)
    if comp not in comps:
        raise GraphError("component is not a connected component of G - {x, y}")
    swap = {x: y, y: x}
    adj = {}
    for v, ns in g.adjacency.items():
        if v in comp:
            adj[v] = frozenset(swap.get(u, u) for u in ns)
        elif v in swap:
            outside = frozenset(u for u in ns if u not in comp)
            inside = frozenset(u for u in g.neighbors(swap[v]) if u in comp)
            adj[v] = outside | inside
        else:
            adj[v] = ns
    return Graph._raw(adj)


def make_generalized_triangle(seed: int, steps: int) -> Graph:
    """Start from ``K_3`` and ``steps`` times replace a random edge ``uv`` by
    two paths ``u-a-v`` and ``u-b-v`` through new vertices."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    g = Graph.complete(3)
    nxt = 3
    for _ in range(steps):
        u, v = rng.choice(g.edges)
        a, b = nxt, nxt + 1
        nxt += 2
        g = g.delete_edge(u, v)
        g = Graph.from_edges(g.edges + [(u, a), (a, v), (u, b), (b, v)], g.vertices)
    return g


def compositions(total: int):
    """All ``(i, j, k)`` with non-negative entries summing to ``total``, lexicographic."""
    for i in range(total + 1):
        for j in range(total - i + 1):
            yield FamilyIndex(i, j, total - i - j)


def match_family(g: Graph, check_preconditions: bool = True) -> FamilyIndex | None:
    """Lexicographically smallest ``(i,j,k)`` with ``P(G) = P(G_{i,j,k})``.

    ``G`` must have property Delta, at least one 2-cut and a 3-leaf
    spanning tree.  ``None`` means the characterisation failed for ``G``.
    """
    from .chromatic import chromatic_polynomial
    from .structure import find_spanning_tree_max_leaves, has_property_delta

    if check_preconditions:
        delta = has_property_delta(g)
        if not delta:
            raise PreconditionError(f"graph lacks property Delta ({delta.clause})")
        if not g.two_cuts():
            raise PreconditionError("graph has no 2-cut")
        if find_spanning_tree_max_leaves(g, 3) is None:
            raise PreconditionError("graph has no 3-leaf spanning tree")
    if (g.n - 5) % 2 or g.n < 5:
        return None
    target = chromatic_polynomial(g)
    for idx in compositions((g.n - 5) // 2):
        if chromatic_polynomial(make_G(idx)) == target:
            return idx
    return None
