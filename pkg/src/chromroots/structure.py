"""Structural predicates: property Delta, spanning trees with few leaves, bridge helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import LabeledBridge
from .graph import DisconnectedError, Graph, GraphError, bridge_decomposition


@dataclass(frozen=True)
class SpanningTreeResult:
    edges: tuple[tuple, ...]
    leaf_count: int
    degree3_count: int

    def to_dict(self) -> dict:
        return {"edges": [list(e) for e in self.edges], "leaf_count": self.leaf_count,
                "degree3_count": self.degree3_count}


def _tree_result(edges: list[tuple]) -> SpanningTreeResult:
    deg: dict = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    es = tuple(sorted((u, v) if u <= v else (v, u) for u, v in edges))
    return SpanningTreeResult(es, sum(1 for d in deg.values() if d == 1),
                              sum(1 for d in deg.values() if d == 3))


def find_spanning_tree_max_leaves(g: Graph, max_leaves: int) -> SpanningTreeResult | None:
    """A spanning tree with at most ``max_leaves`` leaves, or ``None``.

    Exhaustive branch and bound over frontier edges (include / forbid).  A
    tree vertex of tree-degree 1 with no usable edge left to the outside is
    a permanent leaf, as is any outside vertex with a single usable edge;
    branches are cut once those exceed the budget.
    """
    if max_leaves < 2:
        raise ValueError("max_leaves must be at least 2")
    if not g.is_connected():
        raise DisconnectedError("spanning tree search requires a connected graph")
    n = g.n
    if n <= 1:
        return SpanningTreeResult((), 0, 0)
    adj = {v: set(g.neighbors(v)) for v in g}
    root = min(g.vertices, key=lambda v: (g.degree(v), v))
    in_tree = {root}
    tdeg = {v: 0 for v in g}
    tree_edges: list[tuple] = []

    def feasible() -> bool:
        outside = [v for v in adj if v not in in_tree]
        forced = 0
        for v in in_tree:
            if tdeg[v] <= 1 and not any(w not in in_tree for w in adj[v]):
                if tdeg[v] == 0:
                    return False
                forced += 1
        for v in outside:
            if not adj[v]:
                return False
            if len(adj[v]) == 1:
                forced += 1
        if forced > max_leaves:
            return False
        # every outside vertex must still be reachable through usable edges
        seen = set(in_tree)
        stack = list(in_tree)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    def pick_edge():
        best = None
        best_key = None
        for u in in_tree:
            for w in adj[u]:
                if w in in_tree:
                    continue
                key = (tdeg[u] != 1, len(adj[w]), tdeg[u], u, w)
                if best_key is None or key < best_key:
                    best, best_key = (u, w), key
        return best

    def search() -> list[tuple] | None:
        if len(in_tree) == n:
            leaves = sum(1 for v in adj if tdeg[v] == 1)
            return list(tree_edges) if leaves <= max_leaves else None
        if not feasible():
            return None
        e = pick_edge()
        if e is None:
            return None
        u, w = e
        # include u-w
        in_tree.add(w)
        tdeg[u] += 1
        tdeg[w] += 1
        tree_edges.append(e)
        found = search()
        tree_edges.pop()
        tdeg[u] -= 1
        tdeg[w] -= 1
        in_tree.discard(w)
        if found is not None:
            return found
        # forbid u-w
        adj[u].discard(w)
        adj[w].discard(u)
        found = search()
        adj[u].add(w)
        adj[w].add(u)
        return found

    edges = search()
    return None if edges is None else _tree_result(edges)


@dataclass(frozen=True)
class DeltaResult:
    holds: bool
    clause: str | None = None
    cut: tuple | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {"holds": self.holds, "clause": self.clause,
                "cut": list(self.cut) if self.cut else None, "details": self.details}


def has_property_delta(g: Graph) -> DeltaResult:
    """Non-separable, not 3-connected, and every 2-cut ``{x,y}`` is a
    non-edge with exactly three bridges, each of them separable.

    On failure ``clause`` names the violated condition and ``cut`` the
    offending 2-cut where there is one.
    """
    if not g.is_nonseparable():
        return DeltaResult(False, "separable")
    if g.is_three_connected():
        return DeltaResult(False, "three-connected")
    cuts = g.two_cuts()
    for x, y in cuts:
        if g.has_edge(x, y):
            return DeltaResult(False, "cut-is-edge", (x, y))
        dec = bridge_decomposition(g, x, y)
        if len(dec) != 3:
            return DeltaResult(False, "bridge-count", (x, y), {"bridges": len(dec)})
        for b in dec.bridges:
            if b.is_nonseparable():
                return DeltaResult(False, "bridge-nonseparable", (x, y),
                                   {"bridge_vertices": b.vertices})
    return DeltaResult(True, details={"two_cuts": [list(c) for c in cuts]})


def bridge_plus_edge(b: LabeledBridge) -> Graph:
    """``B + xy``; the attachments must be non-adjacent."""
    if b.graph.has_edge(b.attach_x, b.attach_y):
        raise GraphError("attachment vertices are already adjacent")
    return b.graph.add_edge(b.attach_x, b.attach_y)


def bridge_contract(b: LabeledBridge) -> Graph:
    """``B / xy``: identify the attachments, merging parallel edges."""
    return b.graph.identify(b.attach_x, b.attach_y)
