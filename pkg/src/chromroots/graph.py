"""Immutable simple graphs and the structural primitives used by the engine.

Vertex ids must be hashable and mutually comparable (ints in practice):
contraction keeps the smaller id of the merged pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping

Vertex = Hashable
Edge = tuple


class GraphError(ValueError):
    """Invalid graph operation (missing edge, loop, bad cut, ...)."""


class DisconnectedError(GraphError):
    pass


def _norm(u, v) -> tuple:
    return (u, v) if u <= v else (v, u)


class Graph:
    """A simple undirected graph with value semantics.

    Operations never mutate; they return new graphs.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, adj: Mapping[Vertex, Iterable[Vertex]] | None = None):
        table: dict = {}
        if adj:
            for v, nbrs in adj.items():
                table.setdefault(v, set())
                for u in nbrs:
                    if u == v:
                        raise GraphError(f"loop at {v!r}")
                    table[v].add(u)
                    table.setdefault(u, set()).add(v)
        self._adj: dict = {v: frozenset(ns) for v, ns in table.items()}
        self._m = sum(len(ns) for ns in self._adj.values()) // 2

    @classmethod
    def _raw(cls, adj: dict) -> "Graph":
        # trusted constructor: adj already symmetric with frozenset values
        g = cls.__new__(cls)
        g._adj = adj
        g._m = sum(len(ns) for ns in adj.values()) // 2
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Iterable[Vertex] = ()) -> "Graph":
        table: dict = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at {u!r}")
            table.setdefault(u, set()).add(v)
            table.setdefault(v, set()).add(u)
        return cls._raw({v: frozenset(ns) for v, ns in table.items()})

    # named small graphs, handy in tests and examples
    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(combinations(range(n), 2), range(n))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(((i, i + 1) for i in range(n - 1)), range(n))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(((i, (i + 1) % n) for i in range(n)), range(n))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(((i, a + j) for i in range(a) for j in range(b)), range(a + b))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.complete_bipartite(1, leaves)

    # -- basic queries ------------------------------------------------
    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: Vertex) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._adj)

    @property
    def vertices(self) -> list:
        return sorted(self._adj)

    @property
    def edges(self) -> list[tuple]:
        return sorted(_norm(u, v) for u in self._adj for v in self._adj[u] if u <= v)

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._adj and v in self._adj[u]

    @property
    def adjacency(self) -> Mapping[Vertex, frozenset]:
        return self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset((v, ns) for v, ns in self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- edits (all return new graphs) --------------------------------
    def _require_edge(self, u: Vertex, v: Vertex) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u!r}-{v!r} not in graph")

    def delete_edge(self, u: Vertex, v: Vertex) -> "Graph":
        self._require_edge(u, v)
        adj = dict(self._adj)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return Graph._raw(adj)

    def add_edge(self, u: Vertex, v: Vertex) -> "Graph":
        if u == v:
            raise GraphError(f"loop at {u!r}")
        if self.has_edge(u, v):
            raise GraphError(f"edge {u!r}-{v!r} already present")
        adj = dict(self._adj)
        adj[u] = adj.get(u, frozenset()) | {v}
        adj[v] = adj.get(v, frozenset()) | {u}
        return Graph._raw(adj)

    def identify(self, u: Vertex, v: Vertex) -> "Graph":
        """Merge ``u`` and ``v`` into the smaller id, dropping loops and parallel edges."""
        if u not in self._adj or v not in self._adj:
            raise GraphError(f"vertex {u!r} or {v!r} missing")
        if u == v:
            raise GraphError("cannot identify a vertex with itself")
        keep, drop = (u, v) if u <= v else (v, u)
        adj = dict(self._adj)
        merged = (adj[keep] | adj[drop]) - {keep, drop}
        del adj[drop]
        adj[keep] = merged
        for w in self._adj[drop]:
            if w == keep:
                continue
            adj[w] = (adj[w] - {drop}) | {keep}
        return Graph._raw(adj)

    def contract_edge(self, u: Vertex, v: Vertex) -> "Graph":
        self._require_edge(u, v)
        return self.identify(u, v)

    def remove_vertices(self, vs: Iterable[Vertex]) -> "Graph":
        gone = set(vs)
        return Graph._raw({v: ns - gone for v, ns in self._adj.items() if v not in gone})

    def induced_subgraph(self, vs: Iterable[Vertex]) -> "Graph":
        keep = frozenset(vs)
        return Graph._raw({v: self._adj[v] & keep for v in keep})

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> "Graph":
        return Graph._raw({mapping[v]: frozenset(mapping[u] for u in ns) for v, ns in self._adj.items()})

    def relabel_consecutive(self, start: int = 0) -> "Graph":
        return self.relabel({v: i for i, v in enumerate(self.vertices, start)})

    def union(self, other: "Graph") -> "Graph":
        adj = dict(self._adj)
        for v, ns in other._adj.items():
            adj[v] = adj.get(v, frozenset()) | ns
        return Graph._raw(adj)

    # -- connectivity -------------------------------------------------
    def components(self) -> list[frozenset]:
        seen: set = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        if not self._adj:
            return True
        start = next(iter(self._adj))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self._adj)

    def _biconnected(self) -> tuple[list[frozenset], set]:
        """Vertex sets of the blocks and the set of cut vertices (iterative Tarjan)."""
        adj = self._adj
        disc: dict = {}
        low: dict = {}
        blocks: list[frozenset] = []
        cuts: set = set()
        counter = 0
        for root in self.vertices:
            if root in disc:
                continue
            if not adj[root]:
                disc[root] = counter
                counter += 1
                blocks.append(frozenset([root]))
                continue
            disc[root] = low[root] = counter
            counter += 1
            root_children = 0
            edge_stack: list[tuple] = []
            stack = [(root, None, iter(adj[root]))]
            while stack:
                v, parent, it = stack[-1]
                advanced = False
                for w in it:
                    if w == parent:
                        continue
                    if w not in disc:
                        disc[w] = low[w] = counter
                        counter += 1
                        edge_stack.append((v, w))
                        stack.append((w, v, iter(adj[w])))
                        if v == root:
                            root_children += 1
                        advanced = True
                        break
                    if disc[w] < disc[v]:
                        edge_stack.append((v, w))
                        if disc[w] < low[v]:
                            low[v] = disc[w]
                if advanced:
                    continue
                stack.pop()
                if parent is None:
                    continue
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    if parent != root:
                        cuts.add(parent)
                    comp = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.add(a)
                        comp.add(b)
                        if (a, b) == (parent, v):
                            break
                    blocks.append(frozenset(comp))
            if root_children > 1:
                cuts.add(root)
        return blocks, cuts

    def cut_vertices(self) -> set:
        return self._biconnected()[1]

    def is_nonseparable(self) -> bool:
        """Connected without a cut vertex (``K1`` and ``K2`` count)."""
        return self.n >= 1 and self.is_connected() and not self.cut_vertices()

    def block_vertex_sets(self) -> list[frozenset]:
        return self._biconnected()[0]

    def blocks(self) -> list["Graph"]:
        """Maximal non-separable subgraphs of a connected graph."""
        if not self.is_connected():
            raise DisconnectedError("blocks() requires a connected graph")
        return [self.induced_subgraph(b) for b in self._biconnected()[0]]

    def two_cuts(self) -> list[tuple]:
        """All vertex pairs whose removal disconnects the graph.

        For each ``x`` the cut vertices of ``G - x`` are exactly the partners
        ``y`` with ``{x, y}`` a cut-set (when ``G - x`` is connected).
        """
        if not self.is_connected():
            raise DisconnectedError("two_cuts() requires a connected graph")
        if self.n < 4:
            return []
        found = set()
        for x in self.vertices:
            h = self.remove_vertices([x])
            if not h.is_connected():
                # x alone separates; check each partner directly
                for y in h.vertices:
                    if not h.remove_vertices([y]).is_connected():
                        found.add(_norm(x, y))
                continue
            for y in h.cut_vertices():
                found.add(_norm(x, y))
        return sorted(found)

    def is_three_connected(self) -> bool:
        if self.n < 4 or not self.is_connected():
            return False
        return not self.cut_vertices() and not self.two_cuts()

    # -- I/O ----------------------------------------------------------
    def to_edge_list(self) -> str:
        lines = [f"# n={self.n} m={self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        isolated = [v for v in self.vertices if not self._adj[v]]
        lines += [f"{v}" for v in isolated]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "Graph":
        edges = []
        verts = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                ids = [int(p) for p in parts]
            except ValueError:
                raise GraphError(f"line {lineno}: expected integer vertex ids, got {raw!r}") from None
            if any(i < 0 for i in ids):
                raise GraphError(f"line {lineno}: vertex ids must be non-negative")
            if len(ids) == 2:
                edges.append((ids[0], ids[1]))
            elif len(ids) == 1:
                verts.append(ids[0])
            else:
                raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        return cls.from_edges(edges, verts)

    @classmethod
    def read(cls, path) -> "Graph":
        with open(path) as fh:
            return cls.from_edge_list(fh.read())

    def to_json_dict(self) -> dict:
        g = self.relabel_consecutive() if self.vertices != list(range(self.n)) else self
        return {"n": g.n, "edges": [list(e) for e in g.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d: dict) -> "Graph":
        return cls.from_edges((tuple(e) for e in d["edges"]), range(d["n"]))


@dataclass(frozen=True)
class BridgeDecomposition:
    cut: tuple
    bridges: tuple[Graph, ...]

    def __len__(self) -> int:
        return len(self.bridges)


def bridge_decomposition(g: Graph, x: Vertex, y: Vertex) -> BridgeDecomposition:
    """One ``{x,y}``-bridge per component of ``G - {x,y}``."""
    if x not in g or y not in g or x == y:
        raise GraphError(f"{x!r}, {y!r} are not two vertices of the graph")
    rest = g.remove_vertices([x, y])
    comps = rest.components()
    if len(comps) < 2:
        raise GraphError(f"{{{x!r}, {y!r}}} is not a cut-set")
    bridges = tuple(g.induced_subgraph(c | {x, y}) for c in comps)
    return BridgeDecomposition(_norm(x, y), bridges)


def delete_edge(g: Graph, u: Vertex, v: Vertex) -> Graph:
    return g.delete_edge(u, v)


def contract_edge(g: Graph, u: Vertex, v: Vertex) -> Graph:
    return g.contract_edge(u, v)
