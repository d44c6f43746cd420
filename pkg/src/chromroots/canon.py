"""Canonical labeling of simple graphs.

Colour refinement followed by individualisation of the first smallest
non-singleton cell; the canonical form is the lexicographically smallest
edge list over all leaves of the search tree.  Automorphisms found along the
way (two leaves with equal codes) prune children that lie in the same orbit
of the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph

CanonicalKey = tuple


def _refine(colors: list[int], nbrs: Sequence[Sequence[int]]) -> list[int]:
    ncol = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(colors))]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        k = len(order)
        colors = new
        if k == ncol:
            return colors
        ncol = k


def _individualize(colors: list[int], v: int) -> list[int]:
    keyed = [(c, 0 if w == v else 1) for w, c in enumerate(colors)]
    order = {s: i for i, s in enumerate(sorted(set(keyed)))}
    return [order[s] for s in keyed]


def _target_cell(colors: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


class _Search:
    def __init__(self, nbrs: list[list[int]], edges: list[tuple[int, int]]):
        self.nbrs = nbrs
        self.edges = edges
        self.n = len(nbrs)
        self.best_code: tuple | None = None
        self.best_perm: list[int] | None = None
        self.first_code: tuple | None = None
        self.first_perm: list[int] | None = None
        self.autos: list[list[int]] = []

    def _code(self, perm: list[int]) -> tuple:
        return tuple(sorted((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                            for u, v in self.edges))

    def _record_auto(self, ref_perm: list[int], perm: list[int]) -> None:
        inv = [0] * self.n
        for v, p in enumerate(ref_perm):
            inv[p] = v
        auto = [inv[perm[v]] for v in range(self.n)]
        if any(auto[v] != v for v in range(self.n)):
            self.autos.append(auto)

    def _leaf(self, perm: list[int]) -> None:
        code = self._code(perm)
        if self.first_code is None:
            self.first_code, self.first_perm = code, perm
        elif code == self.first_code:
            self._record_auto(self.first_perm, perm)
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_perm = code, perm
        elif code == self.best_code and self.best_perm is not self.first_perm:
            self._record_auto(self.best_perm, perm)

    def _orbit_rep(self, prefix: list[int]):
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[a] = b
        return find

    def run(self, colors: list[int], prefix: list[int]) -> None:
        colors = _refine(colors, self.nbrs)
        cell = _target_cell(colors)
        if cell is None:
            self._leaf(colors)
            return
        explored: list[int] = []
        n_autos = -1
        find = None
        for v in cell:
            if explored:
                if len(self.autos) != n_autos:
                    find = self._orbit_rep(prefix)
                    n_autos = len(self.autos)
                if n_autos and any(find(v) == find(u) for u in explored):
                    continue
            explored.append(v)
            self.run(_individualize(colors, v), prefix + [v])


def canonical_labeling(g: Graph) -> tuple[CanonicalKey, dict]:
    """Return ``(key, labeling)``; ``labeling`` maps vertices to ``0..n-1``.

    Two graphs are isomorphic iff their keys are equal.
    """
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    nbrs = [[index[u] for u in g.neighbors(v)] for v in verts]
    edges = [(index[u], index[v]) for u, v in g.edges]
    n = len(verts)
    if n == 0:
        return (0, ()), {}
    search = _Search(nbrs, edges)
    search.run([len(ns) for ns in nbrs], [])
    perm = search.best_perm
    return (n, search.best_code), {v: perm[index[v]] for v in verts}


def canonical_key(g: Graph) -> CanonicalKey:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    key, labeling = canonical_labeling(g)
    return g.relabel(labeling)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(len(g.neighbors(v)) for v in g) != sorted(len(h.neighbors(v)) for v in h):
        return False
    return canonical_key(g) == canonical_key(h)
