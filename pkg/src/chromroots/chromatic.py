"""Exact chromatic polynomials by deletion-contraction with reductions.

Reduction order for a graph ``G``:

1. product over connected components;
2. factoring over cut vertices: ``P(G) = prod P(B) / t**(b-1)``;
3. closed forms for trees, cycles and complete graphs;
4. simplicial-vertex peeling, ``P(G) = (t - d) P(G - v)`` when ``N(v)`` is a
   ``d``-clique;
5. memo lookup on the canonical key of the remaining non-separable core;
6. ``P(G) = P(G - uv) - P(G / uv)`` on the edge with the largest degree sum.

``count_colourings`` is an independent exhaustive oracle that never touches
this machinery.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .canon import canonical_key
from .graph import Graph, GraphError
from .poly import IntPolynomial, RationalLike, as_fraction, eval_rational

T = IntPolynomial.t()
ORACLE_MAX_VERTICES = 12


class OracleSizeError(ValueError):
    pass


@dataclass
class EngineCache:
    """Memo table from canonical keys of non-separable cores to polynomials."""

    limit: int | None = None
    table: dict = field(default_factory=dict)
    hits: int = 0
    misses: int = 0
    peak: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @classmethod
    def from_env(cls) -> "EngineCache":
        raw = os.environ.get("CHROMA_CACHE_LIMIT")
        return cls(limit=int(raw) if raw else None)

    def get(self, key) -> IntPolynomial | None:
        with self._lock:
            p = self.table.get(key)
            if p is None:
                self.misses += 1
            else:
                self.hits += 1
            return p

    def put(self, key, p: IntPolynomial) -> IntPolynomial:
        # first writer wins so concurrent callers agree on one value
        with self._lock:
            existing = self.table.get(key)
            if existing is not None:
                return existing
            if self.limit is None or len(self.table) < self.limit:
                self.table[key] = p
                self.peak = max(self.peak, len(self.table))
            return p

    def clear(self) -> None:
        with self._lock:
            self.table.clear()
            self.hits = self.misses = self.peak = 0

    def stats(self) -> dict:
        return {"hits": self.hits, "misses": self.misses, "size": len(self.table), "peak": self.peak}


_default_cache = EngineCache.from_env()


def default_cache() -> EngineCache:
    return _default_cache


# -- closed forms -----------------------------------------------------------

def falling_factorial(n: int) -> IntPolynomial:
    """``t (t-1) ... (t-n+1)``, the chromatic polynomial of ``K_n``."""
    return IntPolynomial.from_roots(range(n))


def tree_polynomial(n: int) -> IntPolynomial:
    if n == 0:
        return IntPolynomial([1])
    return T * IntPolynomial.linear(1) ** (n - 1)


def cycle_polynomial(n: int) -> IntPolynomial:
    tm1 = IntPolynomial.linear(1)
    return tm1 ** n + tm1.scale(-1 if n % 2 else 1)


def _is_clique(g: Graph, vs) -> bool:
    vs = list(vs)
    return all(vs[j] in g.neighbors(vs[i]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


# -- engine -----------------------------------------------------------------

def chromatic_polynomial(g: Graph, cache: EngineCache | None | bool = None) -> IntPolynomial:
    """Exact ``P(G, t)``.

    ``cache=None`` uses the process-wide memo table, ``False`` disables
    memoisation, or pass an explicit :class:`EngineCache`.
    """
    if cache is None:
        cache = _default_cache
    elif cache is False:
        cache = None
    return _poly(g, cache)


def _poly(g: Graph, cache: EngineCache | None) -> IntPolynomial:
    n = g.n
    if n == 0:
        return IntPolynomial([1])
    if g.m == 0:
        return T ** n
    comps = g.components()
    if len(comps) > 1:
        out = IntPolynomial([1])
        for c in comps:
            out = out * _connected(g.induced_subgraph(c), cache)
        return out
    return _connected(g, cache)


def _connected(g: Graph, cache: EngineCache | None) -> IntPolynomial:
    n, m = g.n, g.m
    if m == n - 1:
        return tree_polynomial(n)
    blocks = g.block_vertex_sets()
    if len(blocks) > 1:
        out = IntPolynomial([1])
        for b in blocks:
            out = out * _block(g.induced_subgraph(b), cache)
        # divide by t**(b-1): every block polynomial carries a factor t
        return IntPolynomial(out.coeffs[len(blocks) - 1:])
    return _block(g, cache)


def _block(g: Graph, cache: EngineCache | None) -> IntPolynomial:
    """Chromatic polynomial of a non-separable graph."""
    n, m = g.n, g.m
    if n <= 2 or m == n * (n - 1) // 2:
        return falling_factorial(n)
    if m == n:
        return cycle_polynomial(n)
    # peel a simplicial vertex; what remains is still non-separable
    for v in g.vertices:
        nb = g.neighbors(v)
        if _is_clique(g, nb):
            rest = g.remove_vertices([v])
            return IntPolynomial.linear(len(nb)) * _block(rest, cache)
    key = None
    if cache is not None:
        key = canonical_key(g)
        hit = cache.get(key)
        if hit is not None:
            return hit
    u, v = _pick_edge(g)
    p = _poly(g.delete_edge(u, v), cache) - _poly(g.contract_edge(u, v), cache)
    if cache is not None:
        p = cache.put(key, p)
    return p


def _pick_edge(g: Graph) -> tuple:
    best = None
    best_score = -1
    for u, v in g.edges:
        s = g.degree(u) + g.degree(v)
        if s > best_score:
            best, best_score = (u, v), s
    return best


def chromatic_by_addition(g: Graph, x, y, cache: EngineCache | None | bool = None) -> IntPolynomial:
    """``P(G) = P(G + xy) + P(G / xy)`` for non-adjacent ``x, y``."""
    if g.has_edge(x, y):
        raise GraphError(f"{x!r} and {y!r} are already adjacent")
    return chromatic_polynomial(g.add_edge(x, y), cache) + chromatic_polynomial(g.identify(x, y), cache)


def evaluate(g: Graph, t: RationalLike, cache: EngineCache | None | bool = None) -> Fraction:
    return eval_rational(chromatic_polynomial(g, cache), as_fraction(t))


def q_value(g: Graph, t: RationalLike, cache: EngineCache | None | bool = None) -> Fraction:
    """``Q(G, t) = (-1)**|V| P(G, t)``."""
    val = evaluate(g, t, cache)
    return -val if g.n % 2 else val


def q_polynomial(g: Graph, cache: EngineCache | None | bool = None) -> IntPolynomial:
    p = chromatic_polynomial(g, cache)
    return -p if g.n % 2 else p


# -- brute-force oracle -----------------------------------------------------

def colour_partition_counts(g: Graph) -> list[int]:
    """``a[r]`` = number of partitions of V into ``r`` non-empty independent sets.

    Exhaustive enumeration of colourings up to renaming of colours
    (restricted-growth strings).
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise OracleSizeError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    earlier = [[index[u] for u in g.neighbors(v) if index[u] < i] for i, v in enumerate(verts)]
    n = len(verts)
    counts = [0] * (n + 1)
    colour = [0] * n

    def place(i: int, used: int) -> None:
        if i == n:
            counts[used] += 1
            return
        blocked = {colour[j] for j in earlier[i]}
        for c in range(used):
            if c not in blocked:
                colour[i] = c
                place(i + 1, used)
        colour[i] = used
        place(i + 1, used + 1)

    place(0, 0)
    return counts


def count_colourings(g: Graph, t: int) -> int:
    """Number of proper ``t``-colourings, by exhaustive enumeration."""
    if t < 0:
        raise ValueError("t must be non-negative")
    counts = colour_partition_counts(g)
    total = 0
    for r, a in enumerate(counts):
        if a and r <= t:
            ff = 1
            for i in range(r):
                ff *= t - i
            total += a * ff
    return total


def count_colourings_naive(g: Graph, t: int) -> int:
    """Direct product enumeration over all ``t**n`` maps (tiny graphs only)."""
    from itertools import product

    if g.n > 8:
        raise OracleSizeError("naive oracle limited to 8 vertices")
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges]
    return sum(1 for c in product(range(t), repeat=len(verts)) if all(c[u] != c[v] for u, v in edges))


def factored_over_blocks(g: Graph, cache: EngineCache | None | bool = None) -> str:
    """Human-readable ``P(G,t)`` written as a product over blocks."""
    if g.n == 0:
        return "1"
    parts = []
    for comp in g.components():
        h = g.induced_subgraph(comp)
        blocks = h.block_vertex_sets()
        pieces = [f"({chromatic_polynomial(h.induced_subgraph(b), cache)})" for b in blocks]
        s = " * ".join(pieces)
        if len(blocks) > 1:
            s += f" / t^{len(blocks) - 1}"
        parts.append(s)
    return " * ".join(f"[{p}]" for p in parts) if len(parts) > 1 else parts[0]

