"""Headline computations: the constants t0 and t1, Sturm certification of
zero-free intervals on family instances, and the hunt for roots just above t1.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .chromatic import chromatic_polynomial, q_polynomial
from .closedform import g_polynomials_in_j, resolve_h_offset
from .families import FamilyIndex, make_H
from .graph import Graph
from .poly import (DEFAULT_PRECISION, IntPolynomial, RationalLike, RootInterval, as_fraction,
                   isolate_smallest_root, sign_at, sturm_count)

_t = IntPolynomial.t()
T0_POLY = (_t - 2) ** 3 + ((_t - 1) ** 2).scale(4)
T1_POLY = (_t - 2) ** 6 + ((_t - 1) ** 2 * (_t - 2) ** 3).scale(4) - (_t - 1) ** 4
JACKSON = Fraction(32, 27)


class CertificationFailure(RuntimeError):
    pass


class RootNotFound(RuntimeError):
    def __init__(self, message: str, details: dict):
        super().__init__(message)
        self.details = details


@dataclass(frozen=True)
class Constants:
    t0: RootInterval
    t1: RootInterval
    thirtytwo_over_27: Fraction = JACKSON

    def ordered(self) -> bool:
        return self.thirtytwo_over_27 < self.t1.low < self.t1.high < self.t0.low

    def to_dict(self) -> dict:
        return {
            "t0": self.t0.to_dict(),
            "t1": self.t1.to_dict(),
            "thirtytwo_over_27": str(self.thirtytwo_over_27),
            "ordered": self.ordered(),
        }


@lru_cache(maxsize=None)
def _constants(precision: Fraction) -> Constants:
    return Constants(isolate_smallest_root(T0_POLY, 1, precision),
                     isolate_smallest_root(T1_POLY, 1, precision))


def compute_constants(precision: RationalLike = DEFAULT_PRECISION) -> Constants:
    """Isolating intervals of width ``<= precision`` for t0 and t1 (smallest roots above 1)."""
    precision = as_fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    return _constants(precision)


# -- zero-free certification ------------------------------------------------------

@dataclass
class InstanceResult:
    family: str
    index: list[int]
    n: int
    degree: int
    root_count: int
    q_sign: int

    @property
    def ok(self) -> bool:
        return self.root_count == 0 and self.q_sign > 0


@dataclass
class ZeroFreeReport:
    family: str
    max_index: int
    low: str
    endpoint: str
    instances: list[InstanceResult] = field(default_factory=list)
    failures: list[list[int]] = field(default_factory=list)
    offset: int | None = None

    @property
    def total(self) -> int:
        return len(self.instances)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "max_index": self.max_index,
            "interval": {"low": self.low, "high": self.endpoint,
                         "high_float": float(Fraction(self.endpoint))},
            "offset": self.offset,
            "total": self.total,
            "failures": self.failures,
            "instances": [asdict(r) for r in self.instances],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ZeroFreeReport":
        return cls(
            family=d["family"], max_index=d["max_index"], low=d["interval"]["low"],
            endpoint=d["interval"]["high"], offset=d.get("offset"),
            instances=[InstanceResult(**r) for r in d["instances"]], failures=d["failures"],
        )


def certify_polynomial(p: IntPolynomial, n: int, low: Fraction, high: Fraction) -> tuple[int, int]:
    """``(root count in (low, high], sign of Q at high)``."""
    count = sturm_count(p, low, high)
    s = sign_at(p, high)
    return count, -s if n % 2 else s


def _g_row(i: int, k: int, max_j: int, endpoint: Fraction, seed: str) -> list[InstanceResult]:
    out = []
    for j, p in enumerate(g_polynomials_in_j(i, k, seed)):
        if j > max_j:
            break
        n = 2 * (i + j + k) + 5
        count, qs = certify_polynomial(p, n, Fraction(1), endpoint)
        out.append(InstanceResult("G", [i, j, k], n, p.degree, count, qs))
    return out


def certify_zero_free(max_index: int, endpoint: RationalLike | None = None, threads: int = 1,
                      seed: str = "auto") -> ZeroFreeReport:
    """Sturm-certify that no ``G_{i,j,k}`` with ``i, j, k <= max_index`` has a
    chromatic root in ``(1, l]`` and that ``Q(G, l) > 0``.

    ``l`` defaults to the rational lower endpoint of the t1 isolating interval.
    """
    if max_index < 0:
        raise ValueError("max_index must be non-negative")
    ell = as_fraction(endpoint) if endpoint is not None else compute_constants().t1.low
    pairs = [(i, k) for i in range(max_index + 1) for k in range(max_index + 1)]
    work = lambda ik: _g_row(ik[0], ik[1], max_index, ell, seed)  # noqa: E731
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(work, pairs))
    else:
        rows = [work(ik) for ik in pairs]
    results = sorted((r for row in rows for r in row), key=lambda r: r.index)
    report = ZeroFreeReport("G", max_index, "1", str(ell), results, offset=resolve_h_offset().offset)
    report.failures = [r.index for r in results if not r.ok]
    return report


def certify_h_zero_free(max_k: int = 12, endpoint: RationalLike | None = None) -> ZeroFreeReport:
    """Same certificate for ``H_k``, ``k <= max_k``, up to the lower endpoint of t0."""
    ell = as_fraction(endpoint) if endpoint is not None else compute_constants().t0.low
    results = []
    for k in range(max_k + 1):
        g = make_H(k)
        p = chromatic_polynomial(g)
        count, qs = certify_polynomial(p, g.n, Fraction(1), ell)
        results.append(InstanceResult("H", [k], g.n, p.degree, count, qs))
    report = ZeroFreeReport("H", max_k, "1", str(ell), results)
    report.failures = [r.index for r in results if not r.ok]
    return report


# -- roots above t1 ---------------------------------------------------------------

@dataclass(frozen=True)
class ConvergenceHit:
    index: FamilyIndex
    interval: RootInterval
    sturm_count: int
    epsilon: Fraction
    below_t0: bool
    q_signs: tuple[int, int]
    scanned: int

    def to_dict(self) -> dict:
        return {
            "index": list(self.index.as_tuple()),
            "n": self.index.n_vertices,
            "root_interval": {k: v for k, v in self.interval.to_dict().items() if k != "polynomial"},
            "sturm_count": self.sturm_count,
            "epsilon": str(self.epsilon),
            "below_t0": self.below_t0,
            "q_signs": list(self.q_signs),
            "instances_scanned": self.scanned,
        }


def recipe_i(k: int) -> int:
    """First-bridge index for the ``i + 1 = k`` recipe, expressed in construction indices."""
    return k - 1 - resolve_h_offset().shift


def find_root_above_t1(epsilon: RationalLike, k_bound: int = 40, j_bound: int = 200,
                       below_t0: bool = False, seed: str = "auto") -> ConvergenceHit:
    """Find ``G_{i,j,k}`` with a certified chromatic root in ``(hi(t1), hi(t1) + epsilon)``.

    Signs are evaluated exactly on a grid of step ``epsilon/8``; Sturm counting
    is applied only to the final bracket.  With ``below_t0`` the window is
    additionally capped at the lower endpoint of t0, so a hit is a root that
    no Hamiltonian-path graph can have.
    """
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    consts = compute_constants()
    lo = consts.t1.high
    hi = lo + eps
    if below_t0:
        hi = min(hi, consts.t0.low)
        if hi <= lo:
            raise ValueError("window above t1 is empty once capped at t0")
    step = (hi - lo) / 8
    grid = [lo + m * step for m in range(9)]
    scanned = 0
    last = {}
    for k in range(k_bound + 1):
        i = recipe_i(k)
        if i < 0:
            continue
        for j, p in enumerate(g_polynomials_in_j(i, k, seed)):
            if j > j_bound:
                break
            scanned += 1
            signs = [sign_at(p, x) for x in grid]
            last = {"k": k, "i": i, "j": j, "grid_signs": signs}
            bracket = None
            for m in range(8):
                if signs[m + 1] == 0 and m + 1 < 8:
                    bracket = (grid[m], grid[m + 1])
                    break
                if signs[m] * signs[m + 1] < 0:
                    bracket = (grid[m], grid[m + 1])
                    break
            if bracket is None:
                continue
            a, b = bracket
            iv = isolate_smallest_root(p, a, step / 16)
            if iv.high > b:
                continue
            count = sturm_count(p, iv.low, iv.high)
            n = 2 * (i + j + k) + 5
            qs = tuple((-sign_at(p, x) if n % 2 else sign_at(p, x)) for x in (iv.low, iv.high))
            return ConvergenceHit(FamilyIndex(i, j, k), iv, count, eps, iv.high < consts.t0.low,
                                  qs, scanned)
    raise RootNotFound(f"no root found in ({float(lo)}, {float(hi)}) within k <= {k_bound}, j <= {j_bound}",
                       last)


# -- sign profiles ------------------------------------------------------------------

def sign_profile(g: Graph, points: Sequence[RationalLike]) -> list[int]:
    """Exact signs of ``Q(G, t)`` at the given points of ``(1, 2)``."""
    pts = [as_fraction(x) for x in points]
    for x in pts:
        if not 1 < x < 2:
            raise ValueError(f"point {x} outside (1, 2)")
    q = q_polynomial(g)
    return [sign_at(q, x) for x in pts]


def q_curve(q: IntPolynomial, n_points: int = 200, low: RationalLike = 1,
            high: RationalLike = Fraction(27, 20)) -> list[tuple[Fraction, Fraction]]:
    """``(t, Q(t))`` at ``n_points`` uniform rational points strictly inside ``(low, high)``."""
    low, high = as_fraction(low), as_fraction(high)
    step = (high - low) / (n_points + 1)
    return [(low + m * step, q(low + m * step)) for m in range(1, n_points + 1)]
