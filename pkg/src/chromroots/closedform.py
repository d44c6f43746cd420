"""Closed forms for ``P(H_k, t)`` and ``P(G_{i,j,k}, t)`` at real ``t``.

Real quantities are mpmath floats at ``DPS`` decimal digits.  Nothing here is
used to certify root-freeness; the exact polynomial routines at the bottom
are the authoritative path and the floats are cross-checked against them.

Index convention.  Literal vertex counting gives ``|V(G_{i,0,k})| = 2(i+k)+5
= |V(H_{i+k+1})|``.  :func:`resolve_h_offset` determines the constant ``c``
with ``G_{i,0,k} ~= H_{i+k+c}`` empirically and the ``G``-formulas are written
in terms of ``shift = c - 2``, which re-indexes the first bridge: every
``H``-index that carries ``i`` is ``i + shift`` plus its textbook constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from .canon import are_isomorphic
from .chromatic import chromatic_polynomial
from .families import FamilyIndex, make_G, make_H
from .poly import IntPolynomial, RationalLike, as_fraction

DPS = 50
TEXTBOOK_OFFSET = 2

_t = IntPolynomial.t()
_tm1 = IntPolynomial.linear(1)
_tm2 = IntPolynomial.linear(2)
REC_A = _tm2 ** 2  # (t-2)^2
REC_B = _tm1 ** 2 * _tm2  # (t-1)^2 (t-2)
H0_POLY = _t * _tm1 * _tm2
H1_POLY = _t * _tm1 * (_tm2 ** 3 + _tm1 ** 2)


class DomainError(ValueError):
    """``t`` outside the range where delta is real (or ``t = 1``)."""


def to_mpf(t: RationalLike):
    if isinstance(t, mpmath.mpf):
        return t
    f = as_fraction(t)
    with mpmath.workdps(DPS):
        return mpmath.mpf(f.numerator) / f.denominator


@dataclass(frozen=True)
class ClosedFormParams:
    t: object
    delta: object
    alpha: object
    beta: object
    A: object
    B: object
    gamma: object

    def residuals(self) -> dict:
        """Deviations from the defining identities (all should be ~0)."""
        t, a, b, A, B = self.t, self.alpha, self.beta, self.A, self.B
        with mpmath.workdps(DPS):
            return {
                "alpha_plus_beta": a + b - (t - 2) ** 2,
                "alpha_times_beta": a * b + (t - 1) ** 2 * (t - 2),
                "A_plus_B": A + B - t * (t - 1) * (t - 2),
                "A_alpha_plus_B_beta": A * a + B * b - t * (t - 1) * ((t - 2) ** 3 + (t - 1) ** 2),
                "gamma_beta": self.gamma * b + t * (t - 1) * (t - 2),
            }

    def to_dict(self) -> dict:
        return {name: mpmath.nstr(getattr(self, name), 20)
                for name in ("t", "delta", "alpha", "beta", "A", "B", "gamma")}


def radicand(t: RationalLike):
    t = to_mpf(t)
    with mpmath.workdps(DPS):
        return (t - 2) ** 4 + 4 * (t - 1) ** 2 * (t - 2)


def closed_form_params(t: RationalLike) -> ClosedFormParams:
    t = to_mpf(t)
    with mpmath.workdps(DPS):
        if t == 1:
            raise DomainError("gamma is undefined at t = 1")
        rad = radicand(t)
        if rad < 0:
            raise DomainError(f"radicand (t-2)^4 + 4(t-1)^2(t-2) = {mpmath.nstr(rad, 8)} < 0 at t = {t}")
        delta = mpmath.sqrt(rad)
        alpha = ((t - 2) ** 2 + delta) / 2
        beta = ((t - 2) ** 2 - delta) / 2
        if delta == 0:
            raise DomainError("delta = 0: the two-term closed form degenerates")
        A = t * (t - 1) * ((t - 2) * alpha + (t - 1) ** 2) / delta
        B = t * (t - 1) * (t - 2) - A
        gamma = alpha * t / (t - 1)
    return ClosedFormParams(t, delta, alpha, beta, A, B, gamma)


def eval_H_closed(k: int, t: RationalLike, params: ClosedFormParams | None = None):
    """``A alpha**k + B beta**k``."""
    p = params or closed_form_params(t)
    with mpmath.workdps(DPS):
        return p.A * p.alpha ** k + p.B * p.beta ** k


# -- exact H polynomials ----------------------------------------------------

@lru_cache(maxsize=None)
def exact_H_polynomial(k: int) -> IntPolynomial:
    """``P(H_k)`` from the two-term recurrence seeded with ``H_0 = K_3`` and ``H_1``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return H0_POLY
    if k == 1:
        return H1_POLY
    return REC_A * exact_H_polynomial(k - 1) + REC_B * exact_H_polynomial(k - 2)


def h_recurrence_check(k: int) -> bool:
    """Exact check of ``P(H_{k+1}) = (t-2)^2 P(H_k) + (t-1)^2 (t-2) P(H_{k-1})`` on engine output."""
    if k < 1:
        raise ValueError("k must be positive")
    hm, h0, hp = (chromatic_polynomial(make_H(x)) for x in (k - 1, k, k + 1))
    return hp == REC_A * h0 + REC_B * hm


# -- offset resolution --------------------------------------------------------

@dataclass(frozen=True)
class OffsetResolution:
    offset: int
    textbook_offset: int
    max_index: int
    table: tuple = field(default=(), repr=False)

    @property
    def shift(self) -> int:
        return self.offset - self.textbook_offset

    def to_dict(self) -> dict:
        return {
            "offset": self.offset,
            "textbook_offset": self.textbook_offset,
            "shift": self.shift,
            "agrees_with_textbook": self.offset == self.textbook_offset,
            "statement": f"G_{{i,0,k}} ~= H_{{i+k+{self.offset}}} for all i,k <= {self.max_index}",
            "checks": [dict(row) for row in self.table],
        }


class OffsetResolutionError(RuntimeError):
    pass


def _resolve(max_index: int, candidates: tuple[int, ...]) -> OffsetResolution:
    rows = []
    viable = set(candidates)
    for i in range(max_index + 1):
        for k in range(max_index + 1):
            g = make_G(i, 0, k)
            pg = chromatic_polynomial(g)
            row = {"i": i, "k": k, "n": g.n}
            for c in candidates:
                m = i + k + c
                h = make_H(m)
                poly_eq = chromatic_polynomial(h) == pg
                iso = poly_eq and are_isomorphic(g, h)
                row[f"c={c}"] = {"m": m, "poly_equal": poly_eq, "isomorphic": iso}
                if not iso:
                    viable.discard(c)
            rows.append(tuple(row.items()))
    if len(viable) != 1:
        raise OffsetResolutionError(f"no unique uniform offset among {candidates}: viable={sorted(viable)}")
    return OffsetResolution(viable.pop(), TEXTBOOK_OFFSET, max_index, tuple(rows))


@lru_cache(maxsize=None)
def resolve_h_offset(max_index: int = 4, candidates: tuple[int, ...] = (0, 1, 2, 3)) -> OffsetResolution:
    """Find the single ``c`` with ``G_{i,0,k} ~= H_{i+k+c}`` for all ``i, k <= max_index``.

    Both exact polynomial equality and isomorphism (canonical forms) are
    required.  The result is memoised and treated as fixed configuration.
    """
    return _resolve(max_index, candidates)


def _shift(literal: bool) -> int:
    return 0 if literal else resolve_h_offset().shift


def _h_indices(i: int, k: int, literal: bool = False) -> tuple[int, int, int]:
    """``(m, a, b)`` with ``P(G_{i,1,k}) = (t-2)^2 H_m + (t-1)/t H_a H_b``."""
    s = _shift(literal)
    return i + k + 2 + s, i + 1 + s, k


# -- G family -----------------------------------------------------------------

def _h_evaluator(t: RationalLike, params: ClosedFormParams | None):
    """``(t as mpf, m -> P(H_m, t))``; falls back to the exact H polynomials
    where the closed form is undefined (e.g. ``t = 2``, where delta = 0)."""
    if params is None:
        try:
            params = closed_form_params(t)
        except DomainError:
            f = as_fraction(t)
            tt = to_mpf(f)
            return tt, lambda m: to_mpf(exact_H_polynomial(m)(f))
    return params.t, lambda m: eval_H_closed(m, params.t, params)


def eval_G_j1(i: int, k: int, t: RationalLike, params: ClosedFormParams | None = None,
              literal: bool = False):
    """``(t-2)^2 P(H_m) + (t-1)/t P(H_a) P(H_b)`` with indices from :func:`_h_indices`.

    ``literal=True`` uses the unshifted textbook indices ``(i+k+2, i+1, k)``.
    """
    t, h = _h_evaluator(t, params)
    m, a, b = _h_indices(i, k, literal)
    with mpmath.workdps(DPS):
        return (t - 2) ** 2 * h(m) + (t - 1) / t * h(a) * h(b)


@dataclass(frozen=True)
class GClosedForm:
    """``P(G_{i,j,k}, t) = C alpha**j + D beta**j`` for fixed ``i, k, t``."""

    C: object
    D: object
    i: int
    k: int
    params: ClosedFormParams

    def __call__(self, j: int):
        with mpmath.workdps(DPS):
            return self.C * self.params.alpha ** j + self.D * self.params.beta ** j


def g_closed_form(i: int, k: int, t: RationalLike, params: ClosedFormParams | None = None) -> GClosedForm:
    p = params or closed_form_params(t)
    m, a, b = _h_indices(i, k)
    t = p.t
    with mpmath.workdps(DPS):
        hm = eval_H_closed(m, t, p)
        C = (p.alpha * hm + (t - 1) / t * eval_H_closed(a, t, p) * eval_H_closed(b, t, p)) / (p.alpha - p.beta)
        D = hm - C
    return GClosedForm(C, D, i, k, p)


def eval_G_recurrence(idx: FamilyIndex | tuple, t: RationalLike, params: ClosedFormParams | None = None):
    """``P(G_{i,j,k}, t)`` from the ``j = 0, 1`` values and the two-term recurrence in ``j``."""
    i, j, k = tuple(idx)
    t_in = t
    t, h = _h_evaluator(t, params)
    prev = h(i + k + 2 + _shift(False))
    if j == 0:
        return prev
    cur = eval_G_j1(i, k, t_in, params)
    with mpmath.workdps(DPS):
        ra, rb = (t - 2) ** 2, (t - 1) ** 2 * (t - 2)
        for _ in range(j - 1):
            prev, cur = cur, ra * cur + rb * prev
    return cur


def g_j1_polynomial(i: int, k: int) -> IntPolynomial:
    """Exact ``P(G_{i,1,k})`` from the ``j = 1`` identity on exact ``H`` polynomials."""
    m, a, b = _h_indices(i, k)
    prod = exact_H_polynomial(a) * exact_H_polynomial(b)
    return REC_A * exact_H_polynomial(m) + (_tm1 * prod).exact_div(_t)


def g_j1_check(i: int, k: int, literal: bool = False) -> bool:
    """Exact test of the ``j = 1`` identity against the engine on ``G_{i,1,k}``."""
    m, a, b = _h_indices(i, k, literal)
    if min(m, a, b) < 0:
        return False
    lhs = chromatic_polynomial(make_G(i, 1, k)) * _t
    rhs = (REC_A * chromatic_polynomial(make_H(m))) * _t + _tm1 * chromatic_polynomial(make_H(a)) * chromatic_polynomial(make_H(b))
    return lhs == rhs


def g_recurrence_check(i: int, j: int, k: int) -> bool:
    """Exact check of the ``j``-recurrence on engine polynomials (``j >= 2``)."""
    if j < 2:
        raise ValueError("the recurrence applies for j >= 2")
    a, b, c = (chromatic_polynomial(make_G(i, x, k)) for x in (j, j - 1, j - 2))
    return a == REC_A * b + REC_B * c


ENGINE_SEED_MAX_VERTICES = 41


def g_seed_polynomials(i: int, k: int, seed: str = "auto") -> tuple[IntPolynomial, IntPolynomial]:
    """Exact ``P(G_{i,0,k})`` and ``P(G_{i,1,k})``.

    ``seed="engine"`` runs deletion-contraction on the graphs themselves,
    ``"closed"`` uses the exact ``H`` recurrence and the ``j = 1`` identity,
    ``"auto"`` picks the engine up to ``ENGINE_SEED_MAX_VERTICES`` vertices.
    """
    if seed == "auto":
        seed = "engine" if 2 * (i + k) + 7 <= ENGINE_SEED_MAX_VERTICES else "closed"
    if seed == "engine":
        return chromatic_polynomial(make_G(i, 0, k)), chromatic_polynomial(make_G(i, 1, k))
    if seed == "closed":
        return exact_H_polynomial(i + k + resolve_h_offset().offset), g_j1_polynomial(i, k)
    raise ValueError(f"unknown seed mode {seed!r}")


def g_polynomials_in_j(i: int, k: int, seed: str = "auto"):
    """Yield ``P(G_{i,j,k})`` for ``j = 0, 1, 2, ...``."""
    prev, cur = g_seed_polynomials(i, k, seed)
    yield prev
    while True:
        yield cur
        prev, cur = cur, REC_A * cur + REC_B * prev


def exact_G_polynomial(idx: FamilyIndex | tuple, seed: str = "auto") -> IntPolynomial:
    i, j, k = tuple(idx)
    for jj, p in enumerate(g_polynomials_in_j(i, k, seed)):
        if jj == j:
            return p
    raise AssertionError("unreachable")


# -- inequality checks ----------------------------------------------------------

def check_gamma_inequality(t: RationalLike) -> tuple[bool, bool]:
    """``(gamma*beta < -A, -A <= gamma*alpha)`` at ``t``."""
    p = closed_form_params(t)
    with mpmath.workdps(DPS):
        return bool(p.gamma * p.beta < -p.A), bool(-p.A <= p.gamma * p.alpha)


def c_sign_ratio(k: int, t: RationalLike, params: ClosedFormParams | None = None):
    """``P(H_k)^2 / (gamma |P(H_{2k+1})|)``; above 1 means ``C > 0`` for ``i = k``
    (first-bridge index ``k - 1`` in textbook indexing)."""
    p = params or closed_form_params(t)
    with mpmath.workdps(DPS):
        return eval_H_closed(k, t, p) ** 2 / (p.gamma * abs(eval_H_closed(2 * k + 1, t, p)))


def limit_ratio(t: RationalLike):
    """``-A / (gamma alpha)``, the ``k -> oo`` limit of :func:`c_sign_ratio`."""
    p = closed_form_params(t)
    with mpmath.workdps(DPS):
        return -p.A / (p.gamma * p.alpha)


def to_fraction(x) -> Fraction:
    """Exact Fraction of an mpf (for display and JSON only)."""
    return Fraction(*mpmath.mpf(x).as_integer_ratio())
