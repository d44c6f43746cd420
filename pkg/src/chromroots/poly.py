"""Exact integer polynomials, rational evaluation and Sturm root isolation.

Rationals are plain :class:`fractions.Fraction` values.  Polynomials are
dense: ``coeffs[i]`` is the coefficient of ``t**i`` and the zero polynomial
is the empty tuple.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str, float]

DEFAULT_PRECISION = Fraction(1, 10**12)


class NoRootError(ValueError):
    """Raised when a root search interval holds no real root."""


def as_fraction(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction; floats go through their decimal repr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        self.coeffs: tuple[int, ...] = _trim(cs)

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def t(cls) -> "IntPolynomial":
        return cls([0, 1])

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """The monic polynomial ``t - root``."""
        return cls([-root, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls.linear(r)
        return p

    # -- basic protocol -----------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations ----------------------------------------------
    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPolynomial":
        return IntPolynomial([other]) - self

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial([c * x for x in self.coeffs])

    def shift(self, n: int) -> "IntPolynomial":
        """Multiply by ``t**n``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * n + list(self.coeffs))

    def divmod_exact_lead(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder for a divisor with leading coefficient +-1."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lc = other.lead
        if abs(lc) != 1:
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] * lc
            quot[k] = q
            if q:
                for j, c in enumerate(b):
                    rem[k + j] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem[:db])

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient; raises ``ValueError`` if the division leaves a remainder."""
        q, r = self.divmod_exact_lead(other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the (positive) content; sign is preserved."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial([c // g for c in self.coeffs])

    # -- evaluation ---------------------------------------------------
    def __call__(self, t: RationalLike) -> Fraction:
        return eval_rational(self, as_fraction(t))

    def eval_int(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -- serialization ------------------------------------------------
    def to_json_list(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_json_list())

    @classmethod
    def from_json(cls, data: "str | Sequence[str]") -> "IntPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(c) for c in data)


def eval_rational(p: IntPolynomial, t: Fraction) -> Fraction:
    """Exact value ``p(t)`` by homogenised integer Horner evaluation."""
    if not p.coeffs:
        return Fraction(0)
    t = as_fraction(t)
    num, den = t.numerator, t.denominator
    acc = 0
    dpow = 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    # acc = den**deg * p(t)
    return Fraction(acc, den ** p.degree)


def sign_at(p: IntPolynomial, t: RationalLike) -> int:
    """Sign of ``p(t)`` without building the Fraction."""
    if not p.coeffs:
        return 0
    t = as_fraction(t)
    num, den = t.numerator, t.denominator
    acc = 0
    dpow = 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


# -- Sturm machinery ------------------------------------------------------

def _pseudo_rem_positive(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of ``|lc(b)|**k * a`` modulo ``b`` (positive multiplier)."""
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lb = bc[-1]
    mult = abs(lb)
    sgn = 1 if lb > 0 else -1
    while len(rem) - 1 >= db and rem:
        top = rem[-1]
        shift = len(rem) - 1 - db
        # rem <- mult*rem - sgn*top * t^shift * b  (kills the leading term)
        rem = [mult * c for c in rem]
        f = sgn * top
        for j, c in enumerate(bc):
            rem[shift + j] -= f * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
        if rem:
            g = 0
            for c in rem:
                g = math.gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                rem = [c // g for c in rem]
    return IntPolynomial(rem)


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of ``p`` up to positive scalar factors."""
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p.primitive(), p.derivative().primitive()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = _pseudo_rem_positive(seq[-2], seq[-1])
        if r.is_zero():
            break
        seq.append((-r).primitive())
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _variations(seq: Sequence[IntPolynomial], t: Fraction) -> int:
    signs = [s for s in (sign_at(q, t) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_infinity(seq: Sequence[IntPolynomial], positive: bool) -> int:
    signs = []
    for q in seq:
        s = 1 if q.lead > 0 else -1
        if not positive and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPolynomial, low: RationalLike, high: RationalLike,
                seq: Sequence[IntPolynomial] | None = None) -> int:
    """Number of distinct real roots of ``p`` in ``(low, high]``."""
    if p.is_zero():
        raise ValueError("cannot count roots of the zero polynomial")
    low, high = as_fraction(low), as_fraction(high)
    if not low < high:
        raise ValueError(f"empty interval ({low}, {high}]")
    if seq is None:
        seq = sturm_sequence(p)
    return _variations(seq, low) - _variations(seq, high)


def count_real_roots(p: IntPolynomial, seq: Sequence[IntPolynomial] | None = None) -> int:
    if seq is None:
        seq = sturm_sequence(p)
    return _variations_at_infinity(seq, False) - _variations_at_infinity(seq, True)


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """Every real root lies strictly inside ``(-B, B)``."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.lead)
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), lead)


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval ``(low, high]`` for a single real root of ``polynomial``."""

    low: Fraction
    high: Fraction
    polynomial: IntPolynomial

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    @property
    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2

    def __float__(self) -> float:
        return float(self.midpoint)

    def contains(self, x: RationalLike) -> bool:
        x = as_fraction(x)
        return self.low < x <= self.high

    def to_dict(self) -> dict:
        return {
            "low": str(self.low),
            "high": str(self.high),
            "low_float": float(self.low),
            "high_float": float(self.high),
            "polynomial": self.polynomial.to_json_list(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RootInterval":
        return cls(Fraction(d["low"]), Fraction(d["high"]), IntPolynomial.from_json(d["polynomial"]))


def isolate_smallest_root(p: IntPolynomial, low: RationalLike,
                          precision: RationalLike = DEFAULT_PRECISION) -> RootInterval:
    """Bisect down to the smallest real root of ``p`` that exceeds ``low``.

    The returned interval has width at most ``precision`` and contains
    exactly one distinct root of ``p``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    low = as_fraction(low)
    precision = as_fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    seq = sturm_sequence(p)
    bound = cauchy_bound(p)
    high = max(bound, low + 1)
    if sturm_count(p, low, high, seq) == 0:
        raise NoRootError(f"no real root of {p} above {low}")
    a, b = low, high
    # invariant: no root in (low, a], smallest root in (a, b]
    while b - a > precision or sturm_count(p, a, b, seq) > 1:
        m = (a + b) / 2
        if sturm_count(p, a, m, seq) >= 1:
            b = m
        else:
            a = m
    return RootInterval(a, b, p)


def refine(interval: RootInterval, precision: RationalLike) -> RootInterval:
    """Shrink an isolating interval to width ``precision`` by bisection."""
    precision = as_fraction(precision)
    p = interval.polynomial
    seq = sturm_sequence(p)
    a, b = interval.low, interval.high
    while b - a > precision:
        m = (a + b) / 2
        if sturm_count(p, a, m, seq) >= 1:
            b = m
        else:
            a = m
    return RootInterval(a, b, p)
