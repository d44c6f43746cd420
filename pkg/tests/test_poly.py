from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromroots.poly import (IntPolynomial, NoRootError, cauchy_bound, count_real_roots, eval_rational,
                             isolate_smallest_root, refine, sign_at, sturm_count)

t = IntPolynomial.t()
T0 = (t - 2) ** 3 + ((t - 1) ** 2).scale(4)
T1 = (t - 2) ** 6 + ((t - 1) ** 2 * (t - 2) ** 3).scale(4) - (t - 1) ** 4


def test_ring_examples():
    assert (t - 2) * (t - 2) == IntPolynomial([4, -4, 1])
    p = IntPolynomial([3, 0, -1, 7])
    assert p + IntPolynomial() == p
    # expanded by hand: (t^2 - 2t + 1)(t - 2) = t^3 - 4t^2 + 5t - 2
    assert (t - 1) ** 2 * (t - 2) == IntPolynomial([-2, 5, -4, 1])
    assert p.scale(0).is_zero()
    assert (p - p).coeffs == ()


def test_normalisation():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).degree == -1
    assert str(IntPolynomial([7, -17, 15, -6, 1]) * t) == "t^5 - 6*t^4 + 15*t^3 - 17*t^2 + 7*t"


def test_eval_rational():
    k3 = t * (t - 1) * (t - 2)
    assert eval_rational(k3, Fraction(2)) == 0
    assert eval_rational(k3, Fraction(32, 27)) == Fraction(-3520, 19683)
    assert eval_rational(IntPolynomial(), Fraction(5, 7)) == 0
    assert k3("3/2") == Fraction(-3, 8)


def test_exact_division():
    p = t * (t - 1) * (t - 2) * (t ** 2 + 1)
    assert p.exact_div(t - 1) == t * (t - 2) * (t ** 2 + 1)
    with pytest.raises(ValueError):
        p.exact_div(t - 3)


def test_json_round_trip():
    p = IntPolynomial([-(10 ** 40), 3, 0, 1])
    assert p.to_json_list() == [str(-(10 ** 40)), "3", "0", "1"]
    assert IntPolynomial.from_json(p.to_json()) == p


def test_sturm_examples():
    assert sturm_count(T0, 1, 2) == 1
    assert sturm_count(t * (t - 1) * (t - 2), 0, 3) == 2
    # t1 ~ 1.29042 lies just beyond 1.29
    assert sturm_count(T1, 1, Fraction(129, 100)) == 0
    with pytest.raises(ValueError):
        sturm_count(IntPolynomial(), 0, 1)


def test_sturm_half_open_interval():
    p = t * (t - 1) * (t - 2)
    assert sturm_count(p, 1, 2) == 1  # 2 counted, 1 not
    assert sturm_count(p, 0, 1) == 1
    assert sturm_count(p, Fraction(1, 2), Fraction(3, 2)) == 1


def test_sturm_repeated_roots():
    p = (t - 1) ** 3 * (t - 3) ** 2 * (t ** 2 + 1)
    assert sturm_count(p, 0, 4) == 2
    assert count_real_roots(p) == 2


def test_t1_polynomial_bisection_oracle():
    # independent check: sample signs on a 1e-4 grid over (1, 1.29]
    grid = [Fraction(10000 + i, 10000) for i in range(1, 2901)]
    signs = [sign_at(T1, x) for x in grid]
    assert len(set(signs)) == 1


def test_isolate_examples():
    iv0 = isolate_smallest_root(T0, 1, Fraction(1, 1000))
    assert iv0.width <= Fraction(1, 1000)
    assert Fraction(1294, 1000) < iv0.low and iv0.high < Fraction(1297, 1000)
    iv1 = isolate_smallest_root(T1, 1, Fraction(1, 10 ** 4))
    assert iv1.contains(Fraction(129042, 100000))
    iv = isolate_smallest_root(t - 2, 0)
    assert iv.contains(2)


def test_isolate_no_root():
    with pytest.raises(NoRootError):
        isolate_smallest_root(t ** 2 + 1, 0)
    with pytest.raises(NoRootError):
        isolate_smallest_root(t - 2, 5)


def test_refine_narrows():
    iv = isolate_smallest_root(T1, 1, Fraction(1, 100))
    fine = refine(iv, Fraction(1, 10 ** 20))
    assert fine.width <= Fraction(1, 10 ** 20)
    assert iv.low <= fine.low and fine.high <= iv.high
    assert sign_at(T1, fine.low) != sign_at(T1, fine.high)


def test_cauchy_bound_encloses_roots():
    p = (t - 7) * (t + 9) * (t - 1)
    b = cauchy_bound(p)
    assert b > 9
    assert sturm_count(p, -b, b) == 3


# -- properties ---------------------------------------------------------------

small_ints = st.integers(-20, 20)
polys = st.lists(small_ints, min_size=0, max_size=9).map(IntPolynomial)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=50)


@given(polys, polys, st.lists(rationals, min_size=10, max_size=10))
@settings(max_examples=150, deadline=None)
def test_product_degree_and_evaluation(p, q, ts):
    pq = p * q
    if not p.is_zero() and not q.is_zero():
        assert pq.degree == p.degree + q.degree
    for x in ts:
        assert eval_rational(pq, x) == eval_rational(p, x) * eval_rational(q, x)
        assert eval_rational(p + q, x) == eval_rational(p, x) + eval_rational(q, x)


# squarefree products of linear factors with roots on a 1/50 grid (separation >= 0.02),
# times an optional root-free quadratic
@st.composite
def separated_root_polys(draw):
    numerators = draw(st.lists(st.integers(-100, 100), min_size=1, max_size=6, unique=True))
    p = IntPolynomial([1])
    for a in numerators:
        p = p * IntPolynomial([-a, 50])
    if draw(st.booleans()):
        p = p * IntPolynomial([draw(st.integers(1, 9)), 0, 1])
    scale = draw(st.integers(1, 5)) * draw(st.sampled_from([1, -1]))
    return p.scale(scale), [Fraction(a, 50) for a in numerators]


@given(separated_root_polys(), st.integers(-3000, 2000), st.integers(1, 3000))
@settings(max_examples=150, deadline=None)
def test_sturm_matches_grid_sign_changes(data, lo_milli, width_milli):
    p, _roots = data
    lo = Fraction(lo_milli, 1000) + Fraction(1, 3000)  # off the root grid
    hi = lo + Fraction(width_milli, 1000)
    grid = [lo + Fraction(i, 1000) for i in range(width_milli + 1)]
    signs = [sign_at(p, x) for x in grid]
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)
    assert sturm_count(p, lo, hi) == changes


@given(separated_root_polys(), st.integers(-150, 150))
@settings(max_examples=100, deadline=None)
def test_isolate_straddles_sign_change(data, low_num):
    p, roots = data
    low = Fraction(low_num, 50) + Fraction(1, 7)
    above = sorted(r for r in roots if r > low)
    if not above:
        with pytest.raises(NoRootError):
            isolate_smallest_root(p, low)
        return
    iv = isolate_smallest_root(p, low, Fraction(1, 10 ** 6))
    assert iv.contains(above[0])
    assert sign_at(p, iv.high) == 0 or sign_at(p, iv.low) != sign_at(p, iv.high)
    assert sturm_count(p, iv.low, iv.high) == 1
