import math
from fractions import Fraction

import mpmath
import pytest

from chromroots.chrompoly import chromatic_polynomial, normalized_derivative
from chromroots.graph import RingParams, ring_cliques
from chromroots.polynomial import Poly
from chromroots.ring import (
    GROWTH_LIMIT,
    chain_w,
    f_from_q,
    f_quadratic,
    leftmost_root_bound,
    q_polynomial,
    ring_root_report,
    ring_scan,
    ring_scan_csv,
    w_expansion_top,
    w_polynomial,
    w_real_roots,
)


def test_low_levels():
    assert w_polynomial(0) == Poly([1])
    assert w_polynomial(1) == Poly([Fraction(3, 4), 1])
    with pytest.raises(ValueError):
        w_polynomial(-1)


@pytest.mark.parametrize("params", [(1, 1, 1, 1), (2, 1, 3, 1), (2, 2, 2, 2), (1, 3, 2, 2), (3, 1, 1, 2)])
def test_chain_matches_recurrence(params):
    rp = RingParams(*params)
    assert chain_w(rp) == w_polynomial(rp.a, rp.p, rp.q, rp.k)


def test_c4_report():
    rep = ring_root_report((1, 1, 1, 1))
    assert rep.max_imag == pytest.approx(math.sqrt(3) / 2, abs=1e-15)
    doc = rep.to_json()
    assert doc["schema"] == 1 and doc["real_part"] == "3/2" and doc["certified_real"]


def test_chain_errors():
    rp = RingParams(2, 1, 1, 1)
    with pytest.raises(ArithmeticError):
        q_polynomial(rp, chromatic_polynomial(ring_cliques(rp)) + 1)
    with pytest.raises(ArithmeticError):
        f_from_q(rp, Poly([0, 1]))


@pytest.mark.parametrize("a", [2, 3, 5, 9, 16])
def test_top_coefficients_closed_form(a):
    w = w_polynomial(a)
    assert w.degree == a
    assert tuple(w[a - i] for i in range(3)) == w_expansion_top(a)


@pytest.mark.parametrize("a", range(2, 12))
def test_quadratic_is_normalised_derivative(a):
    assert normalized_derivative(w_polynomial(a), a - 2) == f_quadratic(a)


@pytest.mark.parametrize("a", [2, 4, 7, 12])
def test_bound_roots_are_the_quadratic_roots(a):
    lo, hi = leftmost_root_bound(a)
    q = f_quadratic(a)
    with mpmath.workdps(40):
        for r in (lo, hi):
            val = sum(mpmath.mpf(c.numerator) / c.denominator * r**i for i, c in enumerate(map(Fraction, q.coeffs)))
            assert abs(val) < mpmath.mpf(10) ** -25 * a**6
    assert lo <= hi
    with pytest.raises(ValueError):
        leftmost_root_bound(1)


def test_w_roots_certified_and_bracketed():
    for a in range(2, 15):
        wr = w_real_roots(w_polynomial(a))
        roots = wr.roots
        assert wr.all_real and wr.nonpositive and len(roots) == a and all(r < 0 for r in roots)
        lo, hi = leftmost_root_bound(a)
        # Gauss-Lucas: the leftmost root of W lies left of both roots of its (a-2)th derivative
        assert roots[0] <= lo <= hi


def test_scan_rows_and_csv():
    rows = ring_scan(8, 2)
    assert [r.a for r in rows] == list(range(2, 9)) and all(r.certified for r in rows)
    growth = [float(r.growth) for r in rows]
    assert growth == sorted(growth)
    text = ring_scan_csv(rows)
    lines = text.splitlines()
    assert lines[0].startswith("a,R_a,R_a_over_16a2,r_plus") and len(lines) == 8
    assert GROWTH_LIMIT == pytest.approx(0.2041241452)


def test_asymmetric_ring_has_real_roots_off_the_line():
    # p = q = 1/2, k = -1/2: W = z^2 + 3/2 z - 7/16 has the positive root 1/4
    rp = RingParams(2, 1, 2, 1)
    rep = ring_root_report(rp)
    assert rep.certified_real and not rep.nonpositive
    assert rep.w == Poly([Fraction(-7, 16), Fraction(3, 2), 1])
    # a nonnegative W root gives real roots of Q, here 2 and 3; 3 comes from (x)_{a+c}, not from P
    q = q_polynomial(rp)
    assert [float(x) for x in rep.q_real] == [2.0, 3.0]
    assert q(2) == q(3) == 0
    pi = chromatic_polynomial(ring_cliques(rp))
    assert pi(2) == 0 and pi(3) != 0
    (centre, im), = rep.chromatic_nonreal
    z = complex(centre, float(im))
    assert abs(sum(float(c) * z**i for i, c in enumerate(pi.coeffs))) < 1e-9


def test_repeated_w_roots_are_reported_once():
    rep = ring_root_report((3, 1, 1, 1))
    assert rep.w.degree == 3 and len(rep.w_roots) == 2 and rep.certified_real
