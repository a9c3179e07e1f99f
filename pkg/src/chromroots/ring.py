"""Ring of four cliques: the Q -> F -> W chain and imaginary-part growth.

For ``C4(a, b, c, d)`` of order ``n`` the chromatic polynomial factors as

    P(x) = (x)_{b+c} (x)_{c+d} / (x)_{a+c} * Q(x),

``F(z) = Q(z + (n-1)/2)`` is even and ``F(z) = W(z^2)``.  ``W`` also follows a
three-term recurrence in the level ``a`` with half-integer parameters
``p, q, k``.  Its roots are real; each negative root ``r`` gives the
chromatic roots ``(n-1)/2 +/- i sqrt(-r)``.  In the symmetric case
``a = b = c = d`` all roots are negative and simple.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from .chrompoly import chromatic_polynomial
from .graph import RingParams, ring_cliques
from .polynomial import Poly
from .sturm import count_real_roots, isolate_real_roots, refine_root

HALF = Fraction(1, 2)


def w_polynomial(a: int, p=HALF, q=HALF, k=HALF) -> Poly:
    """``W_{a,p,q,k}`` from the three-term recurrence (exact rationals)."""
    if a < 0:
        raise ValueError("level a must be >= 0")
    return _w_chain(a, Fraction(p), Fraction(q), Fraction(k))[a]


@lru_cache(maxsize=64)
def _w_chain(a: int, p: Fraction, q: Fraction, k: Fraction) -> tuple[Poly, ...]:
    s = p * q + p * k + q * k
    ws = [Poly([1]), Poly([s, 1])]
    for j in range(2, a + 1):
        lin = Poly([(j - 1) * (2 * p + 2 * q + 2 * k + 2 * j - 3) + s, 1])
        mult = (j - 1) * (p + q + j - 2) * (q + k + j - 2) * (p + k + j - 2)
        ws.append(lin * ws[j - 1] - ws[j - 2] * mult)
    return tuple(ws[: a + 1])


def w_expansion_top(a: int) -> tuple[Fraction, Fraction, Fraction]:
    """Closed forms for the three leading coefficients of the symmetric ``W_a``."""
    a = Fraction(a)
    return (
        Fraction(1),
        Fraction(2, 3) * a**3 + a / 12,
        Fraction(2, 9) * a**6
        - Fraction(3, 5) * a**5
        + Fraction(5, 9) * a**4
        - Fraction(1, 6) * a**3
        + Fraction(1, 288) * a**2
        - Fraction(7, 480) * a,
    )


# ---------------------------------------------------------------------------
# the chain from the chromatic polynomial


def q_polynomial(params: RingParams, pi: Poly | None = None) -> Poly:
    """``Q = P * (x)_{a+c} / ((x)_{b+c} (x)_{c+d})``, by exact division.

    Raises :class:`ArithmeticError` if the division leaves a remainder.
    """
    if pi is None:
        pi = chromatic_polynomial(ring_cliques(params))
    a, b, c, d = params.as_tuple()
    num = pi * Poly.falling_factorial(a + c)
    den = Poly.falling_factorial(b + c) * Poly.falling_factorial(c + d)
    return num.exact_div(den)


def f_from_q(params: RingParams, q: Poly) -> Poly:
    """``F(z) = Q(z + (n-1)/2)``; must be even."""
    f = q.shift(Fraction(params.n - 1, 2))
    odd = [i for i, c in enumerate(f.coeffs) if i % 2 and c]
    if odd:
        raise ArithmeticError(f"F is not even for {params}: odd terms at degrees {odd}")
    return f


def w_from_f(f: Poly) -> Poly:
    return f.even_part_substitution()


def chain_w(params: RingParams, pi: Poly | None = None) -> Poly:
    return w_from_f(f_from_q(params, q_polynomial(params, pi)))


# ---------------------------------------------------------------------------
# the quadratic bound on the leftmost root


def f_quadratic(a: int) -> Poly:
    """``W_a^(a-2) / (a-2)!`` written from the closed-form top coefficients."""
    if a < 2:
        raise ValueError("quadratic bound needs a >= 2")
    _, c1, c2 = w_expansion_top(a)
    return Poly([c2, (a - 1) * c1, Fraction(a * (a - 1), 2)])


def leftmost_root_bound(a: int, dps: int = 40) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Both roots ``(r_minus, r_plus)`` of the quadratic, ``r_minus <= r_plus``.

    Evaluated in closed form: ``-2a^2/3 - 1/12 -/+ sqrt(170a^3 - 55a^2 - 5a - 5) / 15``.
    """
    if a < 2:
        raise ValueError("quadratic bound needs a >= 2")
    with mpmath.workdps(dps):
        centre = -mpmath.mpf(2) * a * a / 3 - mpmath.mpf(1) / 12
        rad = mpmath.sqrt(170 * a**3 - 55 * a**2 - 5 * a - 5) / 15
        return centre - rad, centre + rad


# ---------------------------------------------------------------------------
# root reports


@dataclass
class RingRootReport:
    """Distinct roots of ``W`` and the chromatic roots they determine.

    A negative root ``r`` gives the chromatic roots ``(n-1)/2 +/- i sqrt(-r)``.
    A nonnegative one (possible only for asymmetric block sizes) gives the
    real roots ``(n-1)/2 +/- sqrt(r)`` of ``Q``; these need not be chromatic
    roots, since ``Q`` carries the factor ``(x)_{a+c}`` of the multiplier.
    """

    params: RingParams
    w: Poly
    w_roots: list[mpmath.mpf]
    chromatic_nonreal: list[tuple[Fraction, mpmath.mpf]] = field(default_factory=list)
    q_real: list[mpmath.mpf] = field(default_factory=list)
    leftmost: mpmath.mpf | None = None
    bound: tuple[mpmath.mpf, mpmath.mpf] | None = None
    certified_real: bool = True
    nonpositive: bool = True

    @property
    def max_imag(self) -> float:
        if not self.chromatic_nonreal:
            return 0.0
        return float(max(im for _, im in self.chromatic_nonreal))

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "params": dict(zip("abcd", self.params.as_tuple())),
            "n": self.params.n,
            "p": str(self.params.p),
            "q": str(self.params.q),
            "k": str(self.params.k),
            "w_coeffs": [str(c) for c in self.w.coeffs],
            "w_roots": [mpmath.nstr(r, 25) for r in self.w_roots],
            "real_part": str(Fraction(self.params.n - 1, 2)),
            "nonreal_imag_parts": [mpmath.nstr(im, 25) for _, im in self.chromatic_nonreal],
            "q_real_roots": [mpmath.nstr(x, 25) for x in self.q_real],
            "leftmost": None if self.leftmost is None else mpmath.nstr(self.leftmost, 25),
            "bound": None if self.bound is None else [mpmath.nstr(b, 25) for b in self.bound],
            "max_imag": self.max_imag,
            "certified_real": self.certified_real,
            "w_nonpositive": self.nonpositive,
        }


@dataclass(frozen=True)
class WRoots:
    """Distinct real roots of ``W`` (ascending) with two exact Sturm certificates."""

    roots: list[mpmath.mpf]
    all_real: bool
    nonpositive: bool


def w_real_roots(w: Poly, tol=Fraction(1, 10**20)) -> WRoots:
    """Certified distinct real roots of ``W`` refined to width ``tol``.

    ``all_real`` holds when Sturm counts as many distinct real roots as the
    square-free part has degree; ``nonpositive`` when none of them is positive.
    """
    if w.degree < 1:
        return WRoots([], True, True)
    sf = w.squarefree()
    distinct = count_real_roots(sf)
    positive = count_real_roots(sf, 0)
    roots = []
    with mpmath.workdps(40):
        for lo, hi in isolate_real_roots(sf):
            lo, hi = refine_root(sf, lo, hi, Fraction(tol))
            mid = (lo + hi) / 2
            roots.append(mpmath.mpf(mid.numerator) / mid.denominator)
    return WRoots(roots, distinct == sf.degree, positive == 0)


def ring_root_report(params: RingParams | tuple, *, cross_check: bool | None = None) -> RingRootReport:
    """Roots of ``W`` for ``params`` and the roots of ``Q`` and ``P`` they give.

    ``W`` comes from the recurrence; for orders up to 12 (or when
    ``cross_check`` is set) it is also derived from the chromatic polynomial
    and the two must agree exactly.  A ``W`` with a non-real root raises
    :class:`ArithmeticError`.
    """
    if not isinstance(params, RingParams):
        params = RingParams(*params)
    w = w_polynomial(params.a, params.p, params.q, params.k)
    if cross_check is None:
        cross_check = params.n <= 12
    if cross_check:
        via_chain = chain_w(params)
        if via_chain != w:
            raise ArithmeticError(f"recurrence W and chain W disagree for {params}")
    wr = w_real_roots(w)
    if not wr.all_real:
        raise ArithmeticError(f"W for {params} has non-real roots")
    centre = Fraction(params.n - 1, 2)
    nonreal, real = [], []
    with mpmath.workdps(40):
        c = mpmath.mpf(centre.numerator) / centre.denominator
        for r in wr.roots:
            if r < 0:
                nonreal.append((centre, mpmath.sqrt(-r)))
            else:
                real.extend(sorted({c - mpmath.sqrt(r), c + mpmath.sqrt(r)}))
    report = RingRootReport(
        params=params,
        w=w,
        w_roots=wr.roots,
        chromatic_nonreal=nonreal,
        q_real=real,
        leftmost=wr.roots[0] if wr.roots else None,
        certified_real=wr.all_real,
        nonpositive=wr.nonpositive,
    )
    if params.a >= 2 and params.a == params.b == params.c == params.d:
        report.bound = leftmost_root_bound(params.a)
    return report


# ---------------------------------------------------------------------------
# the symmetric sweep


@dataclass(frozen=True)
class RingScanRow:
    a: int
    leftmost: mpmath.mpf
    leftmost_over_n2: mpmath.mpf
    r_plus: mpmath.mpf
    growth: mpmath.mpf
    certified: bool


def ring_scan_row(a: int) -> RingScanRow:
    w = w_polynomial(a)
    wr = w_real_roots(w, tol=Fraction(1, 10**20))
    left = wr.roots[0]
    n2 = 16 * a * a
    with mpmath.workdps(40):
        _, r_plus = leftmost_root_bound(a)
        return RingScanRow(
            a=a,
            leftmost=left,
            leftmost_over_n2=left / n2,
            r_plus=r_plus,
            growth=mpmath.sqrt(-left) / (4 * a),
            certified=wr.all_real and wr.nonpositive and len(wr.roots) == a,
        )


def ring_scan(amax: int = 40, amin: int = 2) -> list[RingScanRow]:
    return [ring_scan_row(a) for a in range(amin, amax + 1)]


def ring_scan_csv(rows: list[RingScanRow]) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["a", "R_a", "R_a_over_16a2", "r_plus", "r_plus_over_16a2", "sqrt_neg_R_a_over_4a", "certified"])
    for r in rows:
        wr.writerow(
            [
                r.a,
                mpmath.nstr(r.leftmost, 20),
                mpmath.nstr(r.leftmost_over_n2, 20),
                mpmath.nstr(r.r_plus, 20),
                mpmath.nstr(r.r_plus / (16 * r.a * r.a), 20),
                mpmath.nstr(r.growth, 20),
                int(r.certified),
            ]
        )
    return buf.getvalue()


GROWTH_LIMIT = 1 / math.sqrt(24)
