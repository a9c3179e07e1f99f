"""Exact real-root counting and isolation with Sturm sequences.

Every polynomial in a chain is kept as a primitive integer polynomial; the
remainder is rescaled by a positive constant only, so signs are preserved.
Evaluation at a rational point ``u/v`` uses the homogenised integer form
``sum c_i u^i v^(d-i)``, which has the sign of ``p(u/v)`` when ``v > 0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polynomial import Poly

INF = float("inf")


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_at(p: Poly, x) -> int:
    """Sign of ``p(x)`` for exact rational ``x`` (or +/-inf)."""
    if p.is_zero():
        return 0
    if x == INF:
        return _sign(p.lc)
    if x == -INF:
        return _sign(p.lc) * (-1 if p.degree % 2 else 1)
    x = Fraction(x)
    u, v = x.numerator, x.denominator
    acc = 0
    vpow = 1
    for c in reversed(p.coeffs):
        acc = acc * u + c * vpow
        vpow *= v
    # acc = v^d * p(u/v) * (leading scale); c may be Fraction for rational p
    return _sign(acc)


def sturm_chain(p: Poly) -> list[Poly]:
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    p0 = p.primitive()
    chain = [p0]
    if p0.degree < 1:
        return chain
    chain.append(p0.derivative().primitive())
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append((-r).primitive() if _sign((-r).lc) > 0 else -((r).primitive()))
    return chain


def sign_variations(chain: Sequence[Poly], x) -> int:
    signs = [s for s in (sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Poly, lo=-INF, hi=INF) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(lo, hi]``."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    sf = p.squarefree()
    if sf.degree < 1:
        return 0
    chain = sturm_chain(sf)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def all_real(p: Poly) -> bool:
    """True iff every complex root of ``p`` is real (multiplicities ignored)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = p.squarefree()
    if sf.degree < 1:
        return True
    chain = sturm_chain(sf)
    return sign_variations(chain, -INF) - sign_variations(chain, INF) == sf.degree


def root_bound(p: Poly) -> Fraction:
    """A power of two strictly exceeding every root modulus (Cauchy bound)."""
    lc = abs(Fraction(p.lc))
    b = 1 + max((abs(Fraction(c)) / lc for c in p.coeffs[:-1]), default=Fraction(0))
    k = 0
    while 2**k <= b:
        k += 1
    return Fraction(2**k)


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]`` each holding exactly one distinct real root, in increasing order.

    Endpoints are dyadic rationals.  A root that lands exactly on a bisection
    point is returned as a degenerate interval ``(r, r)``.
    """
    sf = p.squarefree()
    if sf.degree < 1:
        return []
    chain = sturm_chain(sf)
    b = root_bound(sf)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-b, b, sign_variations(chain, -b), sign_variations(chain, b))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        cnt = vlo - vhi
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = sign_variations(chain, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort()
    # pin roots that sit exactly on an endpoint
    pinned = []
    for lo, hi in out:
        if sign_at(sf, hi) == 0:
            pinned.append((hi, hi))
        else:
            pinned.append((lo, hi))
    return pinned


def refine_root(p: Poly, lo: Fraction, hi: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a square-free ``p`` down to width ``tol``."""
    if lo == hi:
        return lo, hi
    slo = sign_at(p, lo)
    shi = sign_at(p, hi)
    if shi == 0:
        return hi, hi
    if slo == 0:
        # lo is a (simple) root excluded from (lo, hi]; just right of it p has the sign of p'
        slo = sign_at(p.derivative(), lo)
    if slo == shi:
        raise ArithmeticError("interval does not bracket a sign change")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = sign_at(p, mid)
        if s == 0:
            return mid, mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def real_roots(p: Poly, tol=Fraction(1, 2**70)) -> list[tuple[Fraction, Fraction]]:
    """Certified enclosures of all distinct real roots, each of width at most ``tol``."""
    sf = p.squarefree()
    tol = Fraction(tol)
    return [refine_root(sf, lo, hi, tol) for lo, hi in isolate_real_roots(sf)]
