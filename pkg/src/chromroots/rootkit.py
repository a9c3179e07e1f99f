"""Numeric roots, discriminant certificates and Gauss-Lucas hull checks.

Numeric roots come from the companion-matrix eigenvalues of each square-free
factor (Yun decomposition), so repeated chromatic roots such as the ``(x-1)^k``
of a tree do not smear into spurious complex clusters.  Whether a polynomial
is real-rooted is always decided exactly, by Sturm sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .census import SubgraphCounts
from .chrompoly import top_coefficients
from .graph import Graph
from .polynomial import Poly, binom
from .sturm import all_real as exact_all_real
from .sturm import count_real_roots

RESIDUAL_TOL = 1e-8
HULL_TOL = 1e-8


@dataclass
class RootSet:
    """Roots with multiplicity of an exact polynomial.

    ``all_real`` is decided exactly; ``status`` is ``"indeterminate"`` when
    some numeric root failed the residual check.
    """

    roots: list[complex]
    residual: float
    all_real: bool
    status: str = "ok"

    @property
    def max_imag(self) -> float:
        return max((z.imag for z in self.roots), default=0.0)

    @property
    def indeterminate(self) -> bool:
        return self.status != "ok"

    def nonreal(self) -> list[complex]:
        return [z for z in self.roots if z.imag != 0.0]

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "roots": [[z.real, z.imag] for z in self.roots],
            "all_real": "indeterminate" if self.indeterminate else self.all_real,
            "max_imag": self.max_imag,
            "residual": self.residual,
            "status": self.status,
        }


@dataclass(frozen=True)
class DiscriminantReport:
    value: int | Fraction
    sign: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "sign", (self.value > 0) - (self.value < 0))

    @property
    def certifies_nonreal(self) -> bool:
        return self.sign < 0

    def to_json(self) -> dict:
        return {"value": str(self.value), "sign": self.sign}


# ---------------------------------------------------------------------------
# numeric roots


def _polish(coeffs: np.ndarray, z: complex, steps: int = 3) -> complex:
    d = np.polyder(coeffs)
    for _ in range(steps):
        fz = np.polyval(coeffs, z)
        dz = np.polyval(d, z)
        if dz == 0:
            break
        step = fz / dz
        z = z - step
        if abs(step) <= 1e-17 * max(1.0, abs(z)):
            break
    return complex(z)


def _factor_roots(f: Poly) -> list[complex]:
    """Roots of a square-free integer polynomial, with the exact real-root count enforced."""
    if f.degree == 1:
        return [complex(-Fraction(f[0]) / Fraction(f[1]))]
    lead = Fraction(f.lc)
    monic = np.array([float(Fraction(c) / lead) for c in reversed(f.coeffs)])
    zs = [_polish(monic, z) for z in np.roots(monic)]
    nreal = count_real_roots(f)
    # the nreal roots closest to the axis are the real ones
    zs.sort(key=lambda z: abs(z.imag))
    out = [complex(z.real, 0.0) for z in zs[:nreal]]
    rest = zs[nreal:]
    # restore exact conjugate symmetry among the non-real ones
    upper = sorted((z for z in rest if z.imag > 0), key=lambda z: (z.real, z.imag))
    lower = sorted((z for z in rest if z.imag < 0), key=lambda z: (z.real, -z.imag))
    if len(upper) == len(lower):
        for u, l in zip(upper, lower):
            re = 0.5 * (u.real + l.real)
            im = 0.5 * (u.imag - l.imag)
            out += [complex(re, im), complex(re, -im)]
    else:
        out += rest
    return out


def _residual(p: Poly, roots: Iterable[complex]) -> float:
    lead = Fraction(p.lc)
    monic = np.array([float(Fraction(c) / lead) for c in reversed(p.coeffs)])
    scale = max(1.0, float(np.max(np.abs(monic))))
    worst = 0.0
    for z in roots:
        # scale by |z|^d so large roots are judged relative to the dominant term
        r = abs(np.polyval(monic, z)) / (scale * max(1.0, abs(z)) ** p.degree)
        worst = max(worst, float(r))
    return worst


def find_roots(p: Poly | Sequence) -> RootSet:
    """All complex roots with multiplicity, sorted by real then imaginary part."""
    p = p if isinstance(p, Poly) else Poly(p)
    if p.degree < 1:
        raise ValueError("find_roots needs degree >= 1")
    roots: list[complex] = []
    for factor, mult in p.squarefree_decomposition():
        zs = _factor_roots(factor)
        for z in zs:
            roots.extend([z] * mult)
    roots.sort(key=lambda z: (z.real, z.imag))
    residual = _residual(p, roots)
    status = "ok" if residual <= RESIDUAL_TOL and len(roots) == p.degree else "indeterminate"
    return RootSet(roots=roots, residual=residual, all_real=exact_all_real(p), status=status)


# ---------------------------------------------------------------------------
# discriminants


def quadratic_disc_test(n: int, m, t) -> DiscriminantReport:
    """Discriminant of ``(n(n-1)/2) x^2 - (n-1) m x + C(m,2) - t``.

    This quadratic is ``P^(n-2) / (n-2)!`` for a graph of order ``n`` with
    ``m`` edges and ``t`` triangles; a negative value certifies a non-real root.
    """
    if n < 2:
        raise ValueError("order must be >= 2")
    a = Fraction(n * (n - 1), 2)
    b = -(n - 1) * Fraction(m)
    c = binom(Fraction(m), 2) - Fraction(t)
    value = b * b - 4 * a * c
    return DiscriminantReport(value.numerator if value.denominator == 1 else value)


def quartic_discriminant(a, b, c, d, e) -> DiscriminantReport:
    """Discriminant of ``a x^4 + b x^3 + c x^2 + d x + e``; negative means two non-real roots."""
    if a == 0:
        raise ValueError("leading coefficient must be nonzero")
    value = (
        256 * a**3 * e**3
        - 192 * a**2 * b * d * e**2
        - 128 * a**2 * c**2 * e**2
        + 144 * a**2 * c * d**2 * e
        - 27 * a**2 * d**4
        + 144 * a * b**2 * c * e**2
        - 6 * a * b**2 * d**2 * e
        - 80 * a * b * c**2 * d * e
        + 18 * a * b * c * d**3
        + 16 * a * c**4 * e
        - 4 * a * c**3 * d**2
        - 27 * b**4 * e**2
        + 18 * b**3 * c * d * e
        - 4 * b**3 * d**3
        - 4 * b**2 * c**3 * e
        + b**2 * c**2 * d**2
    )
    return DiscriminantReport(value)


def quartic_from_counts(counts: SubgraphCounts, n: int, *, integral: bool = True) -> tuple:
    """Coefficients (degree 4 down to 0) of ``P^(n-4) / (n-4)!`` from subgraph counts.

    With ``integral=True`` the coefficients are scaled by a positive common
    multiple of their denominators, which leaves discriminant signs unchanged.
    Counts may be rational (for example expectations).
    """
    if n < 5:
        raise ValueError("quartic certificate needs n >= 5")
    top = top_coefficients(counts, n)
    coeffs = [
        Fraction(binom(n, 4)) * top[0],
        Fraction(binom(n - 1, 3)) * top[1],
        Fraction(binom(n - 2, 2)) * top[2],
        Fraction(n - 3) * top[3],
        Fraction(top[4]),
    ]
    if not integral:
        return tuple(coeffs)
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return tuple(int(c * lcm) for c in coeffs)


def quartic_disc_test(counts: SubgraphCounts, n: int) -> DiscriminantReport:
    return quartic_discriminant(*quartic_from_counts(counts, n))


# ---------------------------------------------------------------------------
# convex hulls


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[complex], eps: float = 0.0) -> list[tuple[float, float]]:
    """Andrew's monotone chain; returns hull vertices counter-clockwise.

    Collinear input yields the two extreme points, a single point yields one.
    """
    pts = sorted({(z.real, z.imag) for z in points})
    if len(pts) <= 2:
        return pts
    lower: list[tuple[float, float]] = []
    for pt in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], pt) <= eps:
            lower.pop()
        lower.append(pt)
    upper: list[tuple[float, float]] = []
    for pt in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], pt) <= eps:
            upper.pop()
        upper.append(pt)
    hull = lower[:-1] + upper[:-1]
    return hull


def _seg_dist(p, a, b) -> float:
    ax, ay = b[0] - a[0], b[1] - a[1]
    L = ax * ax + ay * ay
    if L == 0:
        return math.hypot(p[0] - a[0], p[1] - a[1])
    s = max(0.0, min(1.0, ((p[0] - a[0]) * ax + (p[1] - a[1]) * ay) / L))
    return math.hypot(p[0] - a[0] - s * ax, p[1] - a[1] - s * ay)


def hull_distance(hull: Sequence[tuple[float, float]], z: complex) -> float:
    """Euclidean distance from ``z`` to the (possibly degenerate) convex polygon ``hull``."""
    p = (z.real, z.imag)
    if len(hull) == 1:
        return math.hypot(p[0] - hull[0][0], p[1] - hull[0][1])
    if len(hull) == 2:
        return _seg_dist(p, hull[0], hull[1])
    inside = all(_cross(hull[i], hull[(i + 1) % len(hull)], p) >= 0 for i in range(len(hull)))
    if inside:
        return 0.0
    return min(_seg_dist(p, hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull)))


@dataclass(frozen=True)
class HullReport:
    contained: bool
    max_violation: float
    tolerance: float


def hull_containment(outer: RootSet | Sequence[complex], inner: RootSet | Sequence[complex]) -> HullReport:
    outer_roots = outer.roots if isinstance(outer, RootSet) else list(outer)
    inner_roots = inner.roots if isinstance(inner, RootSet) else list(inner)
    scale = max([1.0] + [abs(z) for z in outer_roots])
    tol = HULL_TOL * scale
    hull = convex_hull(outer_roots)
    worst = max((hull_distance(hull, z) for z in inner_roots), default=0.0)
    return HullReport(contained=worst <= tol, max_violation=worst, tolerance=tol)


# ---------------------------------------------------------------------------
# classical root-location bounds


@dataclass
class SanityReport:
    violations: list[tuple[str, complex, float]]
    cyclomatic_bound: float | None
    degree_bound: float

    @property
    def ok(self) -> bool:
        return not self.violations


def root_location_sanity(g: Graph, roots: RootSet, tol: float = 1e-8) -> SanityReport:
    """Check ``|z - 1| <= m - n + 1`` (connected graphs, nonzero roots) and ``|z| < 8 * maxdeg``."""
    violations = []
    scale = max([1.0] + [abs(z) for z in roots.roots])
    slack = tol * scale
    cyc = None
    if g.is_connected():
        cyc = g.m - g.n + 1
        for z in roots.roots:
            if abs(z) <= slack:
                continue  # the root 0 is exempt (trees have cyclomatic number 0)
            if abs(z - 1) > cyc + slack:
                violations.append(("cyclomatic", z, abs(z - 1) - cyc))
    dbound = 8 * g.max_degree
    if g.m > 0:
        for z in roots.roots:
            if abs(z) >= dbound + slack:
                violations.append(("max-degree", z, abs(z) - dbound))
    return SanityReport(violations=violations, cyclomatic_bound=cyc, degree_bound=dbound)


def certify_nonreal(p: Poly) -> tuple[bool, str]:
    """Differentiate ``p`` down to a quadratic and a quartic and test their discriminants.

    Returns ``(certified, how)``; by Gauss-Lucas a certified polynomial has a
    non-real root.  An uncertified one may still have non-real roots.
    """
    n = p.degree
    if n >= 2:
        q = p.derivative(n - 2)
        c, b, a = (Fraction(x) for x in (q[0], q[1], q[2]))
        if b * b - 4 * a * c < 0:
            return True, "quadratic"
    if n >= 4:
        q = p.derivative(n - 4)
        if quartic_discriminant(*(Fraction(q[i]) for i in (4, 3, 2, 1, 0))).sign < 0:
            return True, "quartic"
    return False, "none"
