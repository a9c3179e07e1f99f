"""Dense univariate polynomials with exact integer or rational coefficients.

A single immutable :class:`Poly` type covers both the integer polynomials
produced by chromatic-polynomial computations and the rational ones that
appear in the ring-of-cliques chain.  Coefficients are stored lowest degree
first; a :class:`fractions.Fraction` whose denominator is 1 is stored as a
plain ``int`` so that integer polynomials stay integer under exact division.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"inexact coefficient {c!r} ({type(c).__name__})")


class Poly:
    """Exact polynomial ``sum(coeffs[i] * x**i)``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Coeff, ...] = tuple(cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-_norm(r), 1])
        return p

    @classmethod
    def falling_factorial(cls, k: int) -> "Poly":
        """``(x)_k = x (x-1) ... (x-k+1)``; ``(x)_0 = 1``."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        return cls.from_roots(range(k))

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Coeff:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, i: int) -> Coeff:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                xpart = "x" if i == 1 else f"x^{i}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _norm(other)
            return Poly(a * c for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, c) -> "Poly":
        c = Fraction(_norm(c))
        return Poly(Fraction(a) / c for a in self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = other.degree
        lead = Fraction(other.lc)
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            quot[i - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= f * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"division not exact, remainder {r}")
        return q

    # -- calculus and substitution -----------------------------------------

    def derivative(self, k: int = 1) -> "Poly":
        if k < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = list(self.coeffs)
        for _ in range(k):
            cs = [i * c for i, c in enumerate(cs)][1:]
        return Poly(cs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_dyadic(self, num: int, shift: int) -> int:
        """Return ``2**(shift*deg) * p(num / 2**shift)`` for integral ``p``.

        Integer-only evaluation keeps bisection on large-coefficient
        polynomials fast; the sign equals the sign of ``p(num / 2**shift)``.
        """
        acc = 0
        scale = 1
        step = 1 << shift
        for c in reversed(self.coeffs):
            acc = acc * num + c * scale
            scale *= step
        return acc

    def shift(self, h) -> "Poly":
        """Taylor shift: the polynomial ``q(z) = p(z + h)``."""
        h = _norm(h)
        cs = [Fraction(c) for c in self.coeffs]
        n = len(cs)
        # repeated synthetic division (Horner scheme for the shift)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                cs[j] += h * cs[j + 1]
        return Poly(cs)

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    # -- content and gcd ----------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.lc

    def primitive(self) -> "Poly":
        """Integer primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        dens = [Fraction(c).denominator for c in self.coeffs]
        lcm = 1
        for d in dens:
            lcm = lcm * d // math.gcd(lcm, d)
        ints = [int(Fraction(c) * lcm) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return Poly(c // g for c in ints)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic-free gcd, returned as a primitive integer polynomial."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
            if not b.is_zero():
                b = b.primitive()
        return a.primitive()

    def squarefree(self) -> "Poly":
        """Square-free part, primitive with positive leading coefficient."""
        if self.degree < 1:
            return self.primitive()
        g = self.gcd(self.derivative())
        return self.exact_div(g).primitive()

    def squarefree_decomposition(self) -> list[tuple["Poly", int]]:
        """Yun's algorithm: ``[(factor, multiplicity), ...]`` with primitive factors."""
        if self.degree < 1:
            return []
        f = self.primitive()
        fp = f.derivative()
        a = f.gcd(fp)
        b = f.exact_div(a)
        c = fp.exact_div(a)
        d = c - b.derivative()
        out = []
        i = 1
        while b.degree >= 1:
            a = b.gcd(d)
            if a.degree >= 1:
                out.append((a, i))
            b = b.exact_div(a)
            c = d.exact_div(a)
            d = c - b.derivative()
            i += 1
        return out

    # -- conversions ---------------------------------------------------------

    def even_part_substitution(self) -> "Poly":
        """For an even polynomial ``F(z)``, the polynomial ``W`` with ``F(z) = W(z**2)``."""
        odd = [i for i, c in enumerate(self.coeffs) if i % 2 == 1 and c != 0]
        if odd:
            raise ValueError(f"polynomial is not even; odd-degree terms at {odd}")
        return Poly(self.coeffs[::2])

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        p = cls(Fraction(c) for c in obj["coeffs"])
        if p.degree != obj.get("degree", p.degree):
            raise ValueError("degree field does not match coefficient list")
        return p


def binom(m, k: int):
    """Generalised binomial ``m (m-1) ... (m-k+1) / k!`` for exact ``m``."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= m - i
    if isinstance(num, int):
        return num // math.factorial(k)
    return _norm(Fraction(num) / math.factorial(k))


def as_poly(p: Union[Poly, Sequence]) -> Poly:
    return p if isinstance(p, Poly) else Poly(p)
