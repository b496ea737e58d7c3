"""Exact arithmetic primitives: rationals, combinatorics, dense polynomials.

Everything in this module is pure and deterministic, and no floating point
enters any computation.  Rational numbers are stdlib ``fractions.Fraction``
objects, which guarantee canonical form (gcd-reduced, positive denominator,
``Fraction(0, 5) == Fraction(0, 1)``) and raise ``ZeroDivisionError`` on a
zero denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

Rational = Fraction

factorial = math.factorial

__all__ = [
    "Rational",
    "factorial",
    "gen_binomial",
    "rational_sqrt",
    "factorize_integer",
    "format_factorized",
    "format_rational",
    "parse_rational",
    "render_decimal",
    "RationalPolynomial",
]

TRIAL_DIVISION_LIMIT = 1_000_000


def gen_binomial(top: int, j: int) -> Fraction:
    """Generalized binomial coefficient C(top, j) for any integer top.

    Defined through the falling factorial top (top-1) ... (top-j+1) / j!,
    so it vanishes for 0 <= top < j but is generally nonzero for negative
    top, e.g. C(-2, 3) = -4.
    """
    if j < 0:
        raise ValueError("lower index must be non-negative")
    num = 1
    for t in range(j):
        num *= top - t
        if num == 0:
            return Fraction(0)
    return Fraction(num, math.factorial(j))


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if x < 0:
        raise ValueError("square root of a negative rational")
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def factorize_integer(value: int, trial_limit: int = TRIAL_DIVISION_LIMIT) -> list[tuple[int, int]]:
    """Factor a positive integer by trial division, primes ascending.

    Division stops at ``trial_limit``; whatever remains past the cap is
    appended as a single unfactored residual (possibly composite), so the
    product of p**e over the result always reconstructs ``value``.
    """
    if value < 1:
        raise ValueError("only positive integers are factored")
    factors: list[tuple[int, int]] = []
    rem = value
    p = 2
    while p <= trial_limit and p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if rem > 1:
        factors.append((rem, 1))
    return factors


def _format_factored_int(v: int) -> str:
    parts = []
    for p, e in factorize_integer(v):
        parts.append(str(p) if e == 1 else f"{p}^{e}")
    return "×".join(parts) if parts else "1"


def format_factorized(x: Fraction) -> str:
    """Prime-factorized rendering of a rational, e.g. -3×53/2^16.

    Exponent 1 is omitted; a unit numerator or denominator prints as the
    bare factorization of the other side; zero prints as ``0``.
    """
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    num_s = "1" if num == 1 else _format_factored_int(num)
    if den == 1:
        return sign + num_s
    return f"{sign}{num_s}/{_format_factored_int(den)}"


def format_rational(x: Fraction) -> str:
    """Serialize as ``p/q``; the ``/q`` part is omitted when q == 1."""
    return str(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or a plain integer / decimal string) exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def render_decimal(x: Fraction, digits: int = 12) -> str:
    """Correctly rounded decimal string with ``digits`` significant digits.

    Computed from the exact rational at print time (round-half-even); no
    intermediate binary float is involved.
    """
    if digits < 1:
        raise ValueError("need at least one significant digit")
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d)


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` multiplies x**i.  The stored tuple is canonical: it never
    ends in a zero, and the zero polynomial is the empty tuple (degree -1).
    Instances are immutable and safe to share across threads.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls((Fraction(c),))

    @classmethod
    def identity(cls) -> "RationalPolynomial":
        """The polynomial x."""
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(tuple(out))

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if not self.coeffs or not other.coeffs:
                return RationalPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RationalPolynomial(tuple(out))
        s = Fraction(other)
        return RationalPolynomial(tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x):
        """Horner evaluation; exact for Fraction x, float for float x."""
        acc = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if not isinstance(x, float) else float(c))
        return acc

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)
