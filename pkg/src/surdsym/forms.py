"""Indefinite binary quadratic forms, generator actions, and domain tests.

A form ``Form(m, n, k)`` stands for m*x**2 + n*y**2 + k*x*y, with
discriminant k**2 - 4*m*n > 0.  The two roots of m*t**2 + k*t + n are kept
exactly as :class:`~surdsym.exact.Surd` values.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Tuple

from .exact import Surd


class InternalError(RuntimeError):
    """An invariant the code relies on failed; indicates a bug, not bad input."""


@dataclass(frozen=True, order=True)
class Form:
    m: int
    n: int
    k: int

    def coeffs(self) -> Tuple[int, int, int]:
        return (self.m, self.n, self.k)

    def max_abs(self) -> int:
        return max(abs(self.m), abs(self.n), abs(self.k))

    def __repr__(self) -> str:
        return f"({self.m},{self.n},{self.k})"


class DomainLabel(enum.Enum):
    H0 = "H0"
    H0R = "H0R"
    HA = "HA"
    HABAR = "HAbar"
    HB = "HB"
    HBBAR = "HBbar"
    BOUNDARY = "Boundary"
    OUTER = "Outer"


#: Run-length-encoded word in the generators: a sequence of (gen, exponent)
#: pairs with positive exponents, e.g. (("A", 2), ("B", 1), ("R", 1)).
GeneratorWord = Tuple[Tuple[str, int], ...]

GENERATORS = ("A", "B", "R", "A-", "B-")

INVOLUTION_NAMES = ("complementary", "conjugate", "adjoint", "antipodal", "opposite")


def discriminant(f: Form) -> int:
    return f.k * f.k - 4 * f.m * f.n


def involution(f: Form, which: str) -> Form:
    m, n, k = f.m, f.n, f.k
    if which == "complementary":
        return Form(n, m, -k)
    if which == "conjugate":
        return Form(m, n, -k)
    if which == "adjoint":
        return Form(-n, -m, k)
    if which == "antipodal":
        return Form(-n, -m, -k)
    if which == "opposite":
        return Form(-m, -n, -k)
    raise ValueError(f"unknown involution {which!r}")


def complementary(f: Form) -> Form:
    return involution(f, "complementary")


def conjugate(f: Form) -> Form:
    return involution(f, "conjugate")


def adjoint(f: Form) -> Form:
    return involution(f, "adjoint")


def antipodal(f: Form) -> Form:
    return involution(f, "antipodal")


def apply_generator(f: Form, g: str) -> Form:
    m, n, k = f.m, f.n, f.k
    if g == "A":
        return Form(m, m + n + k, 2 * m + k)
    if g == "B":
        return Form(m + n + k, n, 2 * n + k)
    if g == "R":
        return Form(n, m, -k)
    if g == "A-":
        return Form(m, m + n - k, k - 2 * m)
    if g == "B-":
        return Form(m + n - k, n, k - 2 * n)
    raise ValueError(f"unknown generator {g!r}")


def gen_power(f: Form, g: str, e: int) -> Form:
    """Apply g**e in closed form; e may be any integer for A and B."""
    m, n, k = f.m, f.n, f.k
    if g == "A":
        return Form(m, n + e * k + e * e * m, k + 2 * e * m)
    if g == "B":
        return Form(m + e * k + e * e * n, n, k + 2 * e * n)
    if g == "R":
        if e % 2 == 0:
            return f
        return Form(n, m, -k)
    if g in ("A-", "B-"):
        return gen_power(f, g[0], -e)
    raise ValueError(f"unknown generator {g!r}")


def apply_word(f: Form, word: Iterable[Tuple[str, int]]) -> Form:
    """Apply an RLE word left factor first: apply_word(f, ((A,2),(B,1))) = B(A(A(f)))."""
    for g, e in word:
        if e < 0:
            raise ValueError(f"word exponent must be positive, got {e}")
        f = gen_power(f, g, e)
    return f


def word_str(word: GeneratorWord) -> str:
    if not word:
        return "(empty)"
    parts = []
    for g, e in word:
        parts.append(g if e == 1 else f"{g}^{e}")
    return " ".join(parts)


def roots(f: Form) -> Tuple[Surd, Surd]:
    """(xi_plus, xi_minus): the roots (-k +- sqrt(delta)) / (2m), exactly.

    Requires delta > 0 and m != 0 (for m == 0, reroute through R first).
    """
    d = discriminant(f)
    if d <= 0:
        raise ValueError(f"form {f} is not indefinite (delta={d})")
    if f.m == 0:
        raise ValueError(f"form {f} has m=0; apply R and use the swapped roots")
    # (d - k*k) = -4mn is always divisible by 2m, so both are already normalized.
    return (Surd.normalized(-f.k, 2 * f.m, d), Surd.normalized(f.k, -2 * f.m, d))


def domain_of(f: Form) -> DomainLabel:
    """Classify f into the cylinder-domain partition; exact root comparisons."""
    d = discriminant(f)
    if d <= 0:
        raise ValueError(f"form {f} is not indefinite (delta={d})")
    if f.m > 0 and f.n < 0:
        return DomainLabel.H0
    if f.m < 0 and f.n > 0:
        return DomainLabel.H0R
    if f.m == 0 or f.n == 0:
        return DomainLabel.BOUNDARY
    xp, xm = roots(f)
    cp1, cp0, cpm1 = xp.compare_to(1), xp.compare_to(0), xp.compare_to(-1)
    cm1, cm0, cmm1 = xm.compare_to(1), xm.compare_to(0), xm.compare_to(-1)
    if cp1 == 0 or cpm1 == 0 or cm1 == 0 or cmm1 == 0:
        return DomainLabel.BOUNDARY
    if cpm1 > 0 and cp0 < 0 and cmm1 < 0:
        return DomainLabel.HA
    if cp1 > 0 and cm0 > 0 and cm1 < 0:
        return DomainLabel.HABAR
    if cpm1 < 0 and cmm1 > 0 and cm0 < 0:
        return DomainLabel.HB
    if cp0 > 0 and cp1 < 0 and cm1 > 0:
        return DomainLabel.HBBAR
    return DomainLabel.OUTER


def content(f: Form) -> int:
    """gcd of the coefficients; 0 only for the zero form."""
    return gcd(gcd(abs(f.m), abs(f.n)), abs(f.k))


def is_primitive(f: Form) -> bool:
    return content(f) == 1


def scale(f: Form, s: int) -> Form:
    if s <= 0:
        raise ValueError("scale factor must be positive")
    return Form(s * f.m, s * f.n, s * f.k)
