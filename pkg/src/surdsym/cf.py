"""Continued fractions: rational, regular surd, and minus ("modular") variants.

Surd expansions run on the integer state (P, Q) with fixed radicand D:
the current complete quotient is (P + sqrt(D)) / Q and every update keeps the
invariant Q | (D - P**2).  Periods are detected by first repetition of the
(P, Q) state, which for both variants coincides with digit-level minimality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple

from .exact import is_square, isqrt
from .forms import Form, InternalError, antipodal, discriminant


class SquareDiscriminantError(ValueError):
    """Raised where a non-square discriminant is required."""


@dataclass(frozen=True)
class CFExpansion:
    """A regular continued fraction: finite ``preperiod`` then cyclic ``period``.

    Finite (rational) expansions have an empty period.
    """

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    @property
    def is_finite(self) -> bool:
        return not self.period

    def digits(self, count: int) -> Tuple[int, ...]:
        """First ``count`` digits, cycling the period as needed."""
        out = list(self.preperiod[:count])
        while len(out) < count:
            if not self.period:
                raise ValueError(f"finite expansion has only {len(self.preperiod)} digits")
            out.extend(self.period[: count - len(out)])
        return tuple(out)


@dataclass(frozen=True)
class ModularCF:
    """A minus continued fraction: b0 - 1/(b1 - 1/(...)), digits >= 2 after b0."""

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    @property
    def is_purely_periodic(self) -> bool:
        return not self.preperiod


def cf_rational(num: int, den: int) -> CFExpansion:
    """Canonical (Euclidean) continued fraction of num/den, den > 0.

    The result never ends in 1 except for the single-digit expansion [1].
    """
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    digits = []
    p, q = num, den
    while q:
        a = p // q
        digits.append(a)
        p, q = q, p - a * q
    return CFExpansion(tuple(digits), ())


def cf_value(cf: CFExpansion) -> Fraction:
    """Exact value of a finite expansion."""
    if not cf.is_finite:
        raise ValueError("cf_value needs a finite expansion")
    if not cf.preperiod:
        raise ValueError("empty expansion has no value")
    val = Fraction(cf.preperiod[-1])
    for a in reversed(cf.preperiod[:-1]):
        if val == 0:
            raise ValueError("ill-formed expansion: zero complete quotient")
        val = a + 1 / val
    return val


def cf_parity_variant(cf: CFExpansion, parity: str) -> CFExpansion:
    """Finite expansion of the same value whose length has the given parity.

    Uses the tail identity [..., a] = [..., a-1, 1] (for a >= 2) or
    [..., b, 1] = [..., b+1].  The one-digit expansion [1] has no variant of
    even length made of positive digits.
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    if not cf.is_finite:
        raise ValueError("parity variant needs a finite expansion")
    digits = list(cf.preperiod)
    if not digits:
        raise ValueError("empty expansion")
    want_odd = parity == "odd"
    if (len(digits) % 2 == 1) == want_odd:
        return cf
    if digits[-1] > 1:
        digits[-1] -= 1
        digits.append(1)
    elif len(digits) >= 2:
        digits.pop()
        digits[-1] += 1
    else:
        raise ValueError(f"no {parity}-length variant of {cf.preperiod}")
    return CFExpansion(tuple(digits), ())


def _floor_pq(p: int, q: int, r: int) -> int:
    """floor((p + sqrt(D))/q) given r = isqrt(D), D non-square."""
    if q > 0:
        return (p + r) // q
    return -((p + r) // (-q)) - 1


def cf_surd(f: Form) -> CFExpansion:
    """Regular continued fraction of xi_plus(f) = (-k + sqrt(delta)) / (2m).

    For square discriminants the root is rational and the finite canonical
    expansion is returned.  Requires m != 0 (route m = 0 forms through R).
    """
    d = discriminant(f)
    if d <= 0:
        raise ValueError(f"form {f} is not indefinite (delta={d})")
    if f.m == 0:
        raise ValueError(f"form {f} has m=0; apply R first")
    if is_square(d):
        num, den = -f.k + isqrt(d), 2 * f.m
        if den < 0:
            num, den = -num, -den
        return cf_rational(num, den)
    r = isqrt(d)
    p, q = -f.k, 2 * f.m
    digits = []
    seen = {}
    while (p, q) not in seen:
        seen[(p, q)] = len(digits)
        a = _floor_pq(p, q, r)
        digits.append(a)
        p = a * q - p
        q = (d - p * p) // q
    start = seen[(p, q)]
    return CFExpansion(tuple(digits[:start]), tuple(digits[start:]))


def period_of_class(f: Form) -> Tuple[int, ...]:
    """The periodic part of cf_surd(f); requires a non-square discriminant."""
    if is_square(discriminant(f)):
        raise SquareDiscriminantError(f"form {f} has square discriminant")
    # Non-square delta forces m != 0 (m = 0 would give delta = k**2).
    return cf_surd(f).period


def period_inverse_pair(f: Form) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(period of C(f), period of the conjugate class).

    The second word is a reversal of the first up to rotation.
    """
    gamma = period_of_class(f)
    gamma_inv = period_of_class(Form(f.m, f.n, -f.k))
    dbl = gamma_inv + gamma_inv
    rev = tuple(reversed(gamma))
    n = len(gamma)
    if len(gamma_inv) != n or not any(dbl[i:i + n] == rev for i in range(n)):
        raise InternalError(f"period inverse mismatch: {gamma} vs {gamma_inv}")
    return gamma, gamma_inv


def modular_cf_surd(f: Form) -> ModularCF:
    """Minus continued fraction of xi_plus(f); non-square delta, m != 0.

    Digits after the first are always >= 2; the expansion of the root of a
    reduced form is purely periodic.
    """
    d = discriminant(f)
    if d <= 0:
        raise ValueError(f"form {f} is not indefinite (delta={d})")
    if is_square(d):
        raise SquareDiscriminantError(f"form {f} has square discriminant")
    if f.m == 0:
        raise ValueError(f"form {f} has m=0; apply R first")
    r = isqrt(d)
    p, q = -f.k, 2 * f.m
    digits = []
    seen = {}
    while (p, q) not in seen:
        seen[(p, q)] = len(digits)
        b = _floor_pq(p, q, r) + 1  # ceiling; the value is irrational
        digits.append(b)
        p = b * q - p
        q = (p * p - d) // q
    start = seen[(p, q)]
    return ModularCF(tuple(digits[:start]), tuple(digits[start:]))


def cf_period_to_modular_period(pi: Tuple[int, ...]) -> Tuple[int, ...]:
    """Rewrite an even-length regular period as a minus-CF period.

    Odd positions (1-indexed) map to a+2; each even-position digit a becomes
    a-1 copies of 2.  The input must be aligned so that position 1 carries an
    A-run; the output then matches the minus-CF period of the class's
    canonical reduced representative.
    """
    pi = tuple(pi)
    if len(pi) % 2 != 0:
        raise ValueError(f"period length must be even, got {len(pi)} (double it first)")
    if not pi or any((not isinstance(a, int)) or a < 1 for a in pi):
        raise ValueError(f"period digits must be positive integers: {pi}")
    out = []
    for i, a in enumerate(pi):
        if i % 2 == 0:  # 1-indexed odd position
            out.append(a + 2)
        else:
            out.extend([2] * (a - 1))
    return tuple(out)


def period_to_forms(s: Tuple[int, ...]) -> Tuple[Form, Form]:
    """The antipodal pair of primitive forms whose classes realize period s.

    s must be a primitive cyclic word of positive integers; the first form has
    xi_plus equal to the purely periodic value [[s]] > 1.
    """
    s = tuple(s)
    if not s or any((not isinstance(a, int)) or a < 1 for a in s):
        raise ValueError(f"period digits must be positive integers: {s}")
    n = len(s)
    dbl = s + s
    for d in range(1, n):
        if n % d == 0 and dbl[d:d + n] == s:
            raise ValueError(f"period {s} is not primitive (repeats every {d})")
    p, pp, q, qq = 1, 0, 0, 1
    for a in s:
        p, pp, q, qq = a * p + pp, p, a * q + qq, q
    m, nn, k = q, -pp, qq - p
    g = gcd(gcd(abs(m), abs(nn)), abs(k))
    f = Form(m // g, nn // g, k // g)
    return f, antipodal(f)
