"""Cyclic-word analysis: symmetry types, representative counts, class reports.

A class of forms with non-square discriminant is described by the cyclic word
of its continued-fraction period; its symmetry type is determined by which
dihedral symmetries the doubled word (run structure) admits.  Square
discriminants are handled through the finite expansion of k/m.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from collections import deque

from .cf import CFExpansion, cf_parity_variant, cf_rational, cf_surd
from .exact import is_square, isqrt
from .forms import (GENERATORS, Form, InternalError, apply_generator,
                    discriminant, is_primitive)


class SymmetryType(enum.Enum):
    ASYMMETRIC = "asymm"
    K_SYMMETRIC = "k"
    M_PLUS_N_SYMMETRIC = "m+n"
    ANTISYMMETRIC = "anti"
    SUPERSYMMETRIC = "super"

    @property
    def code(self) -> str:
        return self.value

    @classmethod
    def from_code(cls, code: str) -> "SymmetryType":
        for t in cls:
            if t.value == code:
                return t
        raise ValueError(f"unknown symmetry code {code!r}")


class ClassificationError(InternalError):
    """A period matched two supposedly exclusive symmetry patterns."""


def canonical_rotation(s: Tuple[int, ...]) -> Tuple[int, ...]:
    """Lexicographically least rotation of s."""
    s = tuple(s)
    if not s:
        return s
    return min(s[i:] + s[:i] for i in range(len(s)))


def is_primitive_period(s: Tuple[int, ...]) -> bool:
    """True iff s is not a repetition of a shorter word."""
    s = tuple(s)
    n = len(s)
    if n == 0:
        return False
    dbl = s + s
    return not any(n % d == 0 and dbl[d:d + n] == s for d in range(1, n))


def is_palindromic_cyclic(s: Tuple[int, ...]) -> bool:
    """True iff some rotation of s reads the same forwards and backwards."""
    s = tuple(s)
    if not s:
        return False
    dbl = s + s
    n = len(s)
    for i in range(n):
        rot = dbl[i:i + n]
        if rot == rot[::-1]:
            return True
    return False


def is_bipalindromic(s: Tuple[int, ...]) -> bool:
    """True iff some rotation splits into two odd-length plain palindromes."""
    s = tuple(s)
    n = len(s)
    if n == 0 or n % 2 != 0:
        return False
    dbl = s + s
    for i in range(n):
        rot = dbl[i:i + n]
        for cut in range(1, n, 2):  # both pieces must have odd length
            left, right = rot[:cut], rot[cut:]
            if left == left[::-1] and right == right[::-1]:
                return True
    return False


def classify_period(s: Tuple[int, ...]) -> SymmetryType:
    """Symmetry type of a primitive cyclic period word."""
    s = tuple(s)
    if not s or any((not isinstance(a, int)) or a < 1 for a in s):
        raise ValueError(f"period digits must be positive integers: {s}")
    if not is_primitive_period(s):
        raise ValueError(f"period {s} is not primitive")
    pal = is_palindromic_cyclic(s)
    bip = is_bipalindromic(s)
    odd = len(s) % 2 == 1
    if pal and bip:
        # For primitive words the two reflection types exclude each other.
        raise ClassificationError(f"period {s} is both palindromic and bipalindromic")
    if pal:
        return SymmetryType.SUPERSYMMETRIC if odd else SymmetryType.M_PLUS_N_SYMMETRIC
    if bip:
        return SymmetryType.K_SYMMETRIC
    return SymmetryType.ANTISYMMETRIC if odd else SymmetryType.ASYMMETRIC


def counts_nonsquare(gamma: Tuple[int, ...], start_parity: str = "odd") -> Tuple[int, int, int]:
    """(t, t_up, t_down) for a class with period gamma.

    ``start_parity`` is the parity ("odd"/"even") of the absolute digit
    position at which gamma starts inside the full expansion, i.e. the parity
    of the preperiod length when gamma came from cf_surd / period_of_class.
    Odd absolute positions contribute to t_up, even ones to t_down.
    """
    gamma = tuple(gamma)
    if not gamma or any((not isinstance(a, int)) or a < 1 for a in gamma):
        raise ValueError(f"period digits must be positive integers: {gamma}")
    if start_parity not in ("odd", "even"):
        raise ValueError(f"start_parity must be 'odd' or 'even', got {start_parity!r}")
    pi = gamma if len(gamma) % 2 == 0 else gamma + gamma
    offset = 1 if start_parity == "odd" else 0
    t = sum(pi)
    t_up = sum(a for i, a in enumerate(pi) if (i + offset) % 2 == 1)
    return t, t_up, t - t_up


def counts_square(m: int, k: int) -> Tuple[int, int, int]:
    """(t, t_up, t_down) for the square-discriminant class of (m, 0, k)."""
    kk = abs(k)
    if kk == 0:
        raise ValueError("k must be non-zero")
    if not 0 <= m < kk:
        raise ValueError(f"need 0 <= m < |k|, got m={m}, k={k}")
    if m == 0:
        return 0, 0, 0
    even = cf_parity_variant(cf_rational(kk, m), "even").preperiod
    t_up = sum(even[0::2]) - 1
    t_down = sum(even[1::2]) - 1
    return t_up + t_down + 1, t_up, t_down


def classify_square(m: int, k: int) -> SymmetryType:
    """Symmetry type of the square-discriminant class of (m, 0, k)."""
    kk = abs(k)
    if kk == 0:
        raise ValueError("k must be non-zero")
    if not 0 <= m < kk:
        raise ValueError(f"need 0 <= m < |k|, got m={m}, k={k}")
    if m == 0 or 2 * m == kk:
        return SymmetryType.SUPERSYMMETRIC
    cf = cf_rational(kk, m)
    even = cf_parity_variant(cf, "even").preperiod
    if even == even[::-1]:
        return SymmetryType.M_PLUS_N_SYMMETRIC
    odd = cf_parity_variant(cf, "odd").preperiod
    if odd == odd[::-1]:
        return SymmetryType.K_SYMMETRIC
    return SymmetryType.ASYMMETRIC


def square_cf_display(m: int, k: int) -> Tuple[int, ...]:
    """The expansion of k/m used in reports: the palindromic variant if one
    exists, otherwise the canonical (Euclidean) expansion expanded by one digit."""
    kk = abs(k)
    if kk == 0:
        raise ValueError("k must be non-zero")
    if not 0 <= m < kk:
        raise ValueError(f"need 0 <= m < |k|, got m={m}, k={k}")
    if m == 0:
        return ()
    canon = cf_rational(kk, m).preperiod
    if canon == canon[::-1]:
        return canon
    other_parity = "even" if len(canon) % 2 == 1 else "odd"
    return cf_parity_variant(CFExpansion(canon, ()), other_parity).preperiod


@dataclass(frozen=True)
class ClassReport:
    """Everything the reports print about one class."""

    representative: Form
    delta: int
    gamma: Tuple[int, ...]                 # period word; empty for square delta
    cf_of_k_over_m: Optional[Tuple[int, ...]]  # square delta only, else None
    p_or_l: int                            # period length P, or expansion length L
    t: int
    t_up: int
    t_down: int
    symmetry: SymmetryType
    primitive: bool

    @property
    def square(self) -> bool:
        return self.cf_of_k_over_m is not None

    @property
    def star(self) -> bool:
        return not self.primitive


def normalize_square_form(f: Form, coeff_bound: int = 0) -> Form:
    """The (m, 0, k) representative, 0 <= m < k, of a square-delta class.

    Breadth-first walk over the generator graph, capped by a coefficient
    bound that doubles (three times at most) if no normal form is found.
    """
    d = discriminant(f)
    if d <= 0 or not is_square(d):
        raise ValueError(f"form {f} does not have a positive square discriminant")
    bound = coeff_bound or max(4 * d, 2 * f.max_abs(), 16)
    for _ in range(4):
        seen = {f}
        queue = deque((f,))
        while queue:
            g = queue.popleft()
            if g.n == 0 and g.k > 0:
                return Form(g.m % g.k, 0, g.k)
            for gen in GENERATORS:
                h = apply_generator(g, gen)
                if h not in seen and h.max_abs() <= bound:
                    seen.add(h)
                    queue.append(h)
        bound *= 2
    raise InternalError(f"no (m,0,k) representative for {f} within bound {bound // 2}")


def classify_class(f: Form) -> ClassReport:
    """Full report for the class of f.  Non-square delta requires no search;
    square delta is first normalized to its (m, 0, k) representative."""
    d = discriminant(f)
    if d <= 0:
        raise ValueError(f"form {f} is not indefinite (delta={d})")
    prim = is_primitive(f)
    if is_square(d):
        rep = normalize_square_form(f)
        kk = rep.k
        t, t_up, t_down = counts_square(rep.m, kk)
        disp = square_cf_display(rep.m, kk)
        return ClassReport(rep, d, (), disp, len(disp), t, t_up, t_down,
                           classify_square(rep.m, kk), prim)
    exp = cf_surd(f)
    gamma = exp.period
    n_pre = len(exp.preperiod)
    t, t_up, t_down = counts_nonsquare(gamma, "odd" if n_pre % 2 == 1 else "even")
    return ClassReport(f, d, gamma, None, len(gamma), t, t_up, t_down,
                       classify_period(gamma), prim)
