"""Class census per discriminant: enumerate, walk, classify, and aggregate.

The non-square engine enumerates every primitive H0 form of a discriminant
(m > 0 > n, k**2 - 4mn = delta), partitions them into successor cycles
(A when m+n+k < 0, else B, both staying inside H0), and reads t, t_up,
t_down and the period word straight off each cycle.  Imprimitive classes are
scaled copies of primitive ones from delta / s**2.  Square discriminants are
k straight rows (m, 0, k).  Every class report is cross-checked against the
independent continued-fraction path before it is emitted.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from .cf import cf_surd, modular_cf_surd
from .exact import is_square
from .forms import Form, InternalError, scale
from .periods import (ClassReport, SymmetryType, canonical_rotation,
                      classify_period, classify_square, counts_nonsquare,
                      counts_square, square_cf_display)
from .reduction import reduced_representative


def valid_deltas(delta_max: int, include_square: bool = True,
                 include_nonsquare: bool = True) -> List[int]:
    """Discriminants 1 <= delta <= delta_max with delta = 0 or 1 mod 4."""
    out = []
    for d in range(1, delta_max + 1):
        if d % 4 not in (0, 1):
            continue
        sq = is_square(d)
        if (sq and include_square) or (not sq and include_nonsquare):
            out.append(d)
    return out


def _h0_primitive_triples(delta: int) -> List[Tuple[int, int, int]]:
    """All primitive (m, n, k) with m > 0 > n and k**2 - 4mn = delta, sorted."""
    out = []
    kmax = isqrt(delta - 1)  # need k*k < delta so that mn < 0
    for ak in range(delta % 2, kmax + 1, 2):
        v = (delta - ak * ak) // 4  # = m * (-n) > 0
        for m in range(1, isqrt(v) + 1):
            if v % m:
                continue
            for a, b in ((m, v // m), (v // m, m)) if m * m != v else ((m, m),):
                for k in ((ak, -ak) if ak else (0,)):
                    if gcd(gcd(a, b), abs(k)) == 1:
                        out.append((a, -b, k))
    out.sort()
    return out


def _cycle_of(start: Tuple[int, int, int]):
    """Successor cycle through an H0 triple: (members in order, step letters)."""
    members = [start]
    steps = []
    m, n, k = start
    while True:
        s = m + n + k
        if s < 0:
            steps.append("A")
            m, n, k = m, s, 2 * m + k
        else:
            steps.append("B")
            m, n, k = s, n, 2 * n + k
        if (m, n, k) == start:
            return members, steps
        members.append((m, n, k))


def _aligned_pi(steps: Sequence[str]) -> Tuple[int, ...]:
    """Run lengths of the cyclic step word, rotated to start an A-run.

    Odd (1-indexed) positions of the result are A-exponents, even positions
    B-exponents; this is the alignment cf_period_to_modular_period expects.
    """
    t = len(steps)
    anchor = next(i for i in range(t) if steps[i] == "A" and steps[i - 1] == "B")
    rotated = steps[anchor:] + steps[:anchor]
    runs = []
    for letter in rotated:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    if len(runs) % 2 or any(r[0] != "AB"[i % 2] for i, r in enumerate(runs)):
        raise InternalError(f"step word did not alternate cleanly: {runs}")
    return tuple(r[1] for r in runs)


def _primitive_root(word: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(word)
    dbl = word + word
    for p in range(1, n + 1):
        if n % p == 0 and dbl[p:p + n] == word:
            return word[:p]
    raise InternalError(f"no cyclic root found for {word}")


def census_nonsquare_primitive(delta: int) -> Tuple[ClassReport, ...]:
    """Reports for all primitive classes of a non-square discriminant,
    ordered by their lexicographically least H0 representative."""
    if delta <= 0 or delta % 4 not in (0, 1) or is_square(delta):
        raise ValueError(f"{delta} is not a valid non-square discriminant")
    reports = []
    visited = set()
    for triple in _h0_primitive_triples(delta):
        if triple in visited:
            continue
        members, steps = _cycle_of(triple)
        visited.update(members)
        t = len(steps)
        t_up = steps.count("B")
        pi = _aligned_pi(steps)
        gamma_struct = _primitive_root(pi)
        rep = Form(*triple)
        exp = cf_surd(rep)
        gamma = exp.period
        if canonical_rotation(gamma) != canonical_rotation(gamma_struct):
            raise InternalError(
                f"walk period {gamma_struct} vs CF period {gamma} for {rep}")
        parity = "odd" if len(exp.preperiod) % 2 == 1 else "even"
        if counts_nonsquare(gamma, parity) != (t, t_up, t - t_up):
            raise InternalError(
                f"walk counts ({t},{t_up},{t - t_up}) disagree with CF counts "
                f"{counts_nonsquare(gamma, parity)} for {rep}")
        reports.append(ClassReport(rep, delta, gamma, None, len(gamma),
                                   t, t_up, t - t_up,
                                   classify_period(gamma_struct), True))
    return tuple(reports)


def h0_class_key(f: Form) -> Form:
    """The lexicographically least H0 member of f's class — the census's
    choice of representative — for any H0 form of non-square discriminant."""
    if not (f.m > 0 and f.n < 0):
        raise ValueError(f"form {f} is not in H0")
    if is_square(f.k * f.k - 4 * f.m * f.n):
        raise ValueError(f"form {f} has square discriminant")
    members, _ = _cycle_of(f.coeffs())
    return Form(*min(members))


def census_square(delta: int) -> Tuple[ClassReport, ...]:
    """Reports for the k classes (m, 0, k), 0 <= m < k, of delta = k**2."""
    if delta <= 0 or not is_square(delta):
        raise ValueError(f"{delta} is not a positive square")
    k = isqrt(delta)
    reports = []
    for m in range(k):
        t, t_up, t_down = counts_square(m, k)
        disp = square_cf_display(m, k)
        prim = gcd(m, k) == 1
        reports.append(ClassReport(Form(m, 0, k), delta, (), disp, len(disp),
                                   t, t_up, t_down, classify_square(m, k), prim))
    return tuple(reports)


def _scaled_rows(delta: int,
                 primitive: Dict[int, Tuple[ClassReport, ...]]) -> List[ClassReport]:
    rows = []
    s = 2
    while s * s <= delta:
        if delta % (s * s) == 0:
            d0 = delta // (s * s)
            if d0 % 4 in (0, 1):
                for r in primitive[d0]:
                    rows.append(ClassReport(scale(r.representative, s), delta,
                                            r.gamma, None, r.p_or_l, r.t,
                                            r.t_up, r.t_down, r.symmetry, False))
        s += 1
    return rows


def census_for_delta(delta: int,
                     primitive: Dict[int, Tuple[ClassReport, ...]]) -> Tuple[ClassReport, ...]:
    """All classes (primitive and scaled) of one non-square discriminant."""
    rows = list(primitive[delta]) + _scaled_rows(delta, primitive)
    rows.sort(key=lambda r: r.representative)
    return tuple(rows)


def full_census(delta_max: int, jobs: int = 1,
                include_square: bool = True) -> Dict[int, Tuple[ClassReport, ...]]:
    """Census of every valid discriminant up to delta_max, keyed by delta."""
    if delta_max < 1:
        raise ValueError("delta_max must be >= 1")
    nonsq = valid_deltas(delta_max, include_square=False)
    if jobs > 1 and len(nonsq) > 8:
        with Pool(jobs) as pool:
            prim_rows = pool.map(census_nonsquare_primitive, nonsq,
                                 chunksize=max(1, len(nonsq) // (8 * jobs)))
    else:
        prim_rows = [census_nonsquare_primitive(d) for d in nonsq]
    primitive = dict(zip(nonsq, prim_rows))
    out: Dict[int, Tuple[ClassReport, ...]] = {}
    for d in valid_deltas(delta_max, include_square=include_square):
        out[d] = census_square(d) if is_square(d) else census_for_delta(d, primitive)
    return out


SYMMETRY_ORDER = (SymmetryType.SUPERSYMMETRIC, SymmetryType.K_SYMMETRIC,
                  SymmetryType.M_PLUS_N_SYMMETRIC, SymmetryType.ANTISYMMETRIC,
                  SymmetryType.ASYMMETRIC)


@dataclass(frozen=True)
class StatRow:
    """Per-discriminant symmetry-type tallies with exact fractions."""

    delta: int
    square: bool
    total: int
    counts: Tuple[int, ...]       # aligned with SYMMETRY_ORDER
    fractions: Tuple[Fraction, ...]

    def count_of(self, sym: SymmetryType) -> int:
        return self.counts[SYMMETRY_ORDER.index(sym)]


def stats_rows(delta_max: int, jobs: int = 1) -> List[StatRow]:
    census = full_census(delta_max, jobs=jobs)
    rows = []
    for d in sorted(census):
        reports = census[d]
        total = len(reports)
        counts = tuple(sum(1 for r in reports if r.symmetry == s)
                       for s in SYMMETRY_ORDER)
        fractions = tuple(Fraction(c, total) for c in counts)
        rows.append(StatRow(d, is_square(d), total, counts, fractions))
    return rows


def first_occurrence(rows: Sequence[StatRow], sym: SymmetryType,
                     include_square: bool = False) -> Optional[int]:
    """Smallest delta whose row shows at least one class of the given type."""
    for row in rows:
        if row.square and not include_square:
            continue
        if row.count_of(sym) > 0:
            return row.delta
    return None


@dataclass(frozen=True)
class SumRuleFinding:
    delta: int
    representative: Form
    symmetry: SymmetryType
    modular_period: Tuple[int, ...]

    @property
    def holds(self) -> bool:
        return sum(self.modular_period) == 3 * len(self.modular_period)


def _sum_rule_for_delta(args) -> Tuple[int, List[SumRuleFinding]]:
    delta, rep_triples_syms = args
    checked = 0
    failures = []
    for (m, n, k), code in rep_triples_syms:
        rep = Form(m, n, k)
        sym = SymmetryType.from_code(code)
        h = reduced_representative(rep)
        mcf = modular_cf_surd(h)
        if mcf.preperiod:
            raise InternalError(f"reduced form {h} gave mixed minus CF")
        finding = SumRuleFinding(delta, rep, sym, mcf.period)
        checked += 1
        if not finding.holds:
            failures.append(finding)
    return checked, failures


_SYMMETRIC_THREE = frozenset((SymmetryType.SUPERSYMMETRIC,
                              SymmetryType.ANTISYMMETRIC,
                              SymmetryType.M_PLUS_N_SYMMETRIC))


def sum_rule_sweep(delta_max: int, jobs: int = 1) -> Tuple[int, List[SumRuleFinding]]:
    """Check sum(c_i) == 3 * len(c) over every Super/Anti/MPlusN class of
    non-square delta <= delta_max.  Returns (checked, failures)."""
    census = full_census(delta_max, jobs=jobs, include_square=False)
    tasks = []
    for d in sorted(census):
        picked = [(r.representative.coeffs(), r.symmetry.code)
                  for r in census[d] if r.symmetry in _SYMMETRIC_THREE]
        if picked:
            tasks.append((d, picked))
    if jobs > 1 and len(tasks) > 8:
        with Pool(jobs) as pool:
            results = pool.map(_sum_rule_for_delta, tasks,
                               chunksize=max(1, len(tasks) // (8 * jobs)))
    else:
        results = [_sum_rule_for_delta(t) for t in tasks]
    checked = sum(c for c, _ in results)
    failures = [f for _, fs in results for f in fs]
    return checked, failures
