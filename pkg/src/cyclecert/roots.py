"""Exact real-root counting, isolation, and one-variable sign certificates.

Everything here is rigorous: root counts come from Sturm chains evaluated
with integer arithmetic, intervals carry exact rational endpoints, and sign
verdicts are only issued when backed by a zero root count (strict) or by an
odd-multiplicity root count of zero (one-signed off a finite set of points).
Floats never enter any decision.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Union

from .algebra import Polynomial, RationalFunction, exact_div, poly_gcd
from .errors import UnboundParameter, WrongDegree, ZeroPolynomial

__all__ = [
    "IntervalQ",
    "Verdict",
    "RootRecord",
    "RootReport",
    "SignCertificate",
    "sturm_count",
    "isolate_roots",
    "yun_squarefree",
    "squarefree_part",
    "sign_at",
    "certify_sign",
    "discriminant_y",
    "refine_root_interval",
    "refine_to_width",
    "sharpen_rational_roots",
]


# ------------------------------------------------------------------ intervals


@dataclass(frozen=True)
class IntervalQ:
    """Interval with exact rational endpoints; None means the endpoint is
    at (the corresponding) infinity, in which case that side is open."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self):
        if self.lo is None and not self.lo_open:
            object.__setattr__(self, "lo_open", True)
        if self.hi is None and not self.hi_open:
            object.__setattr__(self, "hi_open", True)

    # constructors ----------------------------------------------------------

    @staticmethod
    def closed(a, b) -> "IntervalQ":
        return IntervalQ(Fraction(a), Fraction(b), False, False)

    @staticmethod
    def open(a, b) -> "IntervalQ":
        return IntervalQ(Fraction(a), Fraction(b), True, True)

    @staticmethod
    def point(a) -> "IntervalQ":
        a = Fraction(a)
        return IntervalQ(a, a, False, False)

    @staticmethod
    def ray_above(a, open_end: bool = True) -> "IntervalQ":
        return IntervalQ(Fraction(a), None, open_end, True)

    @staticmethod
    def ray_below(a, open_end: bool = True) -> "IntervalQ":
        return IntervalQ(None, Fraction(a), True, open_end)

    @staticmethod
    def whole_line() -> "IntervalQ":
        return IntervalQ(None, None, True, True)

    # predicates ------------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and (self.lo_open or self.hi_open)

    @property
    def is_point(self) -> bool:
        return (self.lo is not None and self.lo == self.hi
                and not self.lo_open and not self.hi_open)

    @property
    def is_bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def interior(self) -> "IntervalQ":
        return IntervalQ(self.lo, self.hi, True, True)

    def closure(self) -> "IntervalQ":
        return IntervalQ(self.lo, self.hi,
                         self.lo is None, self.hi is None)

    def contains(self, x: Union[int, Fraction]) -> bool:
        x = Fraction(x)
        if self.lo is not None and (x < self.lo or (x == self.lo and self.lo_open)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and self.hi_open)):
            return False
        return True

    def overlaps_closure(self, other: "IntervalQ") -> bool:
        """Do the closures of the two intervals intersect?"""
        a = self.closure()
        b = other.closure()
        lo_ok = a.lo is None or b.hi is None or a.lo <= b.hi
        hi_ok = a.hi is None or b.lo is None or b.lo <= a.hi
        return lo_ok and hi_ok

    def render(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return (("(" if self.lo_open else "[") + f"{lo}, {hi}"
                + (")" if self.hi_open else "]"))

    def __repr__(self) -> str:
        return f"IntervalQ{self.render()}"


# ------------------------------------------------------------------- verdicts


class Verdict(str, Enum):
    """Outcome of a sign certificate over an interval."""

    STRICTLY_NEGATIVE = "strictly_negative"
    STRICTLY_POSITIVE = "strictly_positive"
    NONPOSITIVE_ZERO_MEASURE = "nonpositive_zero_measure"
    NONNEGATIVE_ZERO_MEASURE = "nonnegative_zero_measure"
    INDETERMINATE = "indeterminate"

    @property
    def is_strict(self) -> bool:
        return self in (Verdict.STRICTLY_NEGATIVE, Verdict.STRICTLY_POSITIVE)

    @property
    def is_conclusive(self) -> bool:
        return self is not Verdict.INDETERMINATE

    @property
    def sign(self) -> int:
        if self in (Verdict.STRICTLY_NEGATIVE,
                    Verdict.NONPOSITIVE_ZERO_MEASURE):
            return -1
        if self in (Verdict.STRICTLY_POSITIVE,
                    Verdict.NONNEGATIVE_ZERO_MEASURE):
            return 1
        return 0


@dataclass
class SignCertificate:
    subject: str
    variable: Optional[str]
    interval: IntervalQ
    verdict: Verdict
    evidence: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "variable": self.variable,
            "interval": self.interval.render(),
            "verdict": self.verdict.value,
            "evidence": dict(self.evidence),
        }


@dataclass
class RootRecord:
    """One distinct real root, isolated in a closure-disjoint interval."""

    interval: IntervalQ
    multiplicity: int
    exact_value: Optional[Fraction] = None

    def approximate(self) -> float:
        if self.exact_value is not None:
            return float(self.exact_value)
        return float((self.interval.lo + self.interval.hi) / 2)


@dataclass
class RootReport:
    """All distinct real roots in the queried interval, left to right.

    Behaves like the list of its RootRecords, so iteration, indexing, and
    truth-testing work directly on the report.
    """

    roots: list
    total_distinct: int

    def __iter__(self) -> Iterator[RootRecord]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __getitem__(self, i):
        return self.roots[i]


# ------------------------------------------------------- coefficient plumbing


def _coeff_list(p: Polynomial) -> tuple:
    """(variable name or None, dense Fraction coefficients, low to high)."""
    if len(p.vars) > 1:
        raise UnboundParameter(
            f"expected a one-variable polynomial, got variables {p.vars}")
    return p.univariate()


def _prim_ints(coeffs) -> list:
    """Scale a Fraction list to a primitive integer list (sign preserved)."""
    den = 1
    for c in coeffs:
        c = Fraction(c)
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    while ints and ints[-1] == 0:
        ints.pop()
    return ints


def _derivative(coeffs: list) -> list:
    return [i * c for i, c in enumerate(coeffs)][1:]


def _eval_fraction(coeffs, x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * x + c
    return v


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _sign_at(ints: list, x: Fraction) -> int:
    """Exact sign of an integer-coefficient polynomial at a rational point,
    via the homogenized Horner scheme (integer arithmetic only)."""
    if not ints:
        return 0
    n, d = x.numerator, x.denominator
    deg = len(ints) - 1
    dpow = [1] * (deg + 1)
    for i in range(1, deg + 1):
        dpow[i] = dpow[i - 1] * d
    v = ints[-1]
    for i in range(deg - 1, -1, -1):
        v = v * n + ints[i] * dpow[deg - i]
    return _sign(v)


def _sign_at_inf(ints: list, positive: bool) -> int:
    if not ints:
        return 0
    s = _sign(ints[-1])
    if not positive and (len(ints) - 1) % 2 == 1:
        s = -s
    return s


def _deflate(coeffs: list, r: Fraction) -> list:
    """Synthetic division by (x - r); the root must be exact."""
    out = []
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * r + c
        out.append(acc)
    assert out[-1] == 0, "deflation point is not a root"
    out.pop()
    return list(reversed([Fraction(c) for c in out]))


def _sturm_chain(coeffs: list) -> list:
    """Sturm chain as primitive integer lists (positive rescaling only)."""
    p0 = _prim_ints(coeffs)
    p1 = _prim_ints(_derivative(p0))
    chain = [p0]
    if p1:
        chain.append(p1)
    while len(chain) >= 2 and len(chain[-1]) > 1:
        f, g = chain[-2], chain[-1]
        lg = g[-1]
        dg = len(g) - 1
        r = f[:]
        scale_applications = 0
        while r and len(r) - 1 >= dg:
            top = r[-1]
            shift = len(r) - 1 - dg
            r = [lg * c for c in r[:-1]]
            scale_applications += 1
            for i in range(dg):
                r[shift + i] -= top * g[i]
            while r and r[-1] == 0:
                r.pop()
        if lg < 0 and scale_applications % 2 == 1:
            r = [-c for c in r]
        if not r:
            break
        nxt = _prim_ints([Fraction(-c) for c in r])
        chain.append(nxt)
    return chain


_NEG_INF = object()
_POS_INF = object()


def _variations(chain: list, where) -> int:
    signs = []
    for ints in chain:
        if where is _NEG_INF:
            s = _sign_at_inf(ints, positive=False)
        elif where is _POS_INF:
            s = _sign_at_inf(ints, positive=True)
        else:
            s = _sign_at(ints, where)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_open(coeffs: list, lo, hi) -> int:
    """Distinct roots in the open interval; the polynomial must be nonzero
    at finite endpoints.  lo/hi may be the infinity sentinels."""
    chain = _sturm_chain(coeffs)
    a = _NEG_INF if lo is None else lo
    b = _POS_INF if hi is None else hi
    return _variations(chain, a) - _variations(chain, b)


# ------------------------------------------------------------- factorization


def yun_squarefree(p: Polynomial) -> list:
    """Squarefree decomposition [(factor, multiplicity), ...] with monic
    factors; the product of factor^multiplicity recovers p up to a constant."""
    var, coeffs = _coeff_list(p)
    if var is None:
        if p.is_zero:
            raise ZeroPolynomial("cannot decompose the zero polynomial")
        return []
    d = p.differentiate(var)
    g = poly_gcd(p, d)
    out = []
    if g.is_constant:
        return [(_monic_poly(p), 1)]
    c = exact_div(p, g)
    w = exact_div(d, g) - c.differentiate(var)
    i = 1
    while not c.is_constant:
        a = poly_gcd(c, w)
        if not a.is_constant:
            out.append((_monic_poly(a), i))
        c = exact_div(c, a)
        w = exact_div(w, a) - c.differentiate(var)
        i += 1
    return out


def _monic_poly(p: Polynomial) -> Polynomial:
    lc = p.leading_coefficient()
    return p if lc == 1 else p * (Fraction(1) / lc)


def squarefree_part(p: Polynomial) -> Polynomial:
    var, _ = _coeff_list(p)
    if var is None:
        return p
    g = poly_gcd(p, p.differentiate(var))
    return _monic_poly(exact_div(p, g)) if not g.is_constant else _monic_poly(p)


# ------------------------------------------------------------------- counting


def sign_at(p: Polynomial, x) -> int:
    """Exact sign of a one-variable polynomial at a rational point."""
    _, coeffs = _coeff_list(p)
    return _sign_at(_prim_ints(coeffs), Fraction(x))


def sturm_count(p: Polynomial, interval: IntervalQ) -> int:
    """Number of DISTINCT real roots of p in the interval (exact)."""
    var, coeffs = _coeff_list(p)
    if var is None:
        if p.is_zero:
            raise ZeroPolynomial("root counting needs a nonzero polynomial")
        return 0
    if interval.is_empty:
        return 0
    if interval.lo is not None and interval.lo == interval.hi:
        if interval.lo_open or interval.hi_open:
            return 0
        return int(_eval_fraction(coeffs, interval.lo) == 0)

    q = squarefree_part(p)
    _, qc = q.univariate()

    root_at_lo = False
    if interval.lo is not None and _eval_fraction(qc, interval.lo) == 0:
        root_at_lo = True
        qc = _deflate(qc, interval.lo)
    root_at_hi = False
    if interval.hi is not None and len(qc) > 1 \
            and _eval_fraction(qc, interval.hi) == 0:
        root_at_hi = True
        qc = _deflate(qc, interval.hi)

    inner = 0
    if len(qc) > 1:
        inner = _count_open(qc, interval.lo, interval.hi)
    total = inner
    if root_at_lo and not interval.lo_open:
        total += 1
    if root_at_hi and not interval.hi_open:
        total += 1
    return total


def _cauchy_bound(coeffs: list) -> Fraction:
    """Strict bound: every real root r satisfies |r| < bound."""
    lead = abs(Fraction(coeffs[-1]))
    m = max((abs(Fraction(c)) for c in coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


def _sample_points(interval: IntervalQ) -> Iterator[Fraction]:
    """Infinitely many rational points strictly inside a nonempty,
    nondegenerate interval."""
    lo, hi = interval.lo, interval.hi
    if lo is not None and hi is not None:
        span = hi - lo
        for j in itertools.count(1):
            for k in range(1, 2 ** j, 2):
                yield lo + span * Fraction(k, 2 ** j)
    elif lo is not None:
        for n in itertools.count(0):
            yield lo + Fraction(2 * n + 1, 2)
    elif hi is not None:
        for n in itertools.count(0):
            yield hi - Fraction(2 * n + 1, 2)
    else:
        yield Fraction(0)
        for n in itertools.count(1):
            yield Fraction(n)
            yield Fraction(-n)


def isolate_roots(p: Polynomial,
                  interval: Optional[IntervalQ] = None) -> RootReport:
    """Isolate the distinct real roots of p lying in the interval
    (the whole line when no interval is given).

    The report's RootRecords carry pairwise closure-disjoint intervals, each
    containing exactly one distinct root; rational roots discovered during
    bisection come back as degenerate [r, r] intervals with exact_value set.
    Multiplicities are read off the squarefree decomposition.
    """
    if interval is None:
        interval = IntervalQ.whole_line()
    var, coeffs = _coeff_list(p)
    if var is None:
        if p.is_zero:
            raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
        return RootReport([], 0)
    if interval.is_empty:
        return RootReport([], 0)
    if interval.is_point:
        if _eval_fraction(coeffs, interval.lo) == 0:
            rec = RootRecord(IntervalQ.point(interval.lo), 1, interval.lo)
            return RootReport(_attach_multiplicities(p, [rec]), 1)
        return RootReport([], 0)

    q = squarefree_part(p)
    _, qc = q.univariate()
    if len(qc) <= 1:
        return RootReport([], 0)

    bound = _cauchy_bound(qc)
    lo = interval.lo if interval.lo is not None else -bound
    hi = interval.hi if interval.hi is not None else bound
    if lo >= hi:
        # every root satisfies |r| < bound, so the interval holds none
        return RootReport([], 0)

    records = []

    # endpoint roots (only when the endpoint is included)
    work = qc
    if _eval_fraction(work, lo) == 0:
        if interval.contains(lo):
            records.append(RootRecord(IntervalQ.point(lo), 1, lo))
        work = _deflate(work, lo)
    if len(work) > 1 and _eval_fraction(work, hi) == 0:
        if interval.contains(hi):
            records.append(RootRecord(IntervalQ.point(hi), 1, hi))
        work = _deflate(work, hi)

    def recurse(cs: list, u: Fraction, v: Fraction):
        if len(cs) <= 1:
            return
        n = _count_open(cs, u, v)
        if n == 0:
            return
        if n == 1:
            records.append(RootRecord(IntervalQ.open(u, v), 1))
            return
        m = (u + v) / 2
        if _eval_fraction(cs, m) == 0:
            records.append(RootRecord(IntervalQ.point(m), 1, m))
            cs = _deflate(cs, m)
        recurse(cs, u, m)
        recurse(cs, m, v)

    recurse(work, lo, hi)

    _refine_to_disjoint(q, records)
    records.sort(key=lambda r: (r.interval.lo, r.interval.hi))
    _attach_multiplicities(p, records)
    return RootReport(records, len(records))


def _shrink(q: Polynomial, rec: RootRecord) -> None:
    """Halve an open isolating interval, keeping its single root."""
    if rec.exact_value is not None:
        return
    _, qc = q.univariate()
    u, v = rec.interval.lo, rec.interval.hi
    m = (u + v) / 2
    if _eval_fraction(qc, m) == 0:
        rec.interval = IntervalQ.point(m)
        rec.exact_value = m
        return
    if _count_open(qc, u, m) == 1:
        rec.interval = IntervalQ.open(u, m)
    else:
        rec.interval = IntervalQ.open(m, v)


def refine_root_interval(squarefree: Polynomial, rec: RootRecord) -> None:
    """Public handle for narrowing an isolating interval by one step."""
    _shrink(squarefree, rec)


def refine_to_width(squarefree: Polynomial, rec: RootRecord, width) -> None:
    """Narrow an isolating interval until it is at most `width` wide."""
    width = Fraction(width)
    while rec.exact_value is None \
            and rec.interval.hi - rec.interval.lo > width:
        _shrink(squarefree, rec)


def _divisors(n: int, cap: int):
    if n == 0 or n > 10**12:
        return None
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
            if len(out) > cap:
                return None
        i += 1
    return out


def sharpen_rational_roots(p: Polynomial, records: list,
                           cap: int = 2000) -> None:
    """Upgrade open isolating intervals to exact points whenever the root
    they isolate is rational (rational-root theorem candidates, exact
    verification).  Quietly does nothing when the candidate set is huge."""
    if not any(r.exact_value is None for r in records):
        return
    q = squarefree_part(p)
    _, qc = q.univariate()
    ints = _prim_ints(qc)
    for rec in records:
        if rec.exact_value is None and rec.interval.contains(0) \
                and _sign_at(ints, Fraction(0)) == 0:
            rec.exact_value = Fraction(0)
            rec.interval = IntervalQ.point(0)
    while ints and ints[0] == 0:
        ints = ints[1:]
    if len(ints) < 2:
        return
    nums = _divisors(abs(ints[0]), cap)
    dens = _divisors(abs(ints[-1]), cap)
    if nums is None or dens is None or len(nums) * len(dens) > cap:
        return
    candidates = sorted({Fraction(s * a, b)
                         for a in nums for b in dens for s in (1, -1)})
    full = _prim_ints(qc)
    for rec in records:
        if rec.exact_value is not None:
            continue
        for c in candidates:
            if rec.interval.contains(c) and _sign_at(full, c) == 0:
                rec.exact_value = c
                rec.interval = IntervalQ.point(c)
                break


def _refine_to_disjoint(q: Polynomial, records: list) -> None:
    while True:
        records.sort(key=lambda r: (r.interval.lo, r.interval.hi))
        clash = None
        for a, b in zip(records, records[1:]):
            if a.interval.overlaps_closure(b.interval):
                clash = (a, b)
                break
        if clash is None:
            return
        a, b = clash
        _shrink(q, a)
        _shrink(q, b)


def _attach_multiplicities(p: Polynomial, records: list) -> list:
    factors = yun_squarefree(p)
    if len(factors) == 1:
        for r in records:
            r.multiplicity = factors[0][1]
        return records
    for r in records:
        for fac, mult in factors:
            if r.exact_value is not None:
                _, fc = fac.univariate()
                hit = len(fc) > 1 and _eval_fraction(fc, r.exact_value) == 0
            else:
                hit = (not fac.is_constant
                       and sturm_count(fac, r.interval) == 1)
            if hit:
                r.multiplicity = mult
                break
        else:
            raise AssertionError("isolated root not matched to a factor")
    return records


# ------------------------------------------------------------ sign certificates


def _certify_polynomial(p: Polynomial, interval: IntervalQ) -> SignCertificate:
    var, coeffs = _coeff_list(p)
    subject = p.render()
    if interval.is_empty:
        raise ValueError("cannot certify a sign over an empty interval")

    if var is None:
        c = p.terms.get((), Fraction(0))
        if c == 0:
            return SignCertificate(subject, None, interval,
                                   Verdict.INDETERMINATE,
                                   {"note": "identically zero"})
        verdict = (Verdict.STRICTLY_POSITIVE if c > 0
                   else Verdict.STRICTLY_NEGATIVE)
        return SignCertificate(subject, None, interval, verdict,
                               {"constant_value": str(c)})

    if interval.is_point:
        s = _sign(_eval_fraction(coeffs, interval.lo))
        if s == 0:
            return SignCertificate(subject, var, interval,
                                   Verdict.INDETERMINATE,
                                   {"note": "zero at the sample point"})
        verdict = (Verdict.STRICTLY_POSITIVE if s > 0
                   else Verdict.STRICTLY_NEGATIVE)
        return SignCertificate(subject, var, interval, verdict,
                               {"sample_point": str(interval.lo),
                                "sample_sign": s})

    ints = _prim_ints(coeffs)
    sample = None
    sample_sign = 0
    for cand in _sample_points(interval):
        s = _sign_at(ints, cand)
        if s:
            sample, sample_sign = cand, s
            break

    count = sturm_count(p, interval)
    chain = _sturm_chain(coeffs)
    var_lo = _variations(chain, _NEG_INF if interval.lo is None
                         else interval.lo)
    var_hi = _variations(chain, _POS_INF if interval.hi is None
                         else interval.hi)
    evidence = {
        "distinct_roots_in_interval": count,
        "sturm_chain_length": len(chain),
        "sign_variations": [var_lo, var_hi],
        "sample_point": str(sample),
        "sample_value": str(_eval_fraction(coeffs, sample)),
        "sample_sign": sample_sign,
    }
    if count == 0:
        verdict = (Verdict.STRICTLY_POSITIVE if sample_sign > 0
                   else Verdict.STRICTLY_NEGATIVE)
        return SignCertificate(subject, var, interval, verdict, evidence)

    odd_part = Polynomial.constant(1)
    for fac, mult in yun_squarefree(p):
        if mult % 2 == 1:
            odd_part = odd_part * fac
    if odd_part.is_constant:
        odd_count = 0
    else:
        odd_count = sturm_count(odd_part, interval.interior())
    evidence["odd_multiplicity_roots_in_interior"] = odd_count
    if odd_count == 0:
        verdict = (Verdict.NONNEGATIVE_ZERO_MEASURE if sample_sign > 0
                   else Verdict.NONPOSITIVE_ZERO_MEASURE)
        return SignCertificate(subject, var, interval, verdict, evidence)

    evidence["note"] = "sign changes inside the interval"
    return SignCertificate(subject, var, interval,
                           Verdict.INDETERMINATE, evidence)


def certify_sign(f, interval: IntervalQ,
                 mode: str = "zero-measure") -> SignCertificate:
    """Certify the sign of a one-variable polynomial or rational function
    over an interval.

    mode="zero-measure" (the default) allows one-signed verdicts whose zero
    set is a finite set of points; mode="strict" accepts only verdicts with
    no zero at all, downgrading anything weaker to indeterminate.

    Rational functions are only certified when the denominator provably has
    no zero in the interval; the verdict is then read off numerator times
    denominator, which has the same sign as the quotient at every point of
    the interval.
    """
    if mode not in ("strict", "zero-measure"):
        raise ValueError(f"unknown certification mode {mode!r}")
    if isinstance(f, RationalFunction):
        if f.is_polynomial:
            cert = _certify_polynomial(f.num, interval)
        else:
            free = f.free_variables
            if len(free) > 1:
                raise UnboundParameter(
                    f"expected one free variable, got {free}")
            den_roots = sturm_count(f.den, interval)
            if den_roots:
                return SignCertificate(
                    f.render(), free[0] if free else None, interval,
                    Verdict.INDETERMINATE,
                    {"denominator_roots_in_interval": den_roots,
                     "note": "denominator vanishes inside the interval"})
            cert = _certify_polynomial(f.num * f.den, interval)
            cert.subject = f.render()
            cert.evidence["denominator_roots_in_interval"] = 0
    elif isinstance(f, Polynomial):
        cert = _certify_polynomial(f, interval)
    else:
        raise TypeError(f"cannot certify sign of {type(f).__name__}")
    if mode == "strict" and cert.verdict.is_conclusive \
            and not cert.verdict.is_strict:
        cert.evidence["declined_verdict"] = cert.verdict.value
        cert.evidence["note"] = "strict mode rejects verdicts with zeros"
        cert.verdict = Verdict.INDETERMINATE
    return cert


# --------------------------------------------------- quadratic discriminants


def discriminant_y(V):
    """Discriminant in y of a curve quadratic in y.

    For V = a(x) y^2 + b(x) y + c(x) this is b^2 - 4ac, whose sign along a
    vertical line tells how many points of {V = 0} that line meets.  Accepts
    a Polynomial or a RationalFunction whose denominator is free of y, and
    returns the same kind.  Raises WrongDegree when V is not quadratic in y.
    """
    if isinstance(V, RationalFunction):
        if "y" in V.den.vars:
            raise WrongDegree(
                "denominator must not involve y: " + V.den.render())
        disc = discriminant_y(V.num)
        return RationalFunction(disc, V.den * V.den)
    if not isinstance(V, Polynomial):
        raise TypeError(f"cannot take a discriminant of {type(V).__name__}")
    if V.degree_in("y") != 2:
        raise WrongDegree(
            f"need degree 2 in y, got {V.degree_in('y')}: {V.render()}")
    c, b, a = V.coefficients_in("y")
    return b * b - 4 * a * c
