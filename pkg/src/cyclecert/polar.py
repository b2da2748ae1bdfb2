"""Polar form of a planar field and the radial-averaging cycle bound.

A polynomial field vanishing at the origin becomes, in polar coordinates,
r' = R(r, t) and t' = Theta(r, t), where R and Theta are polynomials in r
whose coefficients are finite trigonometric polynomials in the angle t.
Averaging R over the angle and dividing by r gives a one-variable
polynomial p(u) with u = r^2; the even profile w(r) = r^2 p'(r^2) acts as a
radial certificate candidate.  Its companion function

    M = R w'(r) + s (dR/dr + dTheta/dt + R/r) w(r)

is computed exactly here, coefficient by coefficient.  Replacing each
angular coefficient with an upper bound mu_i (constant term plus the sum of
harmonic amplitudes) yields an envelope Phi(r) >= M(r, t); when Phi is
certified strictly negative for r > 0, the number of limit cycles is at
most the number of distinct nonnegative roots of w, and each is hyperbolic.

No floating point anywhere: half-angle products, averages, and evaluations
all stay in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .algebra import Polynomial, RationalFunction
from .errors import (
    NonzeroAtOrigin,
    NotPolynomial,
    ParityViolation,
    ZeroW,
)
from .roots import IntervalQ, SignCertificate, Verdict, certify_sign, sturm_count
from .systems import SystemDef

__all__ = [
    "TrigPoly",
    "PolarPoly",
    "PolarCertificate",
    "to_polar",
    "radial_average",
    "polar_ms",
    "mu_vector",
    "mu_bounds",
    "certify_polar",
]


# ------------------------------------------------------ trigonometric layer


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class TrigPoly:
    """Finite trigonometric polynomial c0 + sum_k (a_k cos(kt) + b_k sin(kt)).

    Stored sparsely: `const` plus a map k >= 1 -> (cos_coef, sin_coef) with
    zero pairs pruned.  Immutable by convention; all operations return new
    instances.
    """

    __slots__ = ("const", "harmonics")

    def __init__(self, const=0, harmonics: Optional[Dict] = None):
        self.const = _q(const)
        clean = {}
        for k, (a, b) in (harmonics or {}).items():
            a, b = _q(a), _q(b)
            if k < 1:
                raise ValueError(f"harmonic index must be >= 1, got {k}")
            if a or b:
                clean[int(k)] = (a, b)
        self.harmonics = clean

    # ------------------------------------------------------------- builders

    @classmethod
    def constant(cls, c) -> "TrigPoly":
        return cls(c)

    @classmethod
    def cos(cls, k: int = 1, coef=1) -> "TrigPoly":
        if k == 0:
            return cls(coef)
        return cls(0, {abs(k): (_q(coef), Fraction(0))})

    @classmethod
    def sin(cls, k: int = 1, coef=1) -> "TrigPoly":
        if k == 0:
            return cls(0)
        coef = _q(coef)
        if k < 0:
            k, coef = -k, -coef
        return cls(0, {k: (Fraction(0), coef)})

    # -------------------------------------------------------------- queries

    @property
    def is_zero(self) -> bool:
        return self.const == 0 and not self.harmonics

    @property
    def is_constant(self) -> bool:
        return not self.harmonics

    def amplitude_bound(self) -> Fraction:
        """Upper bound for the maximum over the angle: the constant term
        plus the sum of all harmonic amplitudes |a_k| + |b_k|."""
        return self.const + sum(abs(a) + abs(b)
                                for a, b in self.harmonics.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self.const == other.const and self.harmonics == other.harmonics

    def __hash__(self) -> int:
        return hash((self.const, tuple(sorted(self.harmonics.items()))))

    # ----------------------------------------------------------- arithmetic

    def __add__(self, other) -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            other = TrigPoly(other)
        merged = dict(self.harmonics)
        for k, (a, b) in other.harmonics.items():
            pa, pb = merged.get(k, (Fraction(0), Fraction(0)))
            merged[k] = (pa + a, pb + b)
        return TrigPoly(self.const + other.const, merged)

    __radd__ = __add__

    def __neg__(self) -> "TrigPoly":
        return TrigPoly(-self.const,
                        {k: (-a, -b) for k, (a, b) in self.harmonics.items()})

    def __sub__(self, other) -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            other = TrigPoly(other)
        return self + (-other)

    def __rsub__(self, other) -> "TrigPoly":
        return TrigPoly(other) - self

    def __mul__(self, other) -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            c = _q(other)
            return TrigPoly(self.const * c,
                            {k: (a * c, b * c)
                             for k, (a, b) in self.harmonics.items()})
        acc_const = [Fraction(0)]
        acc: Dict[int, list] = {}

        def add_cos(k: int, v: Fraction):
            if not v:
                return
            k = abs(k)
            if k == 0:
                acc_const[0] += v
                return
            slot = acc.setdefault(k, [Fraction(0), Fraction(0)])
            slot[0] += v

        def add_sin(k: int, v: Fraction):
            if not v:
                return
            if k < 0:
                k, v = -k, -v
            if k == 0:
                return
            slot = acc.setdefault(k, [Fraction(0), Fraction(0)])
            slot[1] += v

        half = Fraction(1, 2)
        mine = [(0, (self.const, Fraction(0)))] + sorted(self.harmonics.items())
        theirs = [(0, (other.const, Fraction(0)))] + sorted(other.harmonics.items())
        for i, (a1, b1) in mine:
            for j, (a2, b2) in theirs:
                if i == 0 and j == 0:
                    acc_const[0] += a1 * a2
                    continue
                # cos(it)cos(jt), sin(it)sin(jt), and the crossed products
                add_cos(i - j, half * a1 * a2)
                add_cos(i + j, half * a1 * a2)
                add_cos(i - j, half * b1 * b2)
                add_cos(i + j, -half * b1 * b2)
                add_sin(i + j, half * b1 * a2)
                add_sin(i - j, half * b1 * a2)
                add_sin(i + j, half * a1 * b2)
                add_sin(j - i, half * a1 * b2)
        return TrigPoly(acc_const[0], {k: (v[0], v[1])
                                       for k, v in acc.items()})

    __rmul__ = __mul__

    # ------------------------------------------------------------- calculus

    def differentiate(self) -> "TrigPoly":
        """Derivative with respect to the angle."""
        return TrigPoly(0, {k: (k * b, -k * a)
                            for k, (a, b) in self.harmonics.items()})

    def evaluate(self, cos_t: Fraction, sin_t: Fraction) -> Fraction:
        """Exact value given exact (cos t, sin t) on the unit circle."""
        cos_t, sin_t = _q(cos_t), _q(sin_t)
        total = self.const
        if not self.harmonics:
            return total
        top = max(self.harmonics)
        ck, sk = Fraction(1), Fraction(0)  # cos(0t), sin(0t)
        for k in range(1, top + 1):
            ck, sk = (ck * cos_t - sk * sin_t,
                      sk * cos_t + ck * sin_t)
            if k in self.harmonics:
                a, b = self.harmonics[k]
                total += a * ck + b * sk
        return total

    # ------------------------------------------------------------ rendering

    def render(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        if self.const:
            parts.append(("-" if self.const < 0 else "+", str(abs(self.const))))
        for k in sorted(self.harmonics):
            a, b = self.harmonics[k]
            arg = "t" if k == 1 else f"{k}*t"
            for coef, fn in ((a, "cos"), (b, "sin")):
                if not coef:
                    continue
                mag = abs(coef)
                body = f"{fn}({arg})" if mag == 1 else f"{mag}*{fn}({arg})"
                parts.append(("-" if coef < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"TrigPoly({self.render()})"


class PolarPoly:
    """Polynomial in r whose coefficients are TrigPolys in the angle."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[int, TrigPoly]] = None):
        clean = {}
        for i, tp in (coeffs or {}).items():
            if i < 0:
                raise ValueError(f"negative r-power {i}")
            if not isinstance(tp, TrigPoly):
                tp = TrigPoly(tp)
            if not tp.is_zero:
                clean[int(i)] = tp
        self.coeffs = clean

    # ------------------------------------------------------------- builders

    @classmethod
    def zero(cls) -> "PolarPoly":
        return cls()

    @classmethod
    def from_univariate(cls, p: Polynomial) -> "PolarPoly":
        """Lift a polynomial in a single variable (the radius) to a
        PolarPoly with constant angular coefficients."""
        _, coeffs = p.univariate()
        return cls({i: TrigPoly(c) for i, c in enumerate(coeffs) if c})

    # -------------------------------------------------------------- queries

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> TrigPoly:
        return self.coeffs.get(i, TrigPoly(0))

    def max_power(self) -> int:
        return max(self.coeffs, default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted((i, tp) for i, tp in self.coeffs.items())))

    # ----------------------------------------------------------- arithmetic

    def __add__(self, other) -> "PolarPoly":
        merged = dict(self.coeffs)
        for i, tp in other.coeffs.items():
            merged[i] = merged.get(i, TrigPoly(0)) + tp
        return PolarPoly(merged)

    def __neg__(self) -> "PolarPoly":
        return PolarPoly({i: -tp for i, tp in self.coeffs.items()})

    def __sub__(self, other) -> "PolarPoly":
        return self + (-other)

    def __mul__(self, other) -> "PolarPoly":
        if isinstance(other, PolarPoly):
            out: Dict[int, TrigPoly] = {}
            for i, ti in self.coeffs.items():
                for j, tj in other.coeffs.items():
                    prod = ti * tj
                    out[i + j] = out.get(i + j, TrigPoly(0)) + prod
            return PolarPoly(out)
        return PolarPoly({i: tp * other for i, tp in self.coeffs.items()})

    __rmul__ = __mul__

    # ------------------------------------------------------------- calculus

    def differentiate_r(self) -> "PolarPoly":
        return PolarPoly({i - 1: tp * i
                          for i, tp in self.coeffs.items() if i})

    def differentiate_theta(self) -> "PolarPoly":
        return PolarPoly({i: tp.differentiate()
                          for i, tp in self.coeffs.items()})

    def divide_by_r(self) -> "PolarPoly":
        if 0 in self.coeffs:
            raise ValueError("division by r is not exact: r^0 term present")
        return PolarPoly({i - 1: tp for i, tp in self.coeffs.items()})

    def evaluate(self, r: Fraction, cos_t: Fraction,
                 sin_t: Fraction) -> Fraction:
        r = _q(r)
        total = Fraction(0)
        for i, tp in self.coeffs.items():
            total += tp.evaluate(cos_t, sin_t) * r**i
        return total

    # ------------------------------------------------------------ rendering

    def render(self) -> str:
        if self.is_zero:
            return "0"
        parts = []  # (sign, body) pairs, low power first
        for i in sorted(self.coeffs):
            tp = self.coeffs[i]
            rpow = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
            if tp.is_constant:
                sign = "-" if tp.const < 0 else "+"
                mag = abs(tp.const)
                if not rpow:
                    body = str(mag)
                elif mag == 1:
                    body = rpow
                else:
                    body = f"{mag}*{rpow}"
            else:
                sign = "+"
                body = f"({tp.render()})*{rpow}" if rpow else f"({tp.render()})"
            parts.append((sign, body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"PolarPoly({self.render()})"


# ------------------------------------------------------- cartesian -> polar


def _cos_sin_power(i: int, j: int, cache={}) -> TrigPoly:
    """Exact trigonometric expansion of cos^i(t) * sin^j(t)."""
    key = (i, j)
    if key in cache:
        return cache[key]
    if i == 0 and j == 0:
        out = TrigPoly(1)
    elif i > 0:
        out = _cos_sin_power(i - 1, j) * TrigPoly.cos()
    else:
        out = _cos_sin_power(i, j - 1) * TrigPoly.sin()
    cache[key] = out
    return out


def _poly_to_polar(p: Polynomial) -> PolarPoly:
    """Expand p(r cos t, r sin t) exactly as a PolarPoly."""
    if any(v not in ("x", "y") for v in p.vars):
        raise NotPolynomial(
            f"polar expansion needs variables x, y only; got {p.vars}")
    ix = p.vars.index("x") if "x" in p.vars else None
    iy = p.vars.index("y") if "y" in p.vars else None
    out: Dict[int, TrigPoly] = {}
    for e, c in p.terms.items():
        i = e[ix] if ix is not None else 0
        j = e[iy] if iy is not None else 0
        tp = _cos_sin_power(i, j) * c
        deg = i + j
        out[deg] = out.get(deg, TrigPoly(0)) + tp
    return PolarPoly(out)


def to_polar(sys: SystemDef) -> Tuple[PolarPoly, PolarPoly]:
    """Exact polar form (R, Theta) of a polynomial field vanishing at the
    origin: r' = R(r, t) and t' = Theta(r, t)."""
    P, Q = sys.bound_field()
    if not (P.is_polynomial and Q.is_polynomial):
        raise NotPolynomial(
            "polar expansion needs polynomial components; got "
            f"{P.render()} and {Q.render()}")
    Pp, Qp = P.as_polynomial(), Q.as_polynomial()
    origin = {"x": Fraction(0), "y": Fraction(0)}
    if (not Pp.is_zero and Pp.evaluate(origin) != 0) or \
            (not Qp.is_zero and Qp.evaluate(origin) != 0):
        raise NonzeroAtOrigin("the field must vanish at the origin")

    P_polar = _poly_to_polar(Pp)
    Q_polar = _poly_to_polar(Qp)
    cos_t = PolarPoly({0: TrigPoly.cos()})
    sin_t = PolarPoly({0: TrigPoly.sin()})
    R = P_polar * cos_t + Q_polar * sin_t
    # t' = (x Q - y P)/r^2 = (Q cos t - P sin t)/r; exact because the field
    # vanishes at the origin, so every monomial carries at least one r
    Theta = (Q_polar * cos_t - P_polar * sin_t).divide_by_r()
    return R, Theta


def radial_average(R: PolarPoly) -> Polynomial:
    """Average of R over the angle, divided by r, as a polynomial p(u) with
    u = r^2.  Only odd r-powers may carry a nonzero average; a nonzero even
    one cannot come from a polynomial field and flags an internal error."""
    terms = {}
    for i, tp in R.coeffs.items():
        if tp.const == 0:
            continue
        if i % 2 == 0:
            raise ParityViolation(
                f"even r-power {i} has nonzero angular average {tp.const}")
        terms[((i - 1) // 2,)] = tp.const
    return Polynomial(("u",), terms)


def _pipeline(sys: SystemDef, s: Fraction):
    """Shared exact computation: polar form, average, profile, companion."""
    R, Theta = to_polar(sys)
    p = radial_average(R)
    r = Polynomial.variable("r")
    dp = p.differentiate("u")
    w = dp.substitute({"u": r * r}) * r * r
    if w.is_zero:
        return p, Polynomial.zero(), PolarPoly.zero()
    w_lift = PolarPoly.from_univariate(w)
    dw_lift = PolarPoly.from_univariate(w.differentiate("r"))
    radial_part = R.differentiate_r() + Theta.differentiate_theta() \
        + R.divide_by_r()
    M = R * dw_lift + (radial_part * w_lift) * s
    return p, w, M


def polar_ms(sys: SystemDef, s) -> Tuple[Polynomial, PolarPoly]:
    """The radial profile w(r) = r^2 p'(r^2) and the companion function
    M = R w' + s (dR/dr + dTheta/dt + R/r) w, both exact."""
    _, w, M = _pipeline(sys, Fraction(s))
    return w, M


# ------------------------------------------------------------ the envelope


def mu_vector(M: PolarPoly) -> Dict[int, Fraction]:
    """Per-power envelope values mu_i >= max over the angle of the r^i
    coefficient of M (constant term plus total harmonic amplitude)."""
    return {i: tp.amplitude_bound() for i, tp in sorted(M.coeffs.items())}


def mu_bounds(M: PolarPoly) -> Polynomial:
    """The envelope polynomial Phi(r) = sum_i mu_i r^i with Phi >= M
    pointwise for r >= 0."""
    mu = mu_vector(M)
    return Polynomial(("r",), {(i,): v for i, v in mu.items() if v})


@dataclass
class PolarCertificate:
    """Everything the radial-averaging route produces for one field."""

    p: Polynomial                      # averaged profile, in u = r^2
    w: Polynomial                      # r^2 p'(r^2), in r
    d: int                             # degree of w
    n_plus: int                        # distinct nonnegative roots of w
    mu: Dict[int, Fraction]            # per-power envelope values
    phi: Polynomial                    # envelope polynomial, in r
    phi_sign: SignCertificate
    bound: Optional[int]               # None when inconclusive
    s: Fraction = Fraction(-1)
    notes: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.bound is not None

    def as_dict(self) -> dict:
        return {
            "p": self.p.render(),
            "w": self.w.render(),
            "degree_w": self.d,
            "n_plus": self.n_plus,
            "s": str(self.s),
            "mu": {str(i): str(v) for i, v in sorted(self.mu.items())},
            "phi": self.phi.render(),
            "phi_sign": self.phi_sign.as_dict(),
            "bound": self.bound,
            "notes": list(self.notes),
        }


def certify_polar(sys: SystemDef, s) -> PolarCertificate:
    """Run the whole radial-averaging pipeline and certify the bound.

    The bound equals the number of distinct nonnegative roots of w exactly
    when the envelope Phi is certified strictly negative on (0, oo); the
    certificate is otherwise inconclusive (bound None), never unsound.
    """
    s = Fraction(s)
    p, w, M = _pipeline(sys, s)
    if w.is_zero:
        raise ZeroW("the radial profile w vanishes identically")
    n_plus = sturm_count(w, IntervalQ.ray_above(0, open_end=False))
    mu = mu_vector(M)
    phi = mu_bounds(M)
    phi_sign = certify_sign(phi, IntervalQ.ray_above(0), mode="strict")
    cert = PolarCertificate(
        p=p, w=w, d=w.degree_in("r"), n_plus=n_plus, mu=mu,
        phi=phi, phi_sign=phi_sign, bound=None, s=s)
    if phi_sign.verdict is Verdict.STRICTLY_NEGATIVE:
        cert.bound = n_plus
        plural = "s" if n_plus != 1 else ""
        cert.notes.append(
            f"at most {n_plus} limit cycle{plural}, each hyperbolic")
        if s >= 0:
            cert.notes.append(
                "for s >= 0 the same argument even rules out all cycles")
        lower = max(n_plus - 2, 0)
        cert.notes.append(
            "informational: were the origin the only critical point, at "
            f"least {lower} limit cycle(s) would exist, with alternating "
            "stability (not verified here)")
    else:
        cert.notes.append(
            "envelope not strictly negative for r > 0: no bound claimed")
    return cert
