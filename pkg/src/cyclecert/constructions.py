"""Candidate-function constructions for specific system shapes.

Each routine here builds a scaled-divergence companion pair (V, s) whose
companion function M is known in closed form, so the caller gets both the
candidate and the function whose sign decides the certificate:

* ``lienard_v2`` — quadratic-in-y candidates for fields x' = y - F(x),
  y' = -g(x), with two free constants.
* ``mt_recurrence`` — degree-n-in-y candidates for fields that are affine
  in y in the first component and quadratic in y in the second, found by
  solving the coefficient cascade with polynomial coefficients of bounded
  degree.  Returns ``NotFound`` when no such candidate exists.
* ``second_method_derive`` — for x' = y, y' = h0 + h1 y + h2 y^2 + y^3,
  eliminates the top two coefficients of the cascade at s = -2/3 and
  reports the residual instead of solving the remaining equation.
* ``kolmogorov_check`` — predator-prey fields x' = x(g0 + g1 y),
  y' = y(h0 + h1 y + h2 y^2); produces the pair of univariate polynomials
  whose product's sign on an x-interval settles the question.
* ``massera_check`` — x' = y, y' = -f(x) y - g(x); candidate with an
  explicit companion function phi(x) y^2.
* ``lotka_volterra_dulac`` — quadratic predator-prey fields; a monomial
  weight x^A y^B whose scaled divergence is a single monomial times a
  constant R.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .algebra import Polynomial, RationalFunction, as_fraction
from .errors import GOriginViolation, WrongShape, ZeroG1
from .roots import IntervalQ, SignCertificate, certify_sign, isolate_roots
from .systems import SystemDef

__all__ = [
    "ConstructionResult",
    "DegenerateCase",
    "KolmogorovSpec",
    "LienardSpec",
    "LVMonomialResult",
    "NotFound",
    "kolmogorov_check",
    "lienard_v2",
    "lotka_volterra_dulac",
    "massera_check",
    "mt_recurrence",
    "second_method_derive",
]

_X = Polynomial.variable("x")
_Y = Polynomial.variable("y")


def _rf(p) -> RationalFunction:
    if isinstance(p, RationalFunction):
        return p
    return RationalFunction(p, 1)


def _antiderivative(p: Polynomial, var: str = "x") -> Polynomial:
    """Antiderivative with zero constant term."""
    name, coeffs = p.univariate()
    if name is not None and name != var:
        raise ValueError(f"expected a polynomial in {var}, got {name}")
    out = [Fraction(0)]
    out.extend(Fraction(c, 1) / (i + 1) for i, c in enumerate(coeffs))
    return Polynomial.from_univariate(var, out)


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionResult:
    """A candidate/companion pair produced by a construction routine."""

    V: RationalFunction
    s: Fraction
    M: RationalFunction
    notes: str = ""

    def as_dict(self) -> dict:
        return {"V": self.V.render(), "s": str(self.s),
                "M": self.M.render(), "notes": self.notes}


@dataclass(frozen=True)
class NotFound:
    """The cascade admits no candidate within the requested degree cap."""

    reason: str


@dataclass(frozen=True)
class DegenerateCase:
    """Quadratic predator-prey field with singular isocline pair."""

    note: str


# ---------------------------------------------------------------------------
# quadratic-in-y candidates for x' = y - F, y' = -g
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LienardSpec:
    """Field x' = y - F(x), y' = -g(x) plus construction knobs.

    ``G`` is the antiderivative of ``g`` vanishing at the origin; it may be
    passed explicitly (and is then validated) or left to be computed.
    ``c0`` and ``c1`` are the two free constants of the candidate family.
    """

    F: RationalFunction
    g: Polynomial
    s: Fraction = Fraction(-1)
    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    G: Optional[Polynomial] = None

    def __post_init__(self):
        object.__setattr__(self, "F", _rf(self.F))
        object.__setattr__(self, "g", Polynomial._coerce(self.g))
        object.__setattr__(self, "s", as_fraction(self.s))
        object.__setattr__(self, "c0", as_fraction(self.c0))
        object.__setattr__(self, "c1", as_fraction(self.c1))
        if self.G is None:
            object.__setattr__(self, "G", _antiderivative(self.g))
        else:
            G = Polynomial._coerce(self.G)
            if G.evaluate({"x": Fraction(0)}) != 0:
                raise ValueError("G must vanish at x = 0")
            if G.differentiate("x") != self.g:
                raise ValueError("G must be an antiderivative of g")
            object.__setattr__(self, "G", G)

    def system(self) -> SystemDef:
        return SystemDef(P=_rf(_Y) - self.F, Q=_rf(-self.g))


def lienard_v2(spec: LienardSpec) -> ConstructionResult:
    """Quadratic-in-y candidate for x' = y - F, y' = -g.

    The candidate is

        V = [s(s+1)/2 F^2 + c1 s F + 2G + c0] + (s F + c1) y + y^2

    and its companion function (a function of x alone) is

        M = -s(s+1)(s+2)/2 F^2 F' - s(s+1) c1 F F'
            - (s+2) g F - 2s F' G - s c0 F' - c1 g.
    """
    F, g, G = spec.F, _rf(spec.g), _rf(spec.G)
    s, c0, c1 = spec.s, spec.c0, spec.c1
    Fp = F.differentiate("x")
    y = _rf(_Y)
    V = ((s * (s + 1) / 2) * F * F + (c1 * s) * F + 2 * G + c0
         + (s * F + c1) * y + y * y)
    M = (-(s * (s + 1) * (s + 2) / 2) * F * F * Fp
         - (s * (s + 1) * c1) * F * Fp
         - (s + 2) * g * F
         - (2 * s) * Fp * G
         - (s * c0) * Fp
         - c1 * g)
    return ConstructionResult(
        V=V, s=s, M=M,
        notes=f"quadratic-in-y candidate with free constants c0={c0}, c1={c1}")


# ---------------------------------------------------------------------------
# degree-n cascade for x' = p0 + p1 y, y' = q0 + q1 y + q2 y^2
# ---------------------------------------------------------------------------


def _nullspace(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of the nullspace of the given exact rational matrix."""
    mat = [row[:] for row in rows if any(v != 0 for v in row)]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0),
                         None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c]
        mat[r] = [v / inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [vi - factor * vr for vi, vr in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    pivot_set = set(pivots)
    basis = []
    for free_col in (c for c in range(ncols) if c not in pivot_set):
        vec = [Fraction(0)] * ncols
        vec[free_col] = Fraction(1)
        for row_index, pivot_col in enumerate(pivots):
            vec[pivot_col] = -mat[row_index][free_col]
        basis.append(vec)
    return basis


def _y_coefficients(p: Polynomial, max_degree: int, what: str) -> List[Polynomial]:
    coeffs = p.coefficients_in("y")
    if len(coeffs) - 1 > max_degree:
        raise WrongShape(f"{what} has degree {len(coeffs) - 1} in y; "
                         f"at most {max_degree} is allowed")
    for c in coeffs:
        if "y" in c.vars:
            raise WrongShape(f"{what} mixes y into an x-coefficient")
    coeffs = [c for c in coeffs]
    while len(coeffs) <= max_degree:
        coeffs.append(Polynomial.zero())
    return coeffs


def mt_recurrence(sys: SystemDef, s: Fraction, n: int,
                  degree_cap: int = 8) -> Union[ConstructionResult, NotFound]:
    """Degree-n-in-y candidate V = v0 + v1 y + ... + vn y^n.

    Requires x' = p0(x) + p1(x) y with p1 not identically zero and
    y' = q0(x) + q1(x) y + q2(x) y^2.  The coefficients v_j are polynomials
    in x of degree at most ``degree_cap``; they must satisfy one linear
    equation per power y^1 ... y^(n+1), and the leftover constant-in-y part
    is the companion function M.  The equations are solved exactly; the
    returned candidate is the first nullspace direction with a nonzero top
    coefficient v_n, scaled so v_n has leading coefficient 1 (the remaining
    free constants are set to zero).
    """
    if n < 1:
        raise ValueError("candidate degree n must be at least 1")
    s = as_fraction(s)
    P, Q = sys.bound_field()
    if not (P.is_polynomial and Q.is_polynomial):
        raise WrongShape("both components must be polynomial")
    p0, p1 = _y_coefficients(P.as_polynomial(), 1, "x'")[:2]
    q0, q1, q2 = _y_coefficients(Q.as_polynomial(), 2, "y'")[:3]
    if p1.is_zero:
        raise WrongShape("the coefficient of y in x' must not vanish "
                         "identically")

    p0d = p0.differentiate("x")
    p1d = p1.differentiate("x")

    # Equation for y^t is sum_j alpha[t][j] v_j + beta[t][j] v_j'.
    def alpha_beta(t: int):
        pairs = {}
        if t == n + 1:
            pairs[n] = (s * p1d + (2 * s + n) * q2, p1)
        else:
            j = t
            pairs[j] = (s * p0d + (s + j) * q1, p0)
            pairs[j - 1] = (s * p1d + (2 * s + j - 1) * q2, p1)
            if j + 1 <= n:
                a, b = pairs.get(j + 1, (Polynomial.zero(), Polynomial.zero()))
                pairs[j + 1] = (a + (j + 1) * q0, b)
        return pairs

    ncols = (n + 1) * (degree_cap + 1)

    def col(j: int, k: int) -> int:
        return j * (degree_cap + 1) + k

    rows = []
    for t in range(1, n + 2):
        # contribution of unknown coefficient k of v_j to the y^t equation
        contributions = {}
        for j, (a, b) in alpha_beta(t).items():
            if j < 0:
                continue
            for k in range(degree_cap + 1):
                term = a * _X ** k
                if k:
                    term = term + k * b * _X ** (k - 1)
                if not term.is_zero:
                    contributions[(j, k)] = term
        degree = max((term.degree_in("x") for term in contributions.values()),
                     default=-1)
        for m in range(degree + 1):
            row = [Fraction(0)] * ncols
            hit = False
            for (j, k), term in contributions.items():
                coeffs = term.coefficients_in("x")
                if m < len(coeffs) and not coeffs[m].is_zero:
                    row[col(j, k)] = coeffs[m].terms.get((), Fraction(0))
                    hit = True
            if hit:
                rows.append(row)

    basis = _nullspace(rows, ncols)
    chosen = None
    for vec in basis:
        if any(vec[col(n, k)] != 0 for k in range(degree_cap + 1)):
            chosen = vec
            break
    if chosen is None:
        return NotFound(
            f"no candidate of degree {n} in y with polynomial coefficients "
            f"of degree at most {degree_cap} has a nonzero top coefficient")

    def part(vec, j: int) -> Polynomial:
        return Polynomial.from_univariate(
            "x", [vec[col(j, k)] for k in range(degree_cap + 1)])

    top = part(chosen, n)
    lead = top.coefficients_in("x")[top.degree_in("x")].terms.get((), Fraction(1))
    scaled = [v / lead for v in chosen]
    vs = [part(scaled, j) for j in range(n + 1)]

    V = Polynomial.zero()
    for j, vj in enumerate(vs):
        V = V + vj * _Y ** j
    M = ((s * p0d + s * q1) * vs[0] + p0 * vs[0].differentiate("x")
         + q0 * vs[1])
    return ConstructionResult(
        V=_rf(V), s=s, M=_rf(M),
        notes=(f"cascade solution with coefficient degree cap {degree_cap}; "
               f"top coefficient normalised to leading coefficient 1, other "
               f"free directions set to zero"))


# ---------------------------------------------------------------------------
# residual route for x' = y, y' = h0 + h1 y + h2 y^2 + y^3
# ---------------------------------------------------------------------------


def second_method_derive(h0, h1, h2, v2) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """Partial cascade for the cubic-in-y field at s = -2/3.

    Given the top coefficient v2(x), eliminating the y^3 and y^2 parts of
    the scaled divergence forces

        v1 = v2' + (2/3) v2 h2
        v0 = (1/2) (v1' + (4/3) v2 h1 - (1/3) v1 h2)

    Returns (V2, M2, residual) where V2 = v0 + v1 y + v2 y^2,
    M2 = v1 h0 - (2/3) h1 v0 is the constant-in-y part, and

        residual = v0' + (1/3) v1 h1 - (4/3) h2 v0 + 2 v2 h0

    is the y-coefficient left over (not solved for here): the full scaled
    divergence is M2 + residual * y.  A nonzero residual is reported, not
    an error.
    """
    h0 = Polynomial._coerce(h0)
    h1 = Polynomial._coerce(h1)
    h2 = Polynomial._coerce(h2)
    v2 = Polynomial._coerce(v2)
    third = Fraction(1, 3)
    v1 = v2.differentiate("x") + 2 * third * v2 * h2
    v0 = Fraction(1, 2) * (v1.differentiate("x") + 4 * third * v2 * h1
                           - third * v1 * h2)
    m2 = v1 * h0 - 2 * third * h1 * v0
    residual = (v0.differentiate("x") + third * v1 * h1 - 4 * third * h2 * v0
                + 2 * v2 * h0)
    V2 = v0 + v1 * _Y + v2 * _Y ** 2
    return V2, m2, residual


# ---------------------------------------------------------------------------
# predator-prey fields x' = x(g0 + g1 y), y' = y(h0 + h1 y + h2 y^2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KolmogorovSpec:
    """Field x' = x(g0(x) + g1(x) y), y' = y(h0(x) + h1(x) y + h2(x) y^2)
    on I x (0, +inf) for an x-interval I inside (0, +inf)."""

    g0: Polynomial
    g1: Polynomial
    h0: Polynomial
    h1: Polynomial
    h2: Polynomial
    lam: Fraction
    interval: IntervalQ

    def __post_init__(self):
        for name in ("g0", "g1", "h0", "h1", "h2"):
            object.__setattr__(self, name, Polynomial._coerce(getattr(self, name)))
        object.__setattr__(self, "lam", as_fraction(self.lam))
        if self.g1.is_zero:
            raise ZeroG1("the coefficient g1 of y in x' must not vanish "
                         "identically")
        lo, lo_open = self.interval.lo, self.interval.lo_open
        if lo is None or lo < 0 or (lo == 0 and not lo_open):
            raise ValueError("the x-interval must sit inside (0, +inf)")

    def system(self) -> SystemDef:
        return SystemDef(P=_X * (self.g0 + self.g1 * _Y),
                         Q=_Y * (self.h0 + self.h1 * _Y + self.h2 * _Y * _Y))


def kolmogorov_check(spec: KolmogorovSpec) -> Tuple[Polynomial, Polynomial,
                                                    SignCertificate]:
    """Sign test deciding absence of periodic orbits in I x (0, +inf).

    With lam = spec.lam, the two univariate polynomials

        S = x (g0' g1 - g0 g1') + lam h0 g1 - (1 + lam) g0 h1
        T = (2 + lam) h2 g1

    control the scaled divergence: if S(x) T(x) >= 0 on I with only
    isolated zeros, there are no periodic orbits in I x (0, +inf).  The
    returned certificate is the sign certificate of S*T on I (Indeterminate
    when the product vanishes identically).
    """
    g0, g1 = spec.g0, spec.g1
    h0, h1, h2 = spec.h0, spec.h1, spec.h2
    lam = spec.lam
    S = (_X * (g0.differentiate("x") * g1 - g0 * g1.differentiate("x"))
         + lam * h0 * g1 - (1 + lam) * g0 * h1)
    T = (2 + lam) * h2 * g1
    certificate = certify_sign(S * T, spec.interval)
    return S, T, certificate


# ---------------------------------------------------------------------------
# x' = y, y' = -f(x) y - g(x)
# ---------------------------------------------------------------------------


def massera_check(f, g, interval: IntervalQ) -> Tuple[ConstructionResult,
                                                      SignCertificate]:
    """Candidate V = y^2 + (2 G f / g) y + 2G at s = -1 for the field
    x' = y, y' = -f(x) y - g(x), on the strip I x R.

    Requires g(0) = 0 and no other zero of g in I (GOriginViolation
    otherwise).  The companion function is phi(x) y^2 with

        phi = f + 2 G (f/g)'

    and the certificate is the sign certificate of phi on I.  When the
    verdict is conclusive and phi vanishes only at x = 0, the strip holds
    at most one periodic orbit, and it is a hyperbolic limit cycle.
    """
    f = Polynomial._coerce(f)
    g = Polynomial._coerce(g)
    if g.is_zero:
        raise GOriginViolation("g must not vanish identically")
    if not interval.contains(0):
        raise ValueError("the strip's x-interval must contain 0")
    if g.evaluate({"x": Fraction(0)}) != 0:
        raise GOriginViolation("g(0) must be 0")
    # each isolating interval holds exactly one root, so the root at the
    # origin is the record whose interval contains 0
    other = [rec for rec in isolate_roots(g, interval)
             if not rec.interval.contains(0)]
    if other:
        raise GOriginViolation(
            f"g vanishes at {len(other)} point(s) of the interval besides "
            f"x = 0")

    G = _antiderivative(g)
    cross = RationalFunction(2 * G * f, g)
    den_at_0 = cross.den.evaluate({"x": Fraction(0)})
    if den_at_0 == 0:
        raise GOriginViolation("2 G f / g is not defined at x = 0")

    y = _rf(_Y)
    V = y * y + cross * y + 2 * _rf(G)
    phi = _rf(f) + 2 * _rf(G) * RationalFunction(f, g).differentiate("x")
    M = phi * y * y
    certificate = certify_sign(phi, interval)

    phi_roots = ([] if phi.num.is_zero
                 else list(isolate_roots(phi.num, interval)))
    zeros_ok = (not phi.num.is_zero
                and all(rec.interval.contains(0) for rec in phi_roots)
                and (not phi_roots
                     or phi.num.evaluate({"x": Fraction(0)}) == 0))
    if certificate.verdict.is_conclusive and zeros_ok:
        notes = ("companion function phi(x) y^2 is one-signed on the strip "
                 "and vanishes only on the axes: at most one periodic orbit "
                 "lies entirely inside the strip, and it is a hyperbolic "
                 "limit cycle")
    else:
        notes = ("companion-function hypothesis not certified on the strip: "
                 "no bound claimed")
    result = ConstructionResult(V=V, s=Fraction(-1), M=M, notes=notes)
    return result, certificate


# ---------------------------------------------------------------------------
# quadratic predator-prey fields x' = x(ax+by+c), y' = y(dx+ey+f)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LVMonomialResult:
    """Monomial weight x^A y^B for the quadratic predator-prey field.

    The scaled divergence of the weighted field collapses to
    R x^A y^B; its sign in the open quadrant is the sign of R.
    """

    A: Fraction
    B: Fraction
    R: Fraction
    kind: str  # "no_cycles" | "integrable"
    note: str


def lotka_volterra_dulac(a, b, c, d, e, f) -> Union[LVMonomialResult,
                                                    DegenerateCase]:
    """Monomial-weight analysis of x' = x(ax+by+c), y' = y(dx+ey+f).

    When ae != bd, exponents A, B are chosen so the x- and y-coefficients
    of the scaled divergence vanish, leaving the single constant

        R = (abf + ced - aef - ace) / (ae - bd).

    R != 0 certifies that the open quadrant holds no limit cycles; R = 0
    makes x^A y^B an integrating factor, so the field is integrable there
    and again has no limit cycles.  When ae = bd the isocline pair is
    singular and the quadrant never holds a periodic orbit at all.
    """
    a, b, c = as_fraction(a), as_fraction(b), as_fraction(c)
    d, e, f = as_fraction(d), as_fraction(e), as_fraction(f)
    det = a * e - b * d
    if det == 0:
        return DegenerateCase(note=(
            "degenerate isoclines (a*e - b*d = 0): the lines a*x + b*y + c "
            "and d*x + e*y + f are parallel or proportional, so the open "
            "quadrant holds either no interior equilibrium for a closed "
            "orbit to enclose, or a time-reparameterised separable flow "
            "with monotone trajectories; either way it contains no "
            "periodic orbit"))
    A = (-2 * a * e + d * e + d * b) / det
    B = (-2 * a * e + a * b + b * d) / det
    R = (a * b * f + c * e * d - a * e * f - a * c * e) / det
    assert R == c * A + f * B + c + f, "internal exponent inconsistency"
    if R != 0:
        kind = "no_cycles"
        note = (f"scaled divergence is {R} * x^({A}) * y^({B}), one-signed "
                f"in the open quadrant: no limit cycles there")
    else:
        kind = "integrable"
        note = ("scaled divergence vanishes identically: x^A y^B is an "
                "integrating factor, the field is integrable in the open "
                "quadrant, and no limit cycle exists there")
    return LVMonomialResult(A=A, B=B, R=R, kind=kind, note=note)
