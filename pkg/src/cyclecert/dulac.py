"""Dulac certificates: the companion function of a candidate pair (V, s),
its sign over a region, and the resulting cycle-count bound.

Given a field X = (P, Q) and a candidate (V, s), the companion function is

    M = V_x P + V_y Q + s (P_x + Q_y) V,

the divergence of |V|^{1/s} X up to the positive factor (1/|s|)|V|^{1/s-1}.
When M is one-signed over a simply connected region, vanishing only on a
negligible set whose intersection with {V = 0} carries no periodic orbit,
every limit cycle in the region avoids {V = 0}; their number is then at
most the number of bounded components of {V = 0} when s < 0, and zero when
s >= 0.  Cycles are hyperbolic for s != 0, with stability read off the sign
of V * s * M along each one.  Separately, cycles lying inside {V = 0}
itself are counted by its smooth ovals, and ruled out entirely when V and
its derivative along the field share no factor.

Sign certification in two variables is deliberately narrow.  M is accepted
when it is univariate (in x, in y, or through x^2 + y^2), or splits into at
most four groups u(x) * y^even (or the mirror), each group one-signed in
the same direction; anything else raises UnsupportedShape.  A bound is
issued only when the certified zero set of M is contained in finitely many
points and axis-parallel lines (or just the origin), sets that can never
carry a periodic orbit — this, rather than any inspection of orbits,
enforces the negligible-intersection hypothesis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .algebra import Polynomial, RationalFunction, poly_gcd
from .errors import UnboundParameter, UnsupportedShape, ZeroPolynomial
from .regions import Region
from .roots import (
    IntervalQ,
    SignCertificate,
    Verdict,
    certify_sign,
    discriminant_y,
    isolate_roots,
    sign_at,
)
from .systems import SystemDef
from .topology import (
    CurveTopologyReport,
    analyze_quadratic_curve,
    analyze_zero_set,
    radial_profile,
    region_ell,
)

__all__ = [
    "DulacCandidate",
    "TwoVariableSignEvidence",
    "DulacCertificate",
    "compute_ms",
    "compute_div_dx",
    "certify_two_variable_sign",
    "certify_direct",
]

MAX_GROUPS = 4  # most u(x)*y^even groups the sum pattern will accept


def _as_rational(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


@dataclass
class DulacCandidate:
    """A candidate pair (V, s); the implied Dulac function is |V|^{1/s}."""

    V: RationalFunction
    s: Fraction

    def __post_init__(self):
        self.V = _as_rational(self.V)
        self.s = Fraction(self.s)
        if self.V.is_zero:
            raise ZeroPolynomial("candidate V must not vanish identically")

    def describe(self) -> str:
        return f"V = {self.V.render()}, s = {self.s}"


@dataclass
class TwoVariableSignEvidence:
    """Sign verdict for a two-variable function, with the decomposition
    that justified it and a superset of its zero set."""

    verdict: Verdict
    strategy: str                 # radial | y-groups | x-groups | split | zero
    pieces: list = field(default_factory=list)
    zero_set: str = ""
    zero_set_acceptable: bool = False
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "strategy": self.strategy,
            "pieces": [
                {k: (v.as_dict() if isinstance(v, SignCertificate) else v)
                 for k, v in piece.items()}
                for piece in self.pieces
            ],
            "zero_set": self.zero_set,
            "zero_set_acceptable": self.zero_set_acceptable,
            "note": self.note,
        }


@dataclass
class DulacCertificate:
    """Outcome of one direct certification attempt."""

    candidate: DulacCandidate
    m_s: RationalFunction
    sign: Union[SignCertificate, TwoVariableSignEvidence]
    topology: CurveTopologyReport
    bound: Optional[int]            # cycles disjoint from {V=0}; None if open
    bound_kind: Optional[str]       # "NoCycles" | "AtMost" | None
    cycles_in_curve: Optional[int]  # separate allowance inside {V=0}
    stability_note: str = ""
    notes: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.bound_kind is not None

    def as_dict(self) -> dict:
        return {
            "candidate": self.candidate.describe(),
            "m_s": self.m_s.render(),
            "sign": self.sign.as_dict(),
            "topology": self.topology.as_dict() if self.topology else None,
            "bound": self.bound,
            "bound_kind": self.bound_kind,
            "cycles_in_curve": self.cycles_in_curve,
            "stability_note": self.stability_note,
            "notes": list(self.notes),
        }


# --------------------------------------------------------- the two formulas


def _bind(expr: RationalFunction, params: dict) -> RationalFunction:
    if not params:
        return expr
    return expr.substitute({k: RationalFunction.constant(v)
                            for k, v in params.items()})


def compute_ms(sys: SystemDef, cand: DulacCandidate) -> RationalFunction:
    """V_x P + V_y Q + s (P_x + Q_y) V, exactly.  Declared parameter values
    are substituted; any other symbol is carried through symbolically."""
    P, Q = _bind(sys.P, sys.params), _bind(sys.Q, sys.params)
    V = _bind(cand.V, sys.params)
    div = P.differentiate("x") + Q.differentiate("y")
    return (V.differentiate("x") * P + V.differentiate("y") * Q
            + div * V * RationalFunction.constant(cand.s))


def compute_div_dx(sys: SystemDef, D: RationalFunction) -> RationalFunction:
    """The divergence of D * (P, Q): <grad D, X> + D (P_x + Q_y)."""
    P, Q = _bind(sys.P, sys.params), _bind(sys.Q, sys.params)
    D = _bind(_as_rational(D), sys.params)
    return (D.differentiate("x") * P + D.differentiate("y") * Q
            + D * (P.differentiate("x") + Q.differentiate("y")))


# ------------------------------------------------------- sign certification


def _direction(verdict: Verdict) -> Optional[int]:
    if verdict in (Verdict.STRICTLY_NEGATIVE,
                   Verdict.NONPOSITIVE_ZERO_MEASURE):
        return -1
    if verdict in (Verdict.STRICTLY_POSITIVE,
                   Verdict.NONNEGATIVE_ZERO_MEASURE):
        return 1
    return None


def _verdict_from(direction: int, strict: bool) -> Verdict:
    if direction < 0:
        return Verdict.STRICTLY_NEGATIVE if strict \
            else Verdict.NONPOSITIVE_ZERO_MEASURE
    return Verdict.STRICTLY_POSITIVE if strict \
        else Verdict.NONNEGATIVE_ZERO_MEASURE


def _try_groups(F: Polynomial, region: Region, group_var: str,
                free_var: str) -> Optional[TwoVariableSignEvidence]:
    """Try to certify F as a sum of groups u(free_var) * group_var^even,
    all one-signed the same way.  None means the shape does not fit; an
    indeterminate evidence means it fits but a group's sign is unknown."""
    groups = F.coefficients_in(group_var)
    active = [(j, u) for j, u in enumerate(groups) if not u.is_zero]
    if any(j % 2 for j, _ in active) or len(active) > MAX_GROUPS:
        return None
    extent = region.x_extent() if free_var == "x" else region.y_extent()
    strategy = f"{group_var}-groups"
    pieces = []
    dirs = set()
    for j, u in active:
        cert = certify_sign(u, extent)
        pieces.append({"factor": u.render(),
                       "monomial": f"{group_var}^{j}",
                       "certificate": cert})
        dirs.add(_direction(cert.verdict))
    if None in dirs or len(dirs) != 1:
        return TwoVariableSignEvidence(
            Verdict.INDETERMINATE, strategy, pieces,
            note="group signs are mixed or indeterminate")
    direction = dirs.pop()
    # the sum vanishes only where every group does, so one group that never
    # vanishes makes the whole sum strict; an even power of group_var only
    # vanishes on its axis, which an open quadrant excludes entirely
    axis_off = not (region.y_extent() if group_var == "y"
                    else region.x_extent()).contains(0)
    head = next((p for (j, _), p in zip(active, pieces) if j == 0), None)
    strict = any(
        p["certificate"].verdict.is_strict and (j == 0 or axis_off)
        for (j, _), p in zip(active, pieces))
    if strict:
        zero_desc = "empty"
    else:
        witness = head if head is not None else pieces[0]
        lines = []
        if head is None and not axis_off:
            lines.append(f"the line {group_var} = 0")
        lines.append(f"zeros of {witness['factor']} as "
                     f"{'vertical' if free_var == 'x' else 'horizontal'} "
                     "lines")
        zero_desc = "contained in " + " and ".join(lines)
    return TwoVariableSignEvidence(
        _verdict_from(direction, strict), strategy, pieces,
        zero_set=zero_desc, zero_set_acceptable=True)


def _certify_polynomial_sign(
        F: Polynomial,
        region: Region) -> Union[SignCertificate, TwoVariableSignEvidence]:
    bad = [v for v in F.vars if v not in ("x", "y")]
    if bad:
        raise UnboundParameter(f"free symbols in sign target: {bad}")
    if all(v != "y" for v in F.vars):
        return certify_sign(F, region.x_extent())
    if all(v != "x" for v in F.vars):
        return certify_sign(F, region.y_extent())

    h = radial_profile(F)
    if h is not None:
        cert = certify_sign(h, IntervalQ.ray_above(0, open_end=False))
        rings = isolate_roots(h, IntervalQ.ray_above(0, open_end=True))
        at_origin = sign_at(h, 0) == 0 if not h.is_constant else False
        if len(rings) == 0:
            zero_desc = "the origin" if at_origin else "empty"
            acceptable = True
        else:
            zero_desc = f"{len(rings)} circle(s) around the origin"
            acceptable = False
        return TwoVariableSignEvidence(
            cert.verdict, "radial",
            [{"factor": h.render(), "monomial": "(x^2+y^2)",
              "certificate": cert}],
            zero_set=zero_desc, zero_set_acceptable=acceptable)

    fallback = None
    for group_var, free_var in (("y", "x"), ("x", "y")):
        ev = _try_groups(F, region, group_var, free_var)
        if ev is not None and ev.verdict is not Verdict.INDETERMINATE:
            return ev
        fallback = fallback or ev
    if fallback is not None:
        return fallback
    raise UnsupportedShape(
        "no sign pattern fits the companion function: " + F.render())


def certify_two_variable_sign(
        M: RationalFunction,
        region: Region) -> Union[SignCertificate, TwoVariableSignEvidence]:
    """Certify the sign of M over the region, via the narrow pattern list
    in the module docstring.  Raises UnsupportedShape when nothing fits."""
    M = _as_rational(M)
    if M.is_zero:
        return TwoVariableSignEvidence(
            Verdict.INDETERMINATE, "zero", [],
            zero_set="the whole region",
            note="the companion function vanishes identically")
    if M.is_polynomial:
        return _certify_polynomial_sign(M.as_polynomial(), region)
    if len(M.free_variables) <= 1:
        return certify_sign(M, _extent_for(M, region))

    den_ev = _certify_polynomial_sign(M.den, region)
    den_dir = _direction(_verdict_of(den_ev))
    if den_dir is None or not _verdict_of(den_ev).is_strict:
        return TwoVariableSignEvidence(
            Verdict.INDETERMINATE, "split",
            [{"factor": M.den.render(), "monomial": "denominator",
              "certificate": den_ev}],
            note="denominator is not certified strictly one-signed")
    num_ev = _certify_polynomial_sign(M.num, region)
    num_v = _verdict_of(num_ev)
    num_dir = _direction(num_v)
    pieces = [{"factor": M.num.render(), "monomial": "numerator",
               "certificate": num_ev},
              {"factor": M.den.render(), "monomial": "denominator",
               "certificate": den_ev}]
    if num_dir is None:
        return TwoVariableSignEvidence(
            Verdict.INDETERMINATE, "split", pieces,
            note="numerator sign is indeterminate")
    return TwoVariableSignEvidence(
        _verdict_from(num_dir * den_dir, num_v.is_strict), "split", pieces,
        zero_set=_zero_desc(num_ev), zero_set_acceptable=_acceptable(num_ev))


def _extent_for(M: RationalFunction, region: Region) -> IntervalQ:
    free = M.free_variables
    return region.y_extent() if "y" in free else region.x_extent()


def _verdict_of(ev) -> Verdict:
    return ev.verdict


def _acceptable(ev) -> bool:
    # univariate zero sets are finitely many axis-parallel lines
    return True if isinstance(ev, SignCertificate) else ev.zero_set_acceptable


def _zero_desc(ev) -> str:
    if isinstance(ev, SignCertificate):
        return "finitely many axis-parallel lines"
    return ev.zero_set


# ------------------------------------------------------ certificate assembly


def _analyze_candidate_curve(V: RationalFunction,
                             region: Region) -> CurveTopologyReport:
    if V.is_polynomial:
        return analyze_zero_set(V.as_polynomial(), region)
    return analyze_quadratic_curve(V, region)


def _cycles_inside_curve(V: RationalFunction, P: RationalFunction,
                         Q: RationalFunction,
                         topology: CurveTopologyReport) -> int:
    """Allowance for cycles contained in {V = 0} itself.  Points and lines
    carry none; otherwise each smooth oval could be one, unless V and its
    derivative along the field share no factor, which pins any such cycle
    inside a finite set."""
    if topology.smooth_ovals == 0:
        return 0
    along = V.differentiate("x") * P + V.differentiate("y") * Q
    g = poly_gcd(V.num, along.num)
    if g.is_constant:
        return 0
    return topology.smooth_ovals


def _exclude_bounded_interior(V: RationalFunction, P: RationalFunction,
                              Q: RationalFunction,
                              region: Region) -> bool:
    """True when no cycle can lie in {V < 0}.

    For V monic-quadratic in y, {V < 0} sits inside the vertical strip
    spanned by the discriminant's outermost roots.  If the plain divergence
    P_x + Q_y is one-signed (not identically zero) on that strip, the
    classical one-function argument on the simply connected strip leaves no
    room for a periodic orbit there, hence none in {V < 0}."""
    if region.kind != "plane" or not V.is_polynomial:
        return False
    Vp = V.as_polynomial()
    if Vp.degree_in("y") != 2:
        return False
    lead = Vp.coefficients_in("y")[2]
    if not (lead.is_constant and lead.constant_value() > 0):
        return False
    delta = discriminant_y(Vp)
    if delta.is_zero or delta.is_constant or len(delta.vars) > 1:
        return False
    roots = isolate_roots(delta)
    if len(roots) == 0:
        return False
    lo = min(rec.interval.lo for rec in roots)
    hi = max(rec.interval.hi for rec in roots)
    # the strip covers {delta >= 0} only if delta is negative on both tails
    if sign_at(delta, lo - 1) >= 0 or sign_at(delta, hi + 1) >= 0:
        return False
    div = P.differentiate("x") + Q.differentiate("y")
    if not div.is_polynomial:
        return False
    divp = div.as_polynomial()
    if divp.is_zero or any(v != "x" for v in divp.vars):
        return False
    cert = certify_sign(divp, IntervalQ.closed(lo, hi))
    return cert.verdict.is_conclusive


def _off_curve_sign(V: RationalFunction,
                    topology: CurveTopologyReport) -> Optional[int]:
    """Sign of V away from its zero set, when the complement is connected
    (no ovals, no lines, no unbounded branches: only isolated points)."""
    if topology.smooth_ovals or topology.pinched_components \
            or topology.unbounded_components or topology.boundary_contact:
        return None
    for x0, y0 in ((1, 1), (2, 3), (-1, 2), (5, 7), (-3, -4)):
        try:
            val = V.evaluate({"x": Fraction(x0), "y": Fraction(y0)})
        except Exception:
            continue
        if val:
            return 1 if val > 0 else -1
    return None


def _stability_text(m_dir: int, s: Fraction, V: RationalFunction,
                    topology: CurveTopologyReport,
                    inside_excluded: bool) -> str:
    """Stability of any cycle from the sign of V * s * M along it."""
    if s == 0:
        return ""
    s_dir = 1 if s > 0 else -1
    word = {-1: "stable", 1: "unstable"}

    fixed = _off_curve_sign(V, topology)
    if fixed is not None:
        verdict = word[fixed * s_dir * m_dir]
        return (f"each limit cycle is hyperbolic and {verdict} "
                f"(the divergence of the scaled field is "
                f"{'negative' if fixed * s_dir * m_dir < 0 else 'positive'} "
                "off the curve)")
    outside = word[s_dir * m_dir]       # cycles in {V > 0}
    inside = word[-s_dir * m_dir]       # cycles in {V < 0}
    circles = topology.details.get("circles", [])
    if inside_excluded:
        place = circles[0] if len(circles) == 1 else "the curve's interior"
        return (f"each limit cycle lies outside {place}; it is "
                f"hyperbolic and {outside}")
    return (f"each limit cycle is hyperbolic: {outside} where V > 0, "
            f"{inside} where V < 0")


def certify_direct(sys: SystemDef, cand: DulacCandidate,
                   region: Region = None) -> DulacCertificate:
    """Assemble a full certificate for one candidate pair over a region.

    The cycle count (for cycles disjoint from {V = 0}) follows the sign of
    s: zero bounded components are available for s >= 0 on the supported
    simply connected regions, and the bounded components of {V = 0} each
    admit at most one cycle when s < 0.  Cycles inside {V = 0} are bounded
    separately.  An indeterminate sign, or a zero set that is not provably
    points-and-lines, yields an inconclusive certificate, never a bound."""
    region = region or Region.plane()
    P, Q = sys.bound_field()
    V = _bind(cand.V, sys.params)
    loose = [v for v in V.free_variables if v not in ("x", "y")]
    if loose:
        raise UnboundParameter(f"candidate V has unbound symbols: {loose}")
    bound_cand = DulacCandidate(V, cand.s)

    m = (V.differentiate("x") * P + V.differentiate("y") * Q
         + (P.differentiate("x") + Q.differentiate("y")) * V
         * RationalFunction.constant(cand.s))
    sign_ev = certify_two_variable_sign(m, region)
    topology = _analyze_candidate_curve(V, region)

    verdict = _verdict_of(sign_ev)
    m_dir = _direction(verdict)
    cert = DulacCertificate(
        candidate=bound_cand, m_s=m, sign=sign_ev, topology=topology,
        bound=None, bound_kind=None, cycles_in_curve=None)

    if m_dir is None:
        cert.notes.append(
            "sign of the companion function is indeterminate: inconclusive")
        return cert
    if not _acceptable(sign_ev):
        cert.notes.append(
            "companion function vanishes on a set not certified to be "
            "points and lines (" + _zero_desc(sign_ev) + "): inconclusive")
        return cert
    if topology.boundary_contact:
        cert.notes.append(
            "the curve {V = 0} reaches the region boundary: inconclusive")
        return cert
    if not topology.supported:
        cert.notes.append(
            "the curve {V = 0} is outside the supported catalogue: "
            "inconclusive")
        return cert

    s = cand.s
    if s > 0:
        n_outside = region_ell(region)
    elif s == 0:
        n_outside = 0
    else:
        n_outside = topology.ell_curve
    inside = _cycles_inside_curve(V, P, Q, topology)
    cert.bound = n_outside
    cert.cycles_in_curve = inside
    cert.bound_kind = "NoCycles" if n_outside + inside == 0 else "AtMost"

    excluded = False
    if s != 0 and n_outside > 0:
        excluded = _exclude_bounded_interior(V, P, Q, region)
        if excluded:
            cert.notes.append(
                "no cycle fits in {V < 0}: the plain divergence is "
                "one-signed on a vertical strip covering it")
    cert.stability_note = _stability_text(m_dir, s, V, topology, excluded)
    total = n_outside + inside
    if cert.bound_kind == "NoCycles":
        cert.notes.append("no limit cycles in the region")
    else:
        cert.notes.append(
            f"at most {n_outside} limit cycle(s) away from the curve, "
            f"plus at most {inside} inside it (total {total})")
    return cert
