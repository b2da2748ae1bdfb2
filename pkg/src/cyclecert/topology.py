"""Certified structure of planar algebraic zero sets.

The certificate machinery needs to know, for a polynomial V and a region,
how the real curve {V = 0} decomposes: how many bounded components it has
(ovals, pinched chains, isolated points), how many unbounded pieces, and
whether anything touches the region boundary.  Only shapes that can be
analyzed exactly are supported -- unions of axis-parallel lines, circles
centered at the origin, and curves quadratic in one of the variables, whose
structure reduces to univariate root isolation of the discriminant.  For
anything else the report comes back with supported=False and callers must
degrade gracefully; the analyzer never guesses.

Counting conventions.  A bounded component strictly inside the (open)
region counts toward `bounded_components`; a compact component is strictly
inside exactly when it is contained in the region, so anything reaching the
boundary is excluded and flagged via `boundary_contact` instead.  Removing
a bounded component from the region adds exactly one hole -- for the curve
classes here no bounded component can enclose another (each vertical line
meets a curve quadratic in y at most twice; concentric circles are each
their own component), so every complementary region except the outer one is
simply connected.  Hence `ell_curve`, the number of holes the zero set cuts
into the region, equals `bounded_components`.  The supported regions are
all simply connected, so `ell_region` is always 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import Polynomial, RationalFunction, exact_div, poly_gcd
from .errors import NotMonic, TopologyUnsupported, WrongDegree, ZeroPolynomial
from .regions import Region
from .roots import (
    IntervalQ,
    RootRecord,
    Verdict,
    certify_sign,
    isolate_roots,
    refine_root_interval,
    refine_to_width,
    sharpen_rational_roots,
    sign_at,
    squarefree_part,
    sturm_count,
)

__all__ = [
    "CurveTopologyReport",
    "analyze_quadratic_curve",
    "analyze_radial",
    "analyze_zero_set",
    "analyze_radial_zero_set",
    "region_ell",
]


def _isolate_polished(p: Polynomial, interval: IntervalQ) -> list:
    """Root isolation plus presentation polish: rational roots become exact
    points, irrational ones get intervals narrow enough to quote."""
    recs = list(isolate_roots(p, interval))
    if recs:
        sharpen_rational_roots(p, recs)
        sf = squarefree_part(p)
        for rec in recs:
            refine_to_width(sf, rec, Fraction(1, 64))
    return recs


@dataclass
class CurveTopologyReport:
    curve_class: str
    supported: bool = True
    bounded_components: int = 0
    smooth_ovals: int = 0
    isolated_points: int = 0
    pinched_components: int = 0
    unbounded_components: int = 0
    boundary_contact: bool = False
    singular_points: list = field(default_factory=list)
    ell_region: int = 0
    component_notes: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ell_curve(self) -> int:
        """Holes the zero set cuts into the region: one per bounded
        component (see the module docstring for why none can nest)."""
        return self.bounded_components

    def narrative(self) -> str:
        if not self.supported:
            reason = self.details.get("reason", "unsupported shape")
            return f"zero-set structure not analyzed ({reason})"
        if not self.component_notes:
            return "the zero set is empty in the region"
        return "; ".join(self.component_notes)

    def as_dict(self) -> dict:
        return {
            "curve_class": self.curve_class,
            "supported": self.supported,
            "bounded_components": self.bounded_components,
            "smooth_ovals": self.smooth_ovals,
            "isolated_points": self.isolated_points,
            "pinched_components": self.pinched_components,
            "unbounded_components": self.unbounded_components,
            "boundary_contact": self.boundary_contact,
            "singular_points": [iv.render() for iv in self.singular_points],
            "ell_region": self.ell_region,
            "ell_curve": self.ell_curve,
            "narrative": self.narrative(),
        }


def _unsupported(reason: str) -> CurveTopologyReport:
    return CurveTopologyReport("unsupported", supported=False,
                               details={"reason": reason})


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


# ------------------------------------------------------- exact root ordering


def _root_vs_value(sf: Polynomial, rec: RootRecord, m: Fraction) -> int:
    """Position of the root isolated by rec relative to the rational m."""
    while True:
        if rec.exact_value is not None:
            return _sgn(rec.exact_value - m)
        u, v = rec.interval.lo, rec.interval.hi
        if v <= m:
            return -1
        if u >= m:
            return 1
        if sign_at(sf, m) == 0:
            return 0  # m lies in the isolating interval and is a root
        refine_root_interval(sf, rec)


def _compare_roots(sf_a: Polynomial, rec_a: RootRecord,
                   sf_b: Polynomial, rec_b: RootRecord) -> int:
    """Order two isolated roots of (possibly different) polynomials."""
    if rec_a.exact_value is not None:
        return -_root_vs_value(sf_b, rec_b, rec_a.exact_value)
    if rec_b.exact_value is not None:
        return _root_vs_value(sf_a, rec_a, rec_b.exact_value)
    common = poly_gcd(sf_a, sf_b)
    while True:
        ia, ib = rec_a.interval, rec_b.interval
        if ia.hi <= ib.lo:
            return -1
        if ib.hi <= ia.lo:
            return 1
        if not common.is_constant:
            overlap = IntervalQ(max(ia.lo, ib.lo), min(ia.hi, ib.hi))
            if not overlap.is_empty and sturm_count(common, overlap) > 0:
                return 0
        refine_root_interval(sf_a, rec_a)
        refine_root_interval(sf_b, rec_b)
        if rec_a.exact_value is not None or rec_b.exact_value is not None:
            return _compare_roots(sf_a, rec_a, sf_b, rec_b)


# ------------------------------------------------------------ radial profile


def radial_profile(core: Polynomial) -> Optional[Polynomial]:
    """If core(x, y) == h(x^2 + y^2) for a one-variable h, return h (in the
    variable 'u'); otherwise None.  The identity is verified exactly."""
    if not core.vars:
        return Polynomial.constant(core.terms.get((), Fraction(0)))
    if any(v not in ("x", "y") for v in core.vars):
        return None
    for e in core.terms:
        if any(k % 2 for k in e):
            return None
    on_axis = core.substitute({"y": Polynomial.zero()}) \
        if "y" in core.vars else core
    _, coeffs = on_axis.univariate()
    h = Polynomial(("u",), {(k // 2,): c for k, c in enumerate(coeffs)
                            if k % 2 == 0 and c})
    x = Polynomial.variable("x")
    y = Polynomial.variable("y")
    if h.substitute({"u": x * x + y * y}) == core:
        return h
    return None


def _exact_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def _circle_phrase(rec: RootRecord, *, var_is_radius: bool) -> str:
    if rec.exact_value is not None:
        if var_is_radius:
            return _named_circle(rec.exact_value)
        r = _exact_sqrt(rec.exact_value)
        if r is not None:
            return _named_circle(r)
        return f"the circle of radius ~{math.sqrt(float(rec.exact_value)):.4g}"
    mid = rec.approximate()
    rho = mid if var_is_radius else math.sqrt(max(mid, 0.0))
    return f"the circle of radius ~{rho:.4g}"


def _named_circle(rho: Fraction) -> str:
    if rho == 1:
        return "the unit circle"
    return f"the circle of radius {rho}"


def analyze_radial_zero_set(h: Polynomial, *, var_is_radius: bool,
                            region: Region = None) -> CurveTopologyReport:
    """Zero set of h(x^2+y^2) (var_is_radius=False, h in 'u') or of a radial
    profile h(r), r >= 0 (var_is_radius=True): circles centered at the
    origin plus possibly the origin itself."""
    region = region or Region.plane()
    if h.is_zero:
        raise ZeroPolynomial("radial profile is identically zero")
    rep = CurveTopologyReport("radial")
    if h.is_constant:
        rep.curve_class = "empty"
        return rep

    if region.kind == "quadrant":
        # circles meet an open quadrant in arcs: nothing closed survives
        if sturm_count(h, IntervalQ.ray_above(0, open_end=False)):
            rep.boundary_contact = True
            rep.component_notes.append(
                "circular arcs cross the quadrant (touch its boundary)")
        return rep

    margin = None  # strict containment threshold for strips
    if region.kind == "strip":
        ext = region.x_extent()
        if not ext.contains(0):
            return _unsupported("radial zero set in a strip away from 0")
        candidates = []
        if ext.lo is not None:
            candidates.append(-ext.lo)
        if ext.hi is not None:
            candidates.append(ext.hi)
        if candidates:
            margin = min(candidates)

    recs = _isolate_polished(h, IntervalQ.ray_above(0, open_end=False))
    sf = squarefree_part(h)
    for rec in recs:
        if rec.exact_value == 0 or (rec.exact_value is None
                                    and rec.interval.contains(0)):
            rep.isolated_points += 1
            rep.bounded_components += 1
            rep.component_notes.append("an isolated point at the origin")
            rep.details.setdefault("origin_point", True)
            continue
        if margin is not None:
            threshold = margin if var_is_radius else margin * margin
            pos = _root_vs_value(sf, rec, threshold)
            if pos >= 0:
                rep.boundary_contact = True
                rep.component_notes.append(
                    _circle_phrase(rec, var_is_radius=var_is_radius)
                    + " reaches the region boundary")
                continue
        phrase = _circle_phrase(rec, var_is_radius=var_is_radius)
        rep.smooth_ovals += 1
        rep.bounded_components += 1
        rep.component_notes.append(phrase)
        rep.details.setdefault("circles", []).append(phrase)
    return rep


# -------------------------------------------------- curves quadratic in y/x


def _pad3(coeffs: list) -> list:
    out = list(coeffs)
    while len(out) < 3:
        out.append(Polynomial.zero())
    return out


def _gap_samples(recs: list) -> list:
    """Rational sample points between consecutive isolating intervals,
    plus one below the first root and one above the last."""
    pts = [recs[0].interval.lo - 1]
    for a, b in zip(recs, recs[1:]):
        pts.append((a.interval.hi + b.interval.lo) / 2)
    pts.append(recs[-1].interval.hi + 1)
    return pts


def _approx(rec: RootRecord) -> str:
    if rec.exact_value is not None:
        return str(rec.exact_value)
    return f"~{rec.approximate():.4g}"


def _analyze_main_quadratic(core: Polynomial, main: str, cross: str,
                            region: Region) -> CurveTopologyReport:
    """Curve a(t) m^2 + b(t) m + c(t) = 0, quadratic in `main` (m) with
    coefficients in `cross` (t), classified via its discriminant."""
    if region.kind == "quadrant":
        return _unsupported("curve quadratic in one variable on a quadrant")
    if main == "y":
        extent = region.x_extent()
    else:
        extent = region.y_extent()
        if region.kind == "strip":
            # bands would live over y-intervals while the strip cuts x
            return _unsupported("curve quadratic in x inside a vertical strip")

    c0, c1, c2 = _pad3(core.coefficients_in(main))
    delta = c1 * c1 - 4 * c2 * c0
    rep = CurveTopologyReport(f"quadratic_in_{main}")
    rep.details["discriminant"] = delta.render()
    in_strip = region.kind == "strip"

    axis_word = "x" if main == "y" else "y"

    lead_recs = []
    sf_lead = None
    if not c2.is_constant:
        lead_recs = _isolate_polished(c2, IntervalQ.whole_line())
        sf_lead = squarefree_part(c2)
    # a lead with no real zero never lets a branch escape to infinity in the
    # middle of a band, so it is as harmless as a constant lead
    lead_clear = not lead_recs

    def graphs(count: int) -> CurveTopologyReport:
        word = "one graph branch" if count == 1 else f"{count} graph branches"
        if in_strip:
            rep.boundary_contact = True
            rep.component_notes.append(f"{word} crossing the strip")
        else:
            rep.unbounded_components += count
            rep.component_notes.append(
                f"{word} over the whole {axis_word}-axis")
        return rep

    if delta.is_zero:
        if lead_clear:
            rep.curve_class = "double_graph"
            return graphs(1)
        return _unsupported("degenerate discriminant with vanishing lead")

    if delta.is_constant or sturm_count(delta, IntervalQ.whole_line()) == 0:
        sgn = _sgn(delta.evaluate({cross: 0}) if not delta.is_constant
                   else delta.constant_value())
        if sgn < 0:
            rep.curve_class = "empty"
            return rep
        if not lead_clear:
            return _unsupported("unbounded branches with vanishing lead")
        return graphs(2)

    recs = _isolate_polished(delta, IntervalQ.whole_line())
    if any(r.multiplicity > 2 for r in recs):
        return _unsupported("discriminant root of multiplicity three or more")
    sf_delta = squarefree_part(delta)

    samples = _gap_samples(recs)
    gap_signs = [sign_at(delta, s) for s in samples]

    # assemble maximal runs where delta >= 0
    runs = []  # (start_idx or None, end_idx or None, interior_pinches)
    i = 0
    k = len(recs)
    while i <= k:
        if gap_signs[i] > 0:
            j = i
            while j < k and gap_signs[j + 1] > 0:
                j += 1
            start = i - 1 if i > 0 else None      # root index bounding below
            end = j if j < k else None            # root index bounding above
            pinches = list(range(i, j))           # roots joining positive gaps
            runs.append((start, end, pinches))
            i = j + 1
        else:
            # an isolated root squeezed between nonpositive gaps
            if i < k and gap_signs[i + 1] <= 0:
                runs.append((i, i, []))
            i += 1

    def lead_ok_on(lo_rec: RootRecord, hi_rec: RootRecord) -> bool:
        """Certify that the leading coefficient has no zero on the closed
        band [lo_rec's root, hi_rec's root]."""
        if c2.is_constant:
            return True
        for lr in lead_recs:
            left = _compare_roots(sf_lead, lr, sf_delta, lo_rec) < 0
            right = _compare_roots(sf_lead, lr, sf_delta, hi_rec) > 0
            if not (left or right):
                return False
        return True

    def against_strip(lo_rec, hi_rec) -> str:
        """'inside' | 'outside' | 'contact' for a run vs. the strip."""
        if not in_strip:
            return "inside"
        s_lo, s_hi = extent.lo, extent.hi
        # entirely outside: the run ends at/before the strip starts, or
        # starts at/after it ends (the open strip misses boundary points)
        if s_lo is not None and hi_rec is not None \
                and _root_vs_value(sf_delta, hi_rec, s_lo) <= 0:
            return "outside"
        if s_hi is not None and lo_rec is not None \
                and _root_vs_value(sf_delta, lo_rec, s_hi) >= 0:
            return "outside"
        lo_in = s_lo is None or (
            lo_rec is not None
            and _root_vs_value(sf_delta, lo_rec, s_lo) > 0)
        hi_in = s_hi is None or (
            hi_rec is not None
            and _root_vs_value(sf_delta, hi_rec, s_hi) < 0)
        return "inside" if (lo_in and hi_in) else "contact"

    for start, end, pinches in runs:
        lo_rec = recs[start] if start is not None else None
        hi_rec = recs[end] if end is not None else None
        single_point = (start is not None and start == end)

        placement = against_strip(lo_rec, hi_rec)
        if placement == "outside":
            continue
        if placement == "contact":
            rep.boundary_contact = True
            rep.component_notes.append(
                "a zero-set piece reaching the strip boundary")
            continue

        if single_point:
            rec = recs[start]
            if not lead_ok_on(rec, rec):
                return _unsupported(
                    "leading coefficient vanishes at a tangency point")
            rep.isolated_points += 1
            rep.bounded_components += 1
            rep.component_notes.append(_point_phrase(rec, c1, c2, main))
            continue

        if lo_rec is None or hi_rec is None:
            # unbounded run
            if not lead_clear:
                return _unsupported(
                    "unbounded branches with vanishing lead")
            rep.unbounded_components += 1
            if lo_rec is not None:
                note = (f"an unbounded branch for "
                        f"{axis_word} >= {_approx(lo_rec)}")
            elif hi_rec is not None:
                note = (f"an unbounded branch for "
                        f"{axis_word} <= {_approx(hi_rec)}")
            else:
                note = "an unbounded branch over the whole axis"
            rep.component_notes.append(note)
            continue

        if not lead_ok_on(lo_rec, hi_rec):
            return _unsupported("leading coefficient vanishes on a band")
        rep.bounded_components += 1
        if pinches:
            rep.pinched_components += 1
            rep.singular_points.extend(recs[p].interval for p in pinches)
            where = ", ".join(
                f"{axis_word} = {_approx(recs[p])}" for p in pinches)
            rep.component_notes.append(
                f"a closed chain over {axis_word} in "
                f"[{_approx(lo_rec)}, {_approx(hi_rec)}] pinched at {where}")
        else:
            rep.smooth_ovals += 1
            rep.component_notes.append(
                f"a smooth oval over {axis_word} in "
                f"[{_approx(lo_rec)}, {_approx(hi_rec)}]")
    return rep


def _point_phrase(rec: RootRecord, c1: Polynomial, c2: Polynomial,
                  main: str) -> str:
    cross_val = rec.exact_value
    if cross_val is not None:
        denom = 2 * (c2.evaluate({v: cross_val for v in c2.vars})
                     if not c2.is_constant else c2.constant_value())
        num = (c1.evaluate({v: cross_val for v in c1.vars})
               if not c1.is_constant else
               c1.terms.get((), Fraction(0)))
        m_val = -num / denom
        if main == "y":
            return f"an isolated point at ({cross_val}, {m_val})"
        return f"an isolated point at ({m_val}, {cross_val})"
    axis = "x" if main == "y" else "y"
    return f"an isolated point near {axis} = {_approx(rec)}"


# ---------------------------------------------------------------- dispatcher


def _min_exponents(p: Polynomial) -> dict:
    mins = None
    for e in p.terms:
        mins = e if mins is None else tuple(min(a, b) for a, b in zip(mins, e))
    return {v: m for v, m in zip(p.vars, mins or ()) if m}


def _line_components(rep: CurveTopologyReport, region: Region,
                     axis: str, values: list) -> None:
    """Account for axis-parallel lines axis=value (axis is 'x' or 'y')."""
    for val, label in values:
        if axis == "x":
            ext = region.x_extent()
            if val is not None and not ext.contains(val):
                continue
            rep.unbounded_components += 1
            rep.component_notes.append(f"the vertical line x = {label}")
        else:
            ext = region.y_extent()
            if val is not None and not ext.contains(val):
                continue
            if region.kind == "strip" and (region.x_lo is not None
                                           or region.x_hi is not None):
                rep.boundary_contact = True
                rep.component_notes.append(
                    f"the horizontal segment y = {label} across the strip")
                if region.x_lo is None or region.x_hi is None:
                    rep.unbounded_components += 1
            else:
                rep.unbounded_components += 1
                rep.component_notes.append(f"the horizontal line y = {label}")


def analyze_zero_set(V: Polynomial, region: Region) -> CurveTopologyReport:
    """Decompose {V = 0} within the region; see the module docstring for the
    counting conventions.  V must be a polynomial in x and y only."""
    if V.is_zero:
        raise ZeroPolynomial("the zero set of 0 is the whole plane")
    if any(v not in ("x", "y") for v in V.vars):
        raise TopologyUnsupported(
            f"zero-set analysis expects variables x, y; got {V.vars}")

    rep = CurveTopologyReport("thin_lines")
    core = V

    # monomial content: coordinate axes
    mono = _min_exponents(core)
    if mono:
        for v in mono:
            core = exact_div(core, Polynomial.variable(v) ** mono[v])
        if "x" in mono:
            _line_components(rep, region, "x", [(Fraction(0), "0")])
        if "y" in mono:
            _line_components(rep, region, "y", [(Fraction(0), "0")])

    # polynomial content in y: vertical lines
    if "y" in core.vars:
        cont = Polynomial.zero()
        for layer in core.coefficients_in("y"):
            cont = poly_gcd(cont, layer)
        if not cont.is_constant:
            core = exact_div(core, cont)
            lines = []
            for rec in _isolate_polished(cont, region.x_extent()):
                lines.append((rec.exact_value, _approx(rec)))
            _line_components(rep, region, "x", lines)
    elif "x" in core.vars:
        # purely univariate in x: vertical lines and nothing else
        lines = [(rec.exact_value, _approx(rec))
                 for rec in _isolate_polished(core, region.x_extent())]
        _line_components(rep, region, "x", lines)
        core = Polynomial.constant(1)

    # polynomial content in x: horizontal lines
    if "x" in core.vars:
        cont = Polynomial.zero()
        for layer in core.coefficients_in("x"):
            cont = poly_gcd(cont, layer)
        if not cont.is_constant:
            core = exact_div(core, cont)
            lines = [(rec.exact_value, _approx(rec))
                     for rec in _isolate_polished(cont, region.y_extent())]
            _line_components(rep, region, "y", lines)
    elif "y" in core.vars:
        lines = [(rec.exact_value, _approx(rec))
                 for rec in _isolate_polished(core, region.y_extent())]
        _line_components(rep, region, "y", lines)
        core = Polynomial.constant(1)

    if core.is_constant:
        if not rep.component_notes:
            rep.curve_class = "empty"
        return rep

    h = radial_profile(core)
    if h is not None and not h.is_constant:
        sub = analyze_radial_zero_set(h, var_is_radius=False, region=region)
        return _merge_thin(rep, sub, "radial")

    if core.degree_in("y") == 2:
        sub = _analyze_main_quadratic(core, "y", "x", region)
        return _merge_thin(rep, sub, sub.curve_class)
    if core.degree_in("x") == 2:
        sub = _analyze_main_quadratic(core, "x", "y", region)
        return _merge_thin(rep, sub, sub.curve_class)
    if core.degree_in("y") == 1:
        c0, c1 = core.coefficients_in("y")
        if c1.is_constant:
            sub = CurveTopologyReport("graph")
            if region.kind == "strip" and (region.x_lo is not None
                                           and region.x_hi is not None):
                sub.boundary_contact = True
                sub.component_notes.append("a graph branch crossing the strip")
            else:
                sub.unbounded_components += 1
                sub.component_notes.append(
                    "an unbounded graph branch y = f(x)")
            return _merge_thin(rep, sub, "graph")
        return _unsupported("graph with nonconstant leading coefficient")

    return _unsupported(
        f"zero set of degree {core.total_degree()} outside the supported shapes")


def _merge_thin(lines_rep: CurveTopologyReport, sub: CurveTopologyReport,
                curve_class: str) -> CurveTopologyReport:
    if not sub.supported:
        return sub
    sub.curve_class = curve_class if not lines_rep.component_notes \
        else f"{curve_class}+lines"
    sub.bounded_components += lines_rep.bounded_components
    sub.unbounded_components += lines_rep.unbounded_components
    sub.boundary_contact = sub.boundary_contact or lines_rep.boundary_contact
    sub.component_notes = lines_rep.component_notes + sub.component_notes
    return sub


# ---------------------------------------------------------------- public ops


def region_ell(region: Region) -> int:
    """Holes of the region itself.  Planes, strips, and open quadrants are
    all simply connected, so this is always 0."""
    return 0


def analyze_quadratic_curve(V, region: Region = None) -> CurveTopologyReport:
    """Classify {V = 0} for a curve quadratic in y, via its discriminant.

    V may be a Polynomial or a RationalFunction whose denominator is free of
    y and provably nonvanishing over the region's x-extent (the zero set is
    then that of the numerator).  The leading y^2 coefficient must be 1,
    a positive constant, or certified strictly positive over the x-extent;
    raises NotMonic otherwise, and WrongDegree unless the degree in y is 2.

    Unlike the general dispatcher, this always runs the discriminant-based
    analysis, even for curves that happen to be radial.
    """
    region = region or Region.plane()
    if isinstance(V, RationalFunction):
        if V.is_polynomial:
            return analyze_quadratic_curve(V.num, region)
        if "y" in V.den.vars:
            raise WrongDegree(
                "denominator must not involve y: " + V.den.render())
        den_cert = certify_sign(V.den, region.x_extent(), mode="strict")
        if not den_cert.verdict.is_strict:
            raise TopologyUnsupported(
                "denominator could vanish on the region: " + V.den.render())
        return analyze_quadratic_curve(V.num, region)
    if not isinstance(V, Polynomial):
        raise TypeError(f"cannot analyze a {type(V).__name__}")
    if V.is_zero:
        raise ZeroPolynomial("the zero set of 0 is the whole plane")
    if any(v not in ("x", "y") for v in V.vars):
        raise TopologyUnsupported(
            f"zero-set analysis expects variables x, y; got {V.vars}")
    if V.degree_in("y") != 2:
        raise WrongDegree(
            f"need degree 2 in y, got {V.degree_in('y')}: {V.render()}")

    lead = V.coefficients_in("y")[2]
    if lead.is_constant:
        if lead.constant_value() <= 0:
            raise NotMonic(
                f"leading y^2 coefficient {lead.render()} is not positive")
    else:
        cert = certify_sign(lead, region.x_extent(), mode="strict")
        if cert.verdict is not Verdict.STRICTLY_POSITIVE:
            raise NotMonic(
                "leading y^2 coefficient not certified strictly positive: "
                + lead.render())

    rep = _analyze_main_quadratic(V, "y", "x", region)
    if rep.supported:
        rep.curve_class = "quadratic_in_y"
    return rep


def analyze_radial(w: Polynomial, region: Region = None) -> CurveTopologyReport:
    """Classify the zero set of a radial profile w(r), r >= 0: circles
    centered at the origin, plus the origin itself when w(0) = 0.  The
    hole count equals the number of distinct nonnegative roots of w."""
    if w.is_zero:
        raise ZeroPolynomial("radial profile is identically zero")
    rep = analyze_radial_zero_set(w, var_is_radius=True,
                                  region=region or Region.plane())
    if rep.supported:
        rep.curve_class = "radial"
    return rep
