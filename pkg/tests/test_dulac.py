"""Tests for the Dulac-companion engine: M_s computation, two-variable sign
certification, and end-to-end direct certificates."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclecert.algebra import Polynomial, RationalFunction
from cyclecert.dulac import (
    DulacCandidate,
    TwoVariableSignEvidence,
    certify_direct,
    certify_two_variable_sign,
    compute_div_dx,
    compute_ms,
)
from cyclecert.errors import UnboundParameter, UnsupportedShape, ZeroPolynomial
from cyclecert.regions import Region
from cyclecert.roots import SignCertificate, Verdict
from cyclecert.systems import SystemDef

X = Polynomial.variable("x")
Y = Polynomial.variable("y")
B = Polynomial.variable("b")

PLANE = Region.plane()


def rf(p) -> RationalFunction:
    return RationalFunction(p, 1)


def van_der_pol() -> SystemDef:
    eps = Polynomial.variable("eps")
    return SystemDef(P=Y, Q=-eps * (X * X - 1) * Y - X, params={"eps": 1})


def vdp_candidate() -> DulacCandidate:
    return DulacCandidate(X * X + Y * Y - 1, Fraction(-2))


def cubic_lienard_family() -> SystemDef:
    # x' = y, y' = -x + (b^2 - x^2) y, with b left symbolic
    return SystemDef(P=Y, Q=-X + (B * B - X * X) * Y)


def quintic_family() -> SystemDef:
    # x' = y, y' = -x + (b^2 - x^2)(y + y^3), with b left symbolic
    return SystemDef(P=Y, Q=-X + (B * B - X * X) * (Y + Y ** 3))


# ---------------------------------------------------------------------------
# compute_ms / compute_div_dx goldens
# ---------------------------------------------------------------------------


class TestComputeMs:
    def test_van_der_pol_companion(self):
        m = compute_ms(van_der_pol(), vdp_candidate())
        assert m == rf(2 * X ** 4 - 4 * X ** 2 + 2)
        assert m.render() == "2*x^4 - 4*x^2 + 2"

    def test_rotation_vanishes_for_every_exponent(self):
        rot = SystemDef(P=-Y, Q=X)
        for s in (Fraction(0), Fraction(-2), Fraction(3, 7)):
            m = compute_ms(rot, DulacCandidate(X * X + Y * Y - 1, s))
            assert m.num.is_zero

    def test_symbolic_parameter_survives(self):
        # params leave b free: the companion function stays symbolic in b
        sys = cubic_lienard_family()
        v = 6 * Y * Y + 2 * (X * X - 3 * B * B) * X * Y + 6 * X * X \
            + B * B * (3 * B * B - 4)
        m = compute_ms(sys, DulacCandidate(v, Fraction(-1)))
        expected = 4 * X ** 4 + B * B * (3 * B * B - 4) * (X * X - B * B)
        assert m.as_polynomial() == expected

    def test_cubic_candidate_symbolic_and_specialised(self):
        sys = quintic_family()
        v = ((2 * X ** 3 + 6 * B * B * (1 - B * B) * X) * Y ** 3
             + 6 * (1 - B * B) * Y * Y
             + 2 * (X * X - 3 * B * B) * X * Y
             + 6 * (1 - B * B) * X * X
             + B * B * (3 * B * B - 4))
        m = compute_ms(sys, DulacCandidate(v, Fraction(-1)))
        expected = (6 * ((2 - 3 * B * B) * X ** 4 * Y ** 2
                         - 2 * B * B * (2 - B * B) * X ** 3 * Y ** 3
                         + (2 - B * B) * X ** 2 * Y ** 4)
                    + 2 * (2 - 3 * B * B) * X ** 4
                    - 3 * B * B * (14 - 15 * B * B) * X * X * Y * Y
                    + 12 * B ** 4 * (2 - B * B) * X * Y ** 3
                    - B * B * (4 - 9 * B * B) * X * X
                    + 3 * B ** 4 * (2 - 3 * B * B) * Y * Y
                    + B ** 4 * (4 - 3 * B * B))
        assert m.as_polynomial() == expected
        # b = 1 collapses most coefficients
        assert m.substitute({"b": Fraction(1)}).render() == (
            "-6*x^4*y^2 - 12*x^3*y^3 + 6*x^2*y^4 - 2*x^4 + 3*x^2*y^2"
            " + 12*x*y^3 + 5*x^2 - 3*y^2 + 1")
        # and an off-centre rational value matches the coefficient formula
        assert (m.substitute({"b": Fraction(3, 5)}).as_polynomial()
                == expected.substitute({"b": Fraction(3, 5)}))

    def test_rational_candidate(self):
        f = RationalFunction(X * (1 - X * X), 1 + X * X)
        sys = SystemDef(P=rf(Y) - f, Q=-X)
        v = rf(Y) ** 2 - f * rf(Y) + rf(X * X)
        m = compute_ms(sys, DulacCandidate(v, Fraction(-1)))
        assert m.render() == "(-4*x^4)/(x^4 + 2*x^2 + 1)"

    def test_zero_candidate_rejected(self):
        with pytest.raises(ZeroPolynomial):
            DulacCandidate(Polynomial.zero(), Fraction(-1))


class TestComputeDivDx:
    def setup_method(self):
        self.sys = SystemDef(P=X * (X + 2 * Y + 1), Q=Y * (3 * X + 4 * Y + 1))

    def test_unit_weight_gives_plain_divergence(self):
        d = compute_div_dx(self.sys, rf(Polynomial.constant(1)))
        assert d.render() == "5*x + 10*y + 2"

    def test_monomial_weight(self):
        d = compute_div_dx(self.sys, RationalFunction(1, X ** 5))
        assert d.render() == "(-3)/(x^5)"

    def test_weight_equal_to_candidate_matches_exponent_one(self):
        v = X * X + Y * Y - 1
        assert (compute_div_dx(self.sys, rf(v))
                == compute_ms(self.sys, DulacCandidate(v, Fraction(1))))


# ---------------------------------------------------------------------------
# algebraic identities of the companion function
# ---------------------------------------------------------------------------


def small_polys(max_terms=4):
    monos = st.tuples(st.integers(0, 2), st.integers(0, 2))
    coef = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    term = st.tuples(monos, coef)
    return st.lists(term, min_size=0, max_size=max_terms).map(
        lambda items: sum(
            (c * X ** i * Y ** j for (i, j), c in items),
            Polynomial.zero()))


@settings(max_examples=40, deadline=None)
@given(v1=small_polys(), v2=small_polys(),
       s=st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_additive_in_candidate(v1, v2, s):
    sys = van_der_pol()
    if v1.is_zero or v2.is_zero or (v1 + v2).is_zero:
        return
    total = compute_ms(sys, DulacCandidate(v1 + v2, s))
    parts = (compute_ms(sys, DulacCandidate(v1, s))
             + compute_ms(sys, DulacCandidate(v2, s)))
    assert total == parts


@settings(max_examples=40, deadline=None)
@given(v=small_polys(),
       s1=st.fractions(min_value=-3, max_value=3, max_denominator=4),
       s2=st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_exponent_difference_is_divergence_times_candidate(v, s1, s2):
    sys = van_der_pol()
    if v.is_zero:
        return
    p, q = sys.bound_field()
    div = p.differentiate("x") + q.differentiate("y")
    lhs = (compute_ms(sys, DulacCandidate(v, s1))
           - compute_ms(sys, DulacCandidate(v, s2)))
    assert lhs == (s1 - s2) * div * rf(v)


@settings(max_examples=40, deadline=None)
@given(v=small_polys())
def test_exponent_zero_is_derivative_along_the_field(v):
    sys = van_der_pol()
    if v.is_zero:
        return
    p, q = sys.bound_field()
    along = rf(v.differentiate("x")) * p + rf(v.differentiate("y")) * q
    assert compute_ms(sys, DulacCandidate(v, Fraction(0))) == along


def test_numeric_consistency_with_scaled_divergence():
    # div(|V|^(1/s) X) and sign(V) (1/s) |V|^(1/s-1) M_s agree numerically:
    # the left side is assembled from gradients and plain divergence, the
    # right side goes through compute_ms.
    import random

    sys = van_der_pol()
    v = X * X + Y * Y - 1
    s = Fraction(-2)
    m = compute_ms(sys, DulacCandidate(v, s))
    p, q = sys.bound_field()
    vx, vy = v.differentiate("x"), v.differentiate("y")
    div = p.differentiate("x") + q.differentiate("y")

    rng = random.Random(20240811)
    checked = 0
    while checked < 100:
        pt = {"x": Fraction(rng.randint(-48, 48), 16),
              "y": Fraction(rng.randint(-48, 48), 16)}
        val_v = v.evaluate(pt)
        if abs(val_v) < Fraction(1, 100):
            continue
        sgn = 1 if val_v > 0 else -1
        absv = float(abs(val_v))
        expo = float(1 / s)
        lhs = ((1 / float(s)) * absv ** (expo - 1) * sgn
               * float((rf(vx) * p + rf(vy) * q).evaluate(pt))
               + absv ** expo * float(div.evaluate(pt)))
        rhs = sgn * (1 / float(s)) * absv ** (expo - 1) * float(m.evaluate(pt))
        scale = max(abs(lhs), abs(rhs), 1e-30)
        assert abs(lhs - rhs) <= 1e-9 * scale
        checked += 1


# ---------------------------------------------------------------------------
# two-variable sign certification
# ---------------------------------------------------------------------------


class TestTwoVariableSign:
    def test_even_y_groups_on_the_plane(self):
        m = rf(2 * (1 + 2 * X * X) * X * X * Y * Y)
        ev = certify_two_variable_sign(m, PLANE)
        assert isinstance(ev, TwoVariableSignEvidence)
        assert ev.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
        assert ev.strategy == "y-groups"
        assert ev.zero_set_acceptable
        assert ev.zero_set == ("contained in the line y = 0 and zeros of "
                               "4*x^4 + 2*x^2 as vertical lines")

    def test_even_x_groups_used_when_y_powers_are_odd(self):
        # x^2 (y^6 + y^3 + 1): odd y-powers block the y-grouping, but the
        # x-grouping sees a single strictly positive univariate factor.
        m = rf(X * X * (Y ** 6 + Y ** 3 + 1))
        ev = certify_two_variable_sign(m, PLANE)
        assert ev.strategy == "x-groups"
        assert ev.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
        assert ev.zero_set_acceptable

    def test_radial_profile_with_ring_is_unacceptable(self):
        m = rf((X * X + Y * Y - 1) ** 2)
        ev = certify_two_variable_sign(m, PLANE)
        assert ev.strategy == "radial"
        assert ev.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
        assert not ev.zero_set_acceptable
        assert "circle" in ev.zero_set

    def test_radial_profile_vanishing_only_at_origin(self):
        m = rf((X * X + Y * Y) ** 2 + 3 * (X * X + Y * Y))
        ev = certify_two_variable_sign(m, PLANE)
        assert ev.strategy == "radial"
        assert ev.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
        assert ev.zero_set_acceptable
        assert ev.zero_set == "the origin"

    def test_quadrant_makes_even_groups_strict(self):
        m = rf(X * X * Y * Y)
        on_plane = certify_two_variable_sign(m, PLANE)
        assert on_plane.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
        on_quadrant = certify_two_variable_sign(m, Region.quadrant(1, 1))
        assert on_quadrant.verdict is Verdict.STRICTLY_POSITIVE

    def test_sign_changing_factor_is_indeterminate(self):
        ev = certify_two_variable_sign(rf(X * Y * Y), PLANE)
        assert ev.verdict is Verdict.INDETERMINATE

    def test_univariate_falls_back_to_interval_certificate(self):
        cert = certify_two_variable_sign(rf(X * X + 1), PLANE)
        assert isinstance(cert, SignCertificate)
        assert cert.verdict is Verdict.STRICTLY_POSITIVE

    def test_rational_split_requires_strict_denominator(self):
        m = RationalFunction(X * X * Y * Y, 1 + X * X)
        ev = certify_two_variable_sign(m, PLANE)
        assert ev.strategy == "split"
        assert ev.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
        assert ev.zero_set_acceptable

    def test_zero_function_is_indeterminate(self):
        ev = certify_two_variable_sign(rf(Polynomial.zero()), PLANE)
        assert ev.verdict is Verdict.INDETERMINATE
        assert ev.strategy == "zero"

    def test_unsupported_shape_raises(self):
        with pytest.raises(UnsupportedShape):
            certify_two_variable_sign(rf(X ** 3 * Y ** 3 + X), PLANE)

    def test_evidence_serialises(self):
        ev = certify_two_variable_sign(rf(X * X * Y * Y), PLANE)
        json.dumps(ev.as_dict())


# ---------------------------------------------------------------------------
# end-to-end direct certificates
# ---------------------------------------------------------------------------


class TestCertifyDirect:
    def test_van_der_pol(self):
        cert = certify_direct(van_der_pol(), vdp_candidate())
        assert cert.certified
        assert cert.bound == 1
        assert cert.bound_kind == "AtMost"
        assert cert.cycles_in_curve == 0
        assert cert.sign.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
        assert cert.topology.smooth_ovals == 1
        assert cert.topology.ell_curve == 1
        assert cert.stability_note == ("each limit cycle lies outside the "
                                       "unit circle; it is hyperbolic and "
                                       "stable")
        assert any("total 1" in n for n in cert.notes)
        json.dumps(cert.as_dict())

    def test_cubic_lienard_at_unit_parameter(self):
        sys = cubic_lienard_family().with_params(b=1)
        v = (6 * Y * Y + 2 * (X * X - 3 * B * B) * X * Y + 6 * X * X
             + B * B * (3 * B * B - 4)).substitute({"b": Fraction(1)})
        cert = certify_direct(sys, DulacCandidate(v, Fraction(-1)))
        assert cert.certified
        assert cert.m_s == rf(4 * X ** 4 - X ** 2 + 1)
        assert cert.sign.verdict is Verdict.STRICTLY_POSITIVE
        assert cert.bound == 1
        assert cert.bound_kind == "AtMost"
        assert cert.topology.smooth_ovals == 1
        assert cert.topology.unbounded_components == 2
        assert cert.stability_note == ("each limit cycle is hyperbolic: "
                                       "stable where V > 0, unstable where "
                                       "V < 0")

    def test_rational_candidate_bounds_one_cycle(self):
        f = RationalFunction(X * (1 - X * X), 1 + X * X)
        sys = SystemDef(P=rf(Y) - f, Q=-X)
        v = rf(Y) ** 2 - f * rf(Y) + rf(X * X)
        cert = certify_direct(sys, DulacCandidate(v, Fraction(-1)))
        assert cert.certified
        assert cert.bound == 1
        assert cert.bound_kind == "AtMost"
        assert cert.sign.verdict is Verdict.NONPOSITIVE_ZERO_MEASURE
        assert cert.topology.isolated_points == 1
        assert "an isolated point at (0, 0)" in cert.topology.component_notes
        assert cert.stability_note == ("each limit cycle is hyperbolic and "
                                       "unstable (the divergence of the "
                                       "scaled field is positive off the "
                                       "curve)")

    def test_identically_zero_companion_is_inconclusive(self):
        rot = SystemDef(P=-Y, Q=X)
        cert = certify_direct(
            rot, DulacCandidate(X * X + Y * Y - 1, Fraction(0)))
        assert not cert.certified
        assert cert.bound is None
        assert cert.bound_kind is None
        assert any("indeterminate" in n for n in cert.notes)

    def test_circle_in_zero_set_is_inconclusive(self):
        # x' = x, y' = y with V = x^2 + y^2 - 1 and s = 1 gives
        # M = 2(x^2 + y^2) + 2(x^2 + y^2 - 1): nonnegative, but it vanishes
        # on a circle, which the conservative zero-set rule rejects.
        sys = SystemDef(P=X, Q=Y)
        cert = certify_direct(
            sys, DulacCandidate(X * X + Y * Y - Fraction(1, 2), Fraction(1)))
        assert cert.m_s == rf(4 * (X * X + Y * Y) - 1)
        assert not cert.certified
        assert cert.bound is None

    def test_positive_exponent_claims_zero_cycles(self):
        # x' = -x, y' = -y with V = 1 + x^2 + y^2, s = 1:
        # M = -2x^2 - 2y^2 - 2(1 + x^2 + y^2) is strictly negative, and
        # s > 0 in a simply connected region certifies zero cycles.
        sys = SystemDef(P=-X, Q=-Y)
        cert = certify_direct(
            sys, DulacCandidate(1 + X * X + Y * Y, Fraction(1)))
        assert cert.certified
        assert cert.bound == 0
        assert cert.bound_kind == "NoCycles"

    def test_unbound_parameter_rejected(self):
        sys = SystemDef(P=Y, Q=-X + (B * B - X * X) * Y)  # b never bound
        with pytest.raises(UnboundParameter):
            certify_direct(sys, DulacCandidate(X * X + Y * Y, Fraction(-1)))

    def test_loose_symbol_in_candidate_rejected(self):
        with pytest.raises(UnboundParameter):
            certify_direct(van_der_pol(),
                           DulacCandidate(X * X + B * Y * Y, Fraction(-1)))


@settings(max_examples=40, deadline=None)
@given(v=small_polys(max_terms=3),
       s=st.sampled_from([Fraction(-2), Fraction(-1), Fraction(1)]))
def test_no_bound_without_conclusive_evidence(v, s):
    # Soundness: whenever a bound is issued, the sign verdict is conclusive,
    # the zero set passed the conservative rule, and the topology report is
    # supported.
    if v.is_zero:
        return
    try:
        cert = certify_direct(van_der_pol(), DulacCandidate(v, s))
    except (UnsupportedShape, ZeroPolynomial):
        return
    if cert.bound is None:
        return
    assert cert.sign.verdict.is_conclusive
    if isinstance(cert.sign, TwoVariableSignEvidence):
        assert cert.sign.zero_set_acceptable
    assert cert.topology.supported
    assert not cert.topology.boundary_contact
