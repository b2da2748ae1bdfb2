"""Sturm counting, isolation, squarefree structure, sign certificates."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cyclecert.algebra import Polynomial, RationalFunction
from cyclecert.errors import UnboundParameter, WrongDegree, ZeroPolynomial
from cyclecert.roots import (
    IntervalQ,
    Verdict,
    certify_sign,
    discriminant_y,
    isolate_roots,
    sign_at,
    sturm_count,
    yun_squarefree,
)

x = Polynomial.variable("x")


def poly_from_roots(roots_with_mult, lead=1, spice=None):
    """Build lead * prod (x - r)^m * (x^2 + spice) with known real roots."""
    p = Polynomial.constant(lead)
    for r, m in roots_with_mult:
        p = p * (x - F(r)) ** m
    if spice is not None:
        p = p * (x**2 + F(spice))
    return p


# ------------------------------------------------------------------- counting

def test_count_on_rays_and_line():
    r = Polynomial.variable("r")
    p = r**2 * (2 * r**2 - 3)
    assert sturm_count(p, IntervalQ.ray_above(0, open_end=False)) == 2
    assert sturm_count(p, IntervalQ.ray_above(0)) == 1
    assert sturm_count(p, IntervalQ.whole_line()) == 3
    assert sturm_count(p, IntervalQ.ray_below(0, open_end=False)) == 2


def test_count_respects_endpoint_openness():
    p = (x - 1) * (x + 1)
    assert sturm_count(p, IntervalQ.closed(-1, 1)) == 2
    assert sturm_count(p, IntervalQ.open(-1, 1)) == 0
    assert sturm_count(p, IntervalQ(F(-1), F(1), False, True)) == 1
    assert sturm_count(p, IntervalQ.point(1)) == 1
    assert sturm_count(p, IntervalQ.point(0)) == 0


def test_count_no_real_roots():
    assert sturm_count(x**2 + 1, IntervalQ.whole_line()) == 0
    assert sturm_count(Polynomial.constant(5), IntervalQ.whole_line()) == 0


def test_count_zero_polynomial_raises():
    with pytest.raises(ZeroPolynomial):
        sturm_count(Polynomial.zero(), IntervalQ.whole_line())


def test_count_multiple_roots_counted_once():
    p = (x - 2) ** 4 * (x + 3)
    assert sturm_count(p, IntervalQ.whole_line()) == 2
    assert sturm_count(p, IntervalQ.closed(2, 2)) == 1


@settings(deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(-5, 5), st.integers(1, 3)),
        min_size=0, max_size=4, unique_by=lambda t: t[0],
    ),
    st.booleans(),
)
def test_count_matches_known_roots(roots, add_spice):
    p = poly_from_roots(roots, lead=3, spice=2 if add_spice else None)
    if p.is_constant:
        return
    assert sturm_count(p, IntervalQ.whole_line()) == len(roots)
    window = IntervalQ.closed(-2, 2)
    expect = sum(1 for r, _ in roots if -2 <= r <= 2)
    assert sturm_count(p, window) == expect


# ------------------------------------------------------------------ isolation

def test_isolation_structure_golden():
    # x^2 (x^4+x^2-6)(x^4+x^2-2) = x^2 (x^2-2)(x^2+3)(x^2-1)(x^2+2)
    delta = x**2 * (x**4 + x**2 - 6) * (x**4 + x**2 - 2)
    recs = isolate_roots(delta, IntervalQ.whole_line())
    assert len(recs) == 5
    mults = [r.multiplicity for r in recs]
    assert mults == [1, 1, 2, 1, 1]
    assert recs[2].exact_value == 0
    approx = [r.approximate() for r in recs]
    expected = [-(2**0.5), -1.0, 0.0, 1.0, 2**0.5]
    assert all(abs(a - e) < 0.3 for a, e in zip(approx, expected))


def test_isolation_intervals_are_closure_disjoint():
    p = (x - 1) * (x - F(101, 100)) * (x - F(102, 100))
    recs = isolate_roots(p, IntervalQ.whole_line())
    assert len(recs) == 3
    for a, b in zip(recs, recs[1:]):
        assert not a.interval.overlaps_closure(b.interval)


def test_isolation_respects_interval():
    p = (x + 1) * x * (x - 1)
    inside = isolate_roots(p, IntervalQ.ray_above(0, open_end=False))
    assert len(inside) == 2
    assert inside[0].exact_value == 0
    assert inside[1].interval.contains(1)
    strictly = isolate_roots(p, IntervalQ.ray_above(0))
    assert len(strictly) == 1
    assert strictly[0].interval.contains(1)
    assert not strictly[0].interval.contains(0)
    nothing = isolate_roots(x**2 + 1, IntervalQ.whole_line())
    assert len(nothing) == 0 and nothing.total_distinct == 0
    far = isolate_roots(p, IntervalQ.ray_above(50))
    assert len(far) == 0


def test_isolation_report_shape():
    p = (x + 1) * x * (x - 1)
    rep = isolate_roots(p)  # no interval: the whole line
    assert rep.total_distinct == 3 == len(rep)
    assert rep[0].interval.contains(-1)
    assert [rec.multiplicity for rec in rep] == [1, 1, 1]
    assert len(isolate_roots(Polynomial.constant(4))) == 0


@settings(deadline=None, max_examples=60)
@given(
    st.lists(
        st.tuples(st.fractions(min_value=-4, max_value=4, max_denominator=4),
                  st.integers(1, 3)),
        min_size=1, max_size=4, unique_by=lambda t: t[0],
    )
)
def test_isolation_finds_every_root_once(roots):
    p = poly_from_roots(roots, lead=-2)
    recs = isolate_roots(p, IntervalQ.whole_line())
    assert len(recs) == len(roots)
    for a, b in zip(recs, recs[1:]):
        assert not a.interval.overlaps_closure(b.interval)
    by_pos = sorted(roots)
    for rec, (root, mult) in zip(recs, by_pos):
        assert rec.interval.contains(F(root))
        assert rec.multiplicity == mult
        assert sturm_count(p, rec.interval.closure()) == 1


# ------------------------------------------------------------------ squarefree

def test_yun_decomposition():
    p = (x**2 + 1) * (x - 1) ** 2 * (x + 2) ** 3
    factors = yun_squarefree(p)
    assert [(f.render(), m) for f, m in factors] == [
        ("x^2 + 1", 1),
        ("x - 1", 2),
        ("x + 2", 3),
    ]


def test_yun_squarefree_input():
    p = 7 * (x**3 - x + 1)
    factors = yun_squarefree(p)
    assert len(factors) == 1
    f, m = factors[0]
    assert m == 1 and f.leading_coefficient() == 1


# ------------------------------------------------------------------ sign logic

def test_certify_strict_verdicts():
    assert certify_sign(-(x**2) - 1, IntervalQ.whole_line()).verdict \
        is Verdict.STRICTLY_NEGATIVE
    assert certify_sign(x**2 + F(1, 7), IntervalQ.whole_line()).verdict \
        is Verdict.STRICTLY_POSITIVE
    # roots sit exactly at the open endpoints: still strict inside
    assert certify_sign(2 * (x**2 - 1) ** 2, IntervalQ.open(-1, 1)).verdict \
        is Verdict.STRICTLY_POSITIVE


def test_certify_zero_measure_verdicts():
    c = certify_sign(2 * (x**2 - 1) ** 2, IntervalQ.whole_line())
    assert c.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
    assert c.evidence["distinct_roots_in_interval"] == 2
    assert c.evidence["odd_multiplicity_roots_in_interior"] == 0
    d = certify_sign(-3 * x**2 * (x**2 + 1), IntervalQ.whole_line())
    assert d.verdict is Verdict.NONPOSITIVE_ZERO_MEASURE


def test_certify_indeterminate_on_sign_change():
    assert certify_sign(x, IntervalQ.whole_line()).verdict \
        is Verdict.INDETERMINATE
    assert certify_sign(F(1, 100) - x**2, IntervalQ.whole_line()).verdict \
        is Verdict.INDETERMINATE


def test_certify_constants_and_zero():
    assert certify_sign(Polynomial.constant(-3), IntervalQ.whole_line()).verdict \
        is Verdict.STRICTLY_NEGATIVE
    z = certify_sign(Polynomial.zero(), IntervalQ.whole_line())
    assert z.verdict is Verdict.INDETERMINATE


def test_certify_strict_mode_downgrades():
    squarish = 2 * (x**2 - 1) ** 2
    relaxed = certify_sign(squarish, IntervalQ.whole_line())
    assert relaxed.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE
    strict = certify_sign(squarish, IntervalQ.whole_line(), mode="strict")
    assert strict.verdict is Verdict.INDETERMINATE
    assert strict.evidence["declined_verdict"] == "nonnegative_zero_measure"
    # genuinely strict verdicts are unaffected
    assert certify_sign(x**2 + 1, IntervalQ.whole_line(),
                        mode="strict").verdict is Verdict.STRICTLY_POSITIVE
    with pytest.raises(ValueError):
        certify_sign(x, IntervalQ.whole_line(), mode="loose")


def test_certificate_evidence_mentions_sturm_data():
    c = certify_sign(2 * (x**2 - 1) ** 2, IntervalQ.whole_line())
    assert c.evidence["sturm_chain_length"] >= 2
    lo_var, hi_var = c.evidence["sign_variations"]
    assert lo_var - hi_var == c.evidence["distinct_roots_in_interval"]
    assert c.evidence["sample_value"].lstrip("-").replace("/", "").isdigit()


def test_certify_rational_functions():
    f = RationalFunction(-(x**2), 1 + x**2)
    assert certify_sign(f, IntervalQ.whole_line()).verdict \
        is Verdict.NONPOSITIVE_ZERO_MEASURE
    g = RationalFunction(1, x)
    assert certify_sign(g, IntervalQ.ray_above(0)).verdict \
        is Verdict.STRICTLY_POSITIVE
    # closed endpoint hits the pole: refuse to certify
    assert certify_sign(g, IntervalQ.ray_above(0, open_end=False)).verdict \
        is Verdict.INDETERMINATE


def test_certify_rejects_extra_variables():
    y = Polynomial.variable("y")
    with pytest.raises(UnboundParameter):
        certify_sign(x * y, IntervalQ.whole_line())


def test_certificate_serialization():
    c = certify_sign(x**2 + 1, IntervalQ.closed(0, 2))
    d = c.as_dict()
    assert d["verdict"] == "strictly_positive"
    assert d["interval"] == "[0, 2]"
    assert d["evidence"]["distinct_roots_in_interval"] == 0


INTERVALS = [
    IntervalQ.whole_line(),
    IntervalQ.ray_above(0, open_end=False),
    IntervalQ.ray_below(-1),
    IntervalQ.closed(-3, 2),
    IntervalQ.open(F(-1, 2), F(5, 2)),
]


def _random_points_in(interval, rng, n):
    """n random rationals strictly inside the interval."""
    out = []
    lo, hi = interval.lo, interval.hi
    while len(out) < n:
        u = F(rng.randint(1, 599), 600)  # strictly inside (0, 1)
        if lo is not None and hi is not None:
            t = lo + (hi - lo) * u
        elif lo is not None:
            t = lo + u * rng.randint(1, 50)
        elif hi is not None:
            t = hi - u * rng.randint(1, 50)
        else:
            t = (u - F(1, 2)) * rng.randint(1, 100)
        out.append(t)
    return out


@settings(deadline=None, max_examples=25)
@given(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3),
             min_size=1, max_size=6),
    st.sampled_from(INTERVALS),
    st.integers(0, 2**32 - 1),
)
def test_certified_verdicts_hold_at_many_points(coeffs, interval, seed):
    """Soundness: any conclusive verdict must hold at 1000 random rational
    points of the interval, checked by exact evaluation."""
    import random

    p = Polynomial(("x",), {(i,): c for i, c in enumerate(coeffs)})
    if p.is_zero:
        return
    cert = certify_sign(p, interval)
    if not cert.verdict.is_conclusive:
        return
    pts = _random_points_in(interval, random.Random(seed), 1000)
    values = [p.evaluate({"x": t}) if not p.is_constant
              else p.constant_value() for t in pts]
    if cert.verdict is Verdict.STRICTLY_NEGATIVE:
        assert all(v < 0 for v in values)
    elif cert.verdict is Verdict.STRICTLY_POSITIVE:
        assert all(v > 0 for v in values)
    elif cert.verdict is Verdict.NONPOSITIVE_ZERO_MEASURE:
        assert all(v <= 0 for v in values)
    elif cert.verdict is Verdict.NONNEGATIVE_ZERO_MEASURE:
        assert all(v >= 0 for v in values)


def test_sign_at_matches_evaluation():
    p = 3 * x**5 - x + F(2, 7)
    for t in [F(-2), F(0), F(1, 3), F(9, 4)]:
        v = p.evaluate({"x": t})
        assert sign_at(p, t) == (v > 0) - (v < 0)


# --------------------------------------------------------------- discriminants

y = Polynomial.variable("y")


def test_discriminant_of_polynomial_quadratic():
    circle = x**2 + y**2 - 1
    assert discriminant_y(circle).render() == "-4*x^2 + 4"
    # y^2 + f(x) x y + x^2 with f = -4 + x^2 + x^4
    V = y**2 + (x**4 + x**2 - 4) * x * y + x**2
    delta = discriminant_y(V)
    assert delta == x**2 * (x**4 + x**2 - 6) * (x**4 + x**2 - 2)


def test_discriminant_of_rational_quadratic():
    # y^2 - F y + x^2 with F = x(1 - x^2)/(1 + x^2)
    Fx = RationalFunction(x * (1 - x**2), 1 + x**2)
    V = RationalFunction(y**2, 1) - Fx * RationalFunction(y, 1) \
        + RationalFunction(x**2, 1)
    delta = discriminant_y(V)
    assert isinstance(delta, RationalFunction)
    assert delta.render() == "(-3*x^6 - 10*x^4 - 3*x^2)/(x^4 + 2*x^2 + 1)"


def test_discriminant_degree_gate():
    with pytest.raises(WrongDegree):
        discriminant_y(y**3 - x)
    with pytest.raises(WrongDegree):
        discriminant_y(x**2 + y)
    with pytest.raises(WrongDegree):
        discriminant_y(RationalFunction(y**2 - x, y + 2))
