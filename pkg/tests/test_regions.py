"""Region parsing, membership, and description."""

from fractions import Fraction

import pytest

from cyclecert.errors import SchemaError
from cyclecert.regions import Region


def test_parse_plane():
    r = Region.parse("plane")
    assert r.kind == "plane"
    assert r.contains(Fraction(10**6), Fraction(-10**6))
    assert r.describe() == "the full plane"
    assert r.render() == "plane"


def test_parse_strip():
    r = Region.parse("strip (-1, 1)")
    assert r.kind == "strip"
    assert (r.x_lo, r.x_hi) == (Fraction(-1), Fraction(1))
    assert r.describe() == "the vertical strip -1 < x < 1"
    assert r.render() == "strip (-1, 1)"


def test_parse_strip_fractions_and_infinities():
    r = Region.parse("strip (-1/2, 1/2)")
    assert (r.x_lo, r.x_hi) == (Fraction(-1, 2), Fraction(1, 2))
    half = Region.parse("strip (-inf, 0)")
    assert half.x_lo is None and half.x_hi == 0
    assert half.describe() == "the half-plane x < 0"
    assert Region.parse("strip (0, inf)").x_hi is None
    assert Region.parse("strip (0, oo)").x_hi is None


def test_parse_quadrant():
    r = Region.parse("quadrant (+, +)")
    assert (r.sign_x, r.sign_y) == (1, 1)
    assert r.contains(1, 1) and not r.contains(-1, 1)
    assert not r.contains(0, 1)  # open: the axes are excluded
    s = Region.parse("quadrant (-, +)")
    assert s.contains(-3, Fraction(1, 7)) and not s.contains(3, 1)
    assert s.describe() == "the open quadrant x < 0, y > 0"


def test_parse_rejects_garbage():
    for bad in ["sphere", "strip (1, -1)", "strip (a, b)", "quadrant (+)",
                "strip (inf, 0)", ""]:
        with pytest.raises(SchemaError):
            Region.parse(bad)


def test_round_trip_through_render():
    for text in ["plane", "strip (-1, 1)", "strip (-inf, 0)",
                 "quadrant (+,-)", "strip (-5/3, 7/2)"]:
        r = Region.parse(text)
        assert Region.parse(r.render()) == r


def test_extents():
    assert Region.plane().x_extent().render() == "(-inf, inf)"
    strip = Region.strip(-1, 1)
    assert strip.x_extent().render() == "(-1, 1)"
    assert strip.y_extent().render() == "(-inf, inf)"
    q = Region.quadrant(1, -1)
    assert q.x_extent().render() == "(0, inf)"
    assert q.y_extent().render() == "(-inf, 0)"


def test_strip_membership_is_open():
    strip = Region.strip(-1, 1)
    assert strip.contains(Fraction(1, 2), 100)
    assert not strip.contains(1, 0)
    assert not strip.contains(-1, 0)
