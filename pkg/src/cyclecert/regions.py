"""Planar regions on which certificates are checked.

Three shapes cover every supported analysis: the full plane, a vertical
strip a < x < b (either side may be infinite, giving a half-plane), and an
open coordinate quadrant.  Regions are open sets by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import SchemaError
from .roots import IntervalQ

__all__ = ["Region"]

_STRIP_RE = re.compile(r"^strip\s*\(\s*([^,\s]+)\s*,\s*([^)\s]+)\s*\)$")
_QUAD_RE = re.compile(r"^quadrant\s*\(\s*([+-])\s*,\s*([+-])\s*\)$")


def _endpoint(text: str, *, low: bool) -> Optional[Fraction]:
    t = text.strip()
    if t in ("-inf", "inf", "+inf", "oo", "-oo"):
        negative = t.startswith("-")
        if negative is not low:
            raise SchemaError(f"strip endpoint {t!r} on the wrong side")
        return None
    try:
        return Fraction(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad strip endpoint {t!r}: {exc}") from None


@dataclass(frozen=True)
class Region:
    kind: str  # "plane" | "strip" | "quadrant"
    x_lo: Optional[Fraction] = None
    x_hi: Optional[Fraction] = None
    sign_x: int = 0
    sign_y: int = 0

    @staticmethod
    def plane() -> "Region":
        return Region("plane")

    @staticmethod
    def strip(a, b) -> "Region":
        lo = None if a is None else Fraction(a)
        hi = None if b is None else Fraction(b)
        if lo is not None and hi is not None and lo >= hi:
            raise SchemaError(f"empty strip ({lo}, {hi})")
        return Region("strip", x_lo=lo, x_hi=hi)

    @staticmethod
    def quadrant(sign_x: int, sign_y: int) -> "Region":
        if sign_x not in (-1, 1) or sign_y not in (-1, 1):
            raise SchemaError("quadrant signs must be +1 or -1")
        return Region("quadrant", sign_x=sign_x, sign_y=sign_y)

    @staticmethod
    def parse(text: str) -> "Region":
        t = text.strip().lower()
        if t == "plane":
            return Region.plane()
        m = _STRIP_RE.match(t)
        if m:
            return Region.strip(_endpoint(m.group(1), low=True),
                                _endpoint(m.group(2), low=False))
        m = _QUAD_RE.match(t)
        if m:
            return Region.quadrant(1 if m.group(1) == "+" else -1,
                                   1 if m.group(2) == "+" else -1)
        raise SchemaError(
            f"unrecognized region {text!r}; expected 'plane', "
            "'strip (a, b)', or 'quadrant (+,+)'")

    # ------------------------------------------------------------------ views

    def x_extent(self) -> IntervalQ:
        if self.kind == "strip":
            return IntervalQ(self.x_lo, self.x_hi, True, True)
        if self.kind == "quadrant":
            return (IntervalQ.ray_above(0) if self.sign_x > 0
                    else IntervalQ.ray_below(0))
        return IntervalQ.whole_line()

    def y_extent(self) -> IntervalQ:
        if self.kind == "quadrant":
            return (IntervalQ.ray_above(0) if self.sign_y > 0
                    else IntervalQ.ray_below(0))
        return IntervalQ.whole_line()

    def contains(self, x, y) -> bool:
        return self.x_extent().contains(x) and self.y_extent().contains(y)

    def describe(self) -> str:
        if self.kind == "plane":
            return "the full plane"
        if self.kind == "strip":
            if self.x_lo is None and self.x_hi is None:
                return "the full plane"
            if self.x_lo is None:
                return f"the half-plane x < {self.x_hi}"
            if self.x_hi is None:
                return f"the half-plane x > {self.x_lo}"
            return f"the vertical strip {self.x_lo} < x < {self.x_hi}"
        sx = ">" if self.sign_x > 0 else "<"
        sy = ">" if self.sign_y > 0 else "<"
        return f"the open quadrant x {sx} 0, y {sy} 0"

    def render(self) -> str:
        if self.kind == "plane":
            return "plane"
        if self.kind == "strip":
            lo = "-inf" if self.x_lo is None else str(self.x_lo)
            hi = "inf" if self.x_hi is None else str(self.x_hi)
            return f"strip ({lo}, {hi})"
        return (f"quadrant ({'+' if self.sign_x > 0 else '-'},"
                f"{'+' if self.sign_y > 0 else '-'})")
