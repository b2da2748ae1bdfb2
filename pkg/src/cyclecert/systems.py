"""Planar vector fields (x' = P, y' = Q) with named rational parameters.

A SystemDef keeps the field symbolic until its parameters are bound; every
certificate-producing operation works on the bound field, where only the
coordinates x and y remain.  P and Q may be rational functions, so fields
like the rational Lienard family fit without clearing denominators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

from .algebra import Polynomial, RationalFunction
from .errors import UnboundParameter

__all__ = ["SystemDef"]

FieldLike = Union[int, Fraction, Polynomial, RationalFunction]

COORDS = ("x", "y")


def _as_rational_function(f: FieldLike) -> RationalFunction:
    if isinstance(f, RationalFunction):
        return f
    return RationalFunction(f)


@dataclass
class SystemDef:
    """The field (P, Q), its parameter bindings, and its polynomial degree."""

    P: RationalFunction
    Q: RationalFunction
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        self.P = _as_rational_function(self.P)
        self.Q = _as_rational_function(self.Q)
        self.params = {name: Fraction(v) for name, v in self.params.items()}

    # --------------------------------------------------------------- binding

    def bound_field(self) -> tuple:
        """(P, Q) with every parameter replaced by its rational value.

        Raises UnboundParameter if any non-coordinate name survives.
        """
        bindings = {name: RationalFunction.constant(v)
                    for name, v in self.params.items()}
        P = self.P.substitute(bindings) if bindings else self.P
        Q = self.Q.substitute(bindings) if bindings else self.Q
        loose = [v for f in (P, Q) for v in f.free_variables
                 if v not in COORDS]
        if loose:
            raise UnboundParameter(
                f"unbound parameter(s) {sorted(set(loose))} in the field; "
                f"bound names are {sorted(self.params)}")
        return P, Q

    @property
    def degree_n(self) -> int:
        """Max total degree of the bound numerators (the polynomial degree
        of the field when P and Q are polynomials)."""
        P, Q = self.bound_field()
        return max(P.num.total_degree(), Q.num.total_degree())

    # -------------------------------------------------------------- calculus

    def divergence(self) -> RationalFunction:
        """P_x + Q_y of the bound field."""
        P, Q = self.bound_field()
        return P.differentiate("x") + Q.differentiate("y")

    def with_params(self, **updates) -> "SystemDef":
        """Same field, some parameter values replaced."""
        merged = dict(self.params)
        merged.update({k: Fraction(v) for k, v in updates.items()})
        return SystemDef(self.P, self.Q, merged)

    def describe(self) -> str:
        head = f"x' = {self.P.render()}, y' = {self.Q.render()}"
        if self.params:
            binds = ", ".join(f"{k} = {v}"
                              for k, v in sorted(self.params.items()))
            return f"{head}  ({binds})"
        return head
