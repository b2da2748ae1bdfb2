"""Exception types shared across the package.

Every failure mode that a caller may sensibly catch gets its own class; all of
them derive from CycleCertError so the CLI can map any domain failure to a
clean error report instead of a traceback.
"""

from __future__ import annotations


class CycleCertError(Exception):
    """Base class for all certification-related errors."""


class ParseError(CycleCertError):
    """Raised when an expression or problem file fails to parse."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class UnknownIdentifier(ParseError):
    """An expression used a name that is neither a variable nor a parameter."""

    def __init__(self, name: str, line: int = 1, col: int = 1):
        super().__init__(f"unknown identifier '{name}'", line, col)
        self.name = name


class DivisionByZeroDenominator(CycleCertError):
    """A rational-function operation produced an identically-zero denominator."""


class UnboundParameter(CycleCertError):
    """An operation that needs numeric values met a free symbolic parameter."""


class ZeroPolynomial(CycleCertError):
    """The operation requires a nonzero polynomial."""


class WrongDegree(CycleCertError):
    """Input polynomial has the wrong degree for this operation."""


class NotMonic(CycleCertError):
    """Leading coefficient must be 1 or certified of constant sign."""


class UnsupportedShape(CycleCertError):
    """The expression fits none of the certifiable sign patterns."""


class TopologyUnsupported(CycleCertError):
    """The zero-set analysis cannot classify this curve."""


class NotPolynomial(CycleCertError):
    """A polynomial vector field is required here."""


class NonzeroAtOrigin(CycleCertError):
    """The vector field must vanish at the origin for polar coordinates."""


class ParityViolation(CycleCertError):
    """The angular average produced even powers of r, which cannot happen
    for a polynomial field; indicates an internal inconsistency."""


class ZeroW(CycleCertError):
    """The radial profile vanishes identically; the polar route does not apply."""


class ZeroG1(CycleCertError):
    """The y-coefficient of the prey equation must not vanish identically."""


class GOriginViolation(CycleCertError):
    """The restoring term g must vanish at the origin and nowhere else in
    the working interval."""


class WrongShape(CycleCertError):
    """The system is not of the structural form this construction needs."""


class SchemaError(CycleCertError):
    """A problem file is missing required keys or carries unknown ones."""
