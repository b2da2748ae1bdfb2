"""cyclecert: machine-checkable upper bounds on limit cycles of planar systems."""

__version__ = "0.1.0"

from .algebra import Polynomial, RationalFunction
from .constructions import (
    KolmogorovSpec,
    LienardSpec,
    kolmogorov_check,
    lienard_v2,
    lotka_volterra_dulac,
    massera_check,
    mt_recurrence,
    second_method_derive,
)
from .dulac import DulacCandidate, certify_direct, compute_div_dx, compute_ms
from .errors import CycleCertError
from .exprparse import parse_expression
from .polar import certify_polar
from .problems import (
    ProblemSpec,
    Report,
    export_curve_samples,
    load_problem,
    run_certificate,
)
from .regions import Region
from .systems import SystemDef

__all__ = [
    "Polynomial",
    "RationalFunction",
    "CycleCertError",
    "SystemDef",
    "Region",
    "DulacCandidate",
    "compute_ms",
    "compute_div_dx",
    "certify_direct",
    "certify_polar",
    "LienardSpec",
    "lienard_v2",
    "mt_recurrence",
    "second_method_derive",
    "KolmogorovSpec",
    "kolmogorov_check",
    "massera_check",
    "lotka_volterra_dulac",
    "parse_expression",
    "ProblemSpec",
    "Report",
    "load_problem",
    "run_certificate",
    "export_curve_samples",
    "main",
    "__version__",
]

from .cli import main  # noqa: E402  (needs problems above)
