"""Problem files, certificate dispatch, reports, and curve sampling.

A problem file is a flat sectioned text format with exact-rational values:

    [system]
    P = "y"
    Q = "-eps*(x^2 - 1)*y - x"

    [params]
    eps = "1"

    [certificate]
    method = "direct"
    V = "x^2 + y^2 - 1"
    s = "-2"

Sections are ``[system]``, ``[params]`` (optional), and ``[certificate]``;
every entry is ``key = "value"``.  Which keys the ``[system]`` section
takes depends on the method: field components for the generic methods,
shape data (F/g, h0..h2, g0/g1, a..f) for the construction methods.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from . import __version__
from .algebra import Polynomial, RationalFunction
from .constructions import (
    DegenerateCase,
    KolmogorovSpec,
    LienardSpec,
    NotFound,
    kolmogorov_check,
    lienard_v2,
    lotka_volterra_dulac,
    massera_check,
    mt_recurrence,
    second_method_derive,
)
from .dulac import DulacCandidate, certify_direct
from .errors import CycleCertError, SchemaError
from .exprparse import parse_expression
from .polar import certify_polar
from .regions import Region
from .roots import IntervalQ, Verdict
from .systems import SystemDef

__all__ = ["ProblemSpec", "Report", "export_curve_samples", "load_problem",
           "run_certificate"]

METHODS = ("direct", "polar", "lienard", "kolmogorov", "massera",
           "lotka-volterra", "mt-recurrence", "second-method")

_X = Polynomial.variable("x")
_Y = Polynomial.variable("y")


@dataclass
class ProblemSpec:
    """A loaded problem: the system, the method, and its parsed arguments."""

    system: SystemDef
    method: str
    method_args: dict
    region: Region = field(default_factory=Region.plane)


@dataclass
class Report:
    """Outcome of one certificate run."""

    status: str  # "certified" | "inconclusive" | "error"
    bound: Optional[int]
    payload: dict
    human_summary: str
    exit_code_hint: int
    method: str = ""
    candidate_v: Optional[RationalFunction] = None  # for sampling, not JSON

    def as_dict(self) -> dict:
        return {
            "version": __version__,
            "method": self.method,
            "status": self.status,
            "bound": self.bound,
            "certificate": self.payload,
            "human_summary": self.human_summary,
            "exit_code_hint": self.exit_code_hint,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# problem-file parsing
# ---------------------------------------------------------------------------

_SECTION_RE = re.compile(r"^\[([a-z]+)\]$")
_ENTRY_RE = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*"([^"]*)"$')

# required/optional keys per section for each method
_SCHEMAS: Dict[str, Dict[str, Tuple[set, set]]] = {
    "direct": {"system": ({"P", "Q"}, set()),
               "certificate": ({"method", "V", "s"}, {"region"})},
    "polar": {"system": ({"P", "Q"}, set()),
              "certificate": ({"method", "s"}, set())},
    "mt-recurrence": {"system": ({"P", "Q"}, set()),
                      "certificate": ({"method", "s", "n"},
                                      {"degree_cap", "region"})},
    "lienard": {"system": ({"F", "g"}, set()),
                "certificate": ({"method"}, {"s", "c0", "c1", "region"})},
    "second-method": {"system": ({"h0", "h1", "h2"}, set()),
                      "certificate": ({"method", "v2"}, {"region"})},
    "kolmogorov": {"system": ({"g0", "g1", "h0", "h1", "h2"}, set()),
                   "certificate": ({"method", "lambda", "interval"}, set())},
    "massera": {"system": ({"f", "g"}, set()),
                "certificate": ({"method", "interval"}, set())},
    "lotka-volterra": {"system": ({"a", "b", "c", "d", "e", "f"}, set()),
                       "certificate": ({"method"}, set())},
}

_INTERVAL_RE = re.compile(
    r"^([\[\(])\s*(-inf|[-\d/]+)\s*,\s*(\+?inf|[-\d/]+)\s*([\]\)])$")

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _exact_rational(text: str, where: str) -> Fraction:
    """Integers and fractions only: no decimals, no floats."""
    if not _RATIONAL_RE.match(text.strip()):
        raise SchemaError(
            f"{where}: {text!r} is not an exact rational (use p or p/q)")
    return Fraction(text)


def _parse_interval(text: str) -> IntervalQ:
    m = _INTERVAL_RE.match(text.strip())
    if not m:
        raise SchemaError(
            f"bad interval {text!r}; expected e.g. \"(0, inf)\" or "
            f"\"[-1, 1]\"")
    lo = None if m.group(2) == "-inf" else \
        _exact_rational(m.group(2), "interval endpoint")
    hi = None if m.group(3).lstrip("+") == "inf" else \
        _exact_rational(m.group(3), "interval endpoint")
    return IntervalQ(lo, hi, m.group(1) == "(", m.group(4) == ")")


def _fraction(sections: dict, section: str, key: str) -> Fraction:
    return _exact_rational(sections[section][key], f"{section}.{key}")


def _integer(sections: dict, section: str, key: str) -> int:
    text = sections[section][key]
    try:
        return int(text)
    except ValueError as exc:
        raise SchemaError(f"{section}.{key}: {text!r} is not an integer") \
            from exc


def _read_sections(path: str) -> dict:
    sections: dict = {}
    current = None
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            m = _SECTION_RE.match(line)
            if m:
                name = m.group(1)
                if name not in ("system", "params", "certificate"):
                    raise SchemaError(
                        f"line {lineno}: unknown section [{name}]")
                if name in sections:
                    raise SchemaError(
                        f"line {lineno}: duplicate section [{name}]")
                sections[name] = {}
                current = name
                continue
            m = _ENTRY_RE.match(line)
            if m:
                if current is None:
                    raise SchemaError(
                        f"line {lineno}: entry before any section header")
                key, value = m.group(1), m.group(2)
                if key in sections[current]:
                    raise SchemaError(
                        f"line {lineno}: duplicate key {key!r} in "
                        f"[{current}]")
                sections[current][key] = value
                continue
            raise SchemaError(
                f"line {lineno}: expected 'key = \"value\"' or a section "
                f"header, got {line!r}")
    return sections


def _check_schema(sections: dict, method: str) -> None:
    schema = _SCHEMAS[method]
    problems = []
    for name, (required, optional) in schema.items():
        present = set(sections.get(name, {}))
        missing = sorted(required - present)
        extra = sorted(present - required - optional)
        if missing:
            problems.append(f"[{name}] missing keys: {', '.join(missing)}")
        if extra:
            problems.append(f"[{name}] unexpected keys: {', '.join(extra)}")
    for name in sections:
        if name not in schema and name != "params":
            problems.append(f"unexpected section [{name}]")
    if problems:
        raise SchemaError(f"method {method!r}: " + "; ".join(problems))


def _univariate_poly(sections, section, key, params) -> Polynomial:
    expr = parse_expression(sections[section][key], vars=("x",),
                            params=params)
    bindings = {n: RationalFunction.constant(v) for n, v in params.items()}
    if bindings:
        expr = expr.substitute(bindings)
    if not expr.is_polynomial:
        raise SchemaError(f"{section}.{key} must be a polynomial in x")
    return expr.as_polynomial()


def _univariate_rational(sections, section, key, params) -> RationalFunction:
    expr = parse_expression(sections[section][key], vars=("x",),
                            params=params)
    bindings = {n: RationalFunction.constant(v) for n, v in params.items()}
    if bindings:
        expr = expr.substitute(bindings)
    return expr


def load_problem(path: str, overrides: Optional[dict] = None) -> ProblemSpec:
    """Load and validate a problem file.

    ``overrides`` replaces values in the [params] section (used by
    parameter sweeps); every overridden name must already be present.
    """
    sections = _read_sections(path)
    cert = sections.get("certificate", {})
    method = cert.get("method")
    if method is None:
        raise SchemaError("[certificate] must declare method = \"...\"")
    if method not in METHODS:
        raise SchemaError(f"unknown method {method!r}; expected one of "
                          f"{', '.join(METHODS)}")
    _check_schema(sections, method)

    raw_params = dict(sections.get("params", {}))
    for name, value in (overrides or {}).items():
        if name not in raw_params:
            raise SchemaError(
                f"override for {name!r} does not match any [params] entry")
        raw_params[name] = str(value)
    params = {name: _exact_rational(text, f"params.{name}")
              for name, text in raw_params.items()}
    sections = dict(sections)
    sections["params"] = {n: str(v) for n, v in raw_params.items()}

    args: dict = {}
    region = Region.plane()
    if "region" in cert:
        region = Region.parse(cert["region"])

    if method in ("direct", "polar", "mt-recurrence"):
        P = parse_expression(sections["system"]["P"], vars=("x", "y"),
                             params=params)
        Q = parse_expression(sections["system"]["Q"], vars=("x", "y"),
                             params=params)
        system = SystemDef(P=P, Q=Q, params=params)
        args["s"] = _fraction(sections, "certificate", "s")
        if method == "direct":
            args["V"] = parse_expression(cert["V"], vars=("x", "y"),
                                         params=params)
        if method == "mt-recurrence":
            args["n"] = _integer(sections, "certificate", "n")
            args["degree_cap"] = (_integer(sections, "certificate",
                                           "degree_cap")
                                  if "degree_cap" in cert else 8)
    elif method == "lienard":
        args["F"] = _univariate_rational(sections, "system", "F", params)
        args["g"] = _univariate_poly(sections, "system", "g", params)
        args["s"] = (_fraction(sections, "certificate", "s")
                     if "s" in cert else Fraction(-1))
        args["c0"] = (_fraction(sections, "certificate", "c0")
                      if "c0" in cert else Fraction(0))
        args["c1"] = (_fraction(sections, "certificate", "c1")
                      if "c1" in cert else Fraction(0))
        system = SystemDef(P=RationalFunction(_Y, 1) - args["F"],
                           Q=RationalFunction(-args["g"], 1))
    elif method == "second-method":
        for key in ("h0", "h1", "h2"):
            args[key] = _univariate_poly(sections, "system", key, params)
        args["v2"] = _univariate_poly(sections, "certificate", "v2", params)
        system = SystemDef(
            P=_Y, Q=args["h0"] + args["h1"] * _Y + args["h2"] * _Y * _Y
            + _Y ** 3)
    elif method == "kolmogorov":
        for key in ("g0", "g1", "h0", "h1", "h2"):
            args[key] = _univariate_poly(sections, "system", key, params)
        args["lambda"] = _fraction(sections, "certificate", "lambda")
        args["interval"] = _parse_interval(cert["interval"])
        system = SystemDef(
            P=_X * (args["g0"] + args["g1"] * _Y),
            Q=_Y * (args["h0"] + args["h1"] * _Y
                    + args["h2"] * _Y * _Y))
    elif method == "massera":
        args["f"] = _univariate_poly(sections, "system", "f", params)
        args["g"] = _univariate_poly(sections, "system", "g", params)
        args["interval"] = _parse_interval(cert["interval"])
        system = SystemDef(P=_Y, Q=-args["f"] * _Y - args["g"])
    elif method == "lotka-volterra":
        for key in ("a", "b", "c", "d", "e", "f"):
            args[key] = _fraction(sections, "system", key)
        system = SystemDef(
            P=_X * (args["a"] * _X + args["b"] * _Y + args["c"]),
            Q=_Y * (args["d"] * _X + args["e"] * _Y + args["f"]))
    else:  # pragma: no cover - method list is closed above
        raise SchemaError(f"unhandled method {method!r}")

    return ProblemSpec(system=system, method=method, method_args=args,
                       region=region)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def _status(certified: bool) -> Tuple[str, int]:
    return ("certified", 0) if certified else ("inconclusive", 2)


def _system_lines(system: SystemDef) -> list:
    return [f"system: x' = {system.P.render()}, y' = {system.Q.render()}"
            + (f"  [{', '.join(f'{k} = {v}' for k, v in sorted(system.params.items()))}]"
               if system.params else "")]


def _direct_report(system: SystemDef, cand: DulacCandidate, region: Region,
                   method: str, extra_payload: Optional[dict] = None,
                   extra_lines: Optional[list] = None) -> Report:
    cert = certify_direct(system, cand, region)
    certified = cert.certified
    status, hint = _status(certified)
    total = (cert.bound + cert.cycles_in_curve) if certified else None
    lines = _system_lines(system)
    if extra_lines:
        lines.extend(extra_lines)
    lines.append(f"candidate: V = {cand.V.render()}, s = {cand.s}")
    lines.append(f"companion function: M = {cert.m_s.render()}")
    lines.append(f"sign verdict: {cert.sign.verdict.value}")
    lines.extend(cert.notes)
    if cert.stability_note:
        lines.append(cert.stability_note)
    if certified:
        word = "no limit cycles" if total == 0 else \
            f"at most {total} limit cycle(s)"
        lines.append(f"result: certified: {word} in "
                     f"{region.describe()}")
    else:
        lines.append("result: inconclusive: no bound claimed")
    payload = dict(extra_payload or {})
    payload["direct"] = cert.as_dict()
    bound_v = cand.V.substitute(
        {n: RationalFunction.constant(v) for n, v in system.params.items()}) \
        if system.params else cand.V
    return Report(status=status, bound=total, payload=payload,
                  human_summary="\n".join(lines), exit_code_hint=hint,
                  method=method, candidate_v=bound_v)


def _run_direct(spec: ProblemSpec) -> Report:
    cand = DulacCandidate(spec.method_args["V"], spec.method_args["s"])
    return _direct_report(spec.system, cand, spec.region, spec.method)


def _run_polar(spec: ProblemSpec) -> Report:
    cert = certify_polar(spec.system, spec.method_args["s"])
    certified = cert.bound is not None
    status, hint = _status(certified)
    lines = _system_lines(spec.system)
    lines.append(f"radial average profile: p(u) = {cert.p.render()}")
    lines.append(f"weight: w(r) = {cert.w.render()}; distinct nonnegative "
                 f"roots: {cert.n_plus}")
    lines.append(f"amplitude envelope: {cert.phi.render()}")
    lines.append(f"envelope verdict: {cert.phi_sign.verdict.value}")
    lines.extend(cert.notes)
    if certified:
        lines.append(f"result: certified: at most {cert.bound} limit "
                     f"cycle(s)")
    else:
        lines.append("result: inconclusive: no bound claimed")
    return Report(status=status, bound=cert.bound, payload=cert.as_dict(),
                  human_summary="\n".join(lines), exit_code_hint=hint,
                  method=spec.method, candidate_v=None)


def _run_lienard(spec: ProblemSpec) -> Report:
    a = spec.method_args
    lspec = LienardSpec(F=a["F"], g=a["g"], s=a["s"], c0=a["c0"], c1=a["c1"])
    res = lienard_v2(lspec)
    cand = DulacCandidate(res.V, res.s)
    return _direct_report(
        spec.system, cand, spec.region, spec.method,
        extra_payload={"construction": res.as_dict()},
        extra_lines=[f"constructed candidate ({res.notes})"])


def _run_mt(spec: ProblemSpec) -> Report:
    a = spec.method_args
    res = mt_recurrence(spec.system, a["s"], a["n"], a["degree_cap"])
    if isinstance(res, NotFound):
        lines = _system_lines(spec.system)
        lines.append(f"cascade search failed: {res.reason}")
        lines.append("result: inconclusive: no bound claimed")
        return Report(status="inconclusive", bound=None,
                      payload={"not_found": res.reason},
                      human_summary="\n".join(lines), exit_code_hint=2,
                      method=spec.method, candidate_v=None)
    cand = DulacCandidate(res.V, res.s)
    return _direct_report(
        spec.system, cand, spec.region, spec.method,
        extra_payload={"construction": res.as_dict()},
        extra_lines=[f"constructed candidate ({res.notes})"])


def _run_second_method(spec: ProblemSpec) -> Report:
    a = spec.method_args
    V2, m2, residual = second_method_derive(a["h0"], a["h1"], a["h2"],
                                            a["v2"])
    payload = {"V2": V2.render(), "M2": m2.render(),
               "residual": residual.render()}
    if residual.is_zero and not V2.is_zero:
        cand = DulacCandidate(V2, Fraction(-2, 3))
        return _direct_report(
            spec.system, cand, spec.region, spec.method,
            extra_payload={"derivation": payload},
            extra_lines=["residual vanished: candidate closes at s = -2/3"])
    lines = _system_lines(spec.system)
    lines.append(f"derived candidate V2 = {V2.render()}")
    lines.append(f"constant-in-y part: M2 = {m2.render()}")
    lines.append(f"leftover y-coefficient (residual): {residual.render()}")
    lines.append("result: inconclusive: the residual does not vanish, so "
                 "V2 is not a closed candidate at this degree")
    return Report(status="inconclusive", bound=None, payload=payload,
                  human_summary="\n".join(lines), exit_code_hint=2,
                  method=spec.method, candidate_v=None)


def _run_kolmogorov(spec: ProblemSpec) -> Report:
    a = spec.method_args
    kspec = KolmogorovSpec(g0=a["g0"], g1=a["g1"], h0=a["h0"], h1=a["h1"],
                           h2=a["h2"], lam=a["lambda"],
                           interval=a["interval"])
    S, T, cert = kolmogorov_check(kspec)
    certified = cert.verdict in (Verdict.STRICTLY_POSITIVE,
                                 Verdict.NONNEGATIVE_ZERO_MEASURE)
    status, hint = _status(certified)
    lines = _system_lines(spec.system)
    lines.append(f"S = {S.render()}")
    lines.append(f"T = {T.render()}")
    lines.append(f"sign of S*T on {kspec.interval.render()}: "
                 f"{cert.verdict.value}")
    if certified:
        lines.append("result: certified: no periodic orbits in "
                     "I x (0, +inf)")
        bound: Optional[int] = 0
    elif cert.verdict is Verdict.INDETERMINATE:
        lines.append("result: inconclusive: the product's sign could not "
                     "be settled")
        bound = None
    else:
        lines.append("result: inconclusive: the product is nonpositive; "
                     "the same-sign hypothesis fails for this lambda")
        bound = None
    payload = {"S": S.render(), "T": T.render(),
               "lambda": str(kspec.lam),
               "interval": kspec.interval.render(),
               "certificate": cert.as_dict()}
    return Report(status=status, bound=bound, payload=payload,
                  human_summary="\n".join(lines), exit_code_hint=hint,
                  method=spec.method, candidate_v=None)


def _run_massera(spec: ProblemSpec) -> Report:
    a = spec.method_args
    res, cert = massera_check(a["f"], a["g"], a["interval"])
    certified = "at most one periodic orbit" in res.notes
    status, hint = _status(certified)
    lines = _system_lines(spec.system)
    lines.append(f"candidate: V = {res.V.render()}, s = {res.s}")
    lines.append(f"companion function: M = {res.M.render()}")
    lines.append(f"sign of the x-factor on {a['interval'].render()}: "
                 f"{cert.verdict.value}")
    lines.append(res.notes)
    if certified:
        lines.append("result: certified: at most 1 limit cycle in the "
                     "strip")
    else:
        lines.append("result: inconclusive: no bound claimed")
    payload = {"construction": res.as_dict(),
               "certificate": cert.as_dict()}
    return Report(status=status, bound=1 if certified else None,
                  payload=payload, human_summary="\n".join(lines),
                  exit_code_hint=hint, method=spec.method,
                  candidate_v=res.V)


def _run_lotka_volterra(spec: ProblemSpec) -> Report:
    a = spec.method_args
    result = lotka_volterra_dulac(a["a"], a["b"], a["c"], a["d"], a["e"],
                                  a["f"])
    lines = _system_lines(spec.system)
    if isinstance(result, DegenerateCase):
        lines.append(result.note)
        lines.append("result: certified: no limit cycles in the open "
                     "quadrant (degenerate case)")
        payload = {"degenerate": True, "note": result.note}
    else:
        lines.append(f"monomial weight: x^({result.A}) * y^({result.B})")
        lines.append(f"scaled-divergence constant: R = {result.R} "
                     f"({result.kind})")
        lines.append(result.note)
        lines.append("result: certified: no limit cycles in the open "
                     "quadrant")
        payload = {"degenerate": False, "A": str(result.A),
                   "B": str(result.B), "R": str(result.R),
                   "kind": result.kind, "note": result.note}
    return Report(status="certified", bound=0, payload=payload,
                  human_summary="\n".join(lines), exit_code_hint=0,
                  method=spec.method, candidate_v=None)


_RUNNERS = {
    "direct": _run_direct,
    "polar": _run_polar,
    "lienard": _run_lienard,
    "mt-recurrence": _run_mt,
    "second-method": _run_second_method,
    "kolmogorov": _run_kolmogorov,
    "massera": _run_massera,
    "lotka-volterra": _run_lotka_volterra,
}


def run_certificate(spec: ProblemSpec) -> Report:
    """Dispatch the problem to its engine and wrap the outcome in a Report.

    Engine errors (bad shapes, unbound parameters, unsupported sign
    patterns, ...) surface as status="error" reports rather than
    exceptions.
    """
    runner = _RUNNERS[spec.method]
    try:
        return runner(spec)
    except (CycleCertError, ValueError) as exc:
        name = type(exc).__name__
        return Report(status="error", bound=None,
                      payload={"error": name, "message": str(exc)},
                      human_summary=f"error: {name}: {exc}",
                      exit_code_hint=1, method=spec.method,
                      candidate_v=None)


# ---------------------------------------------------------------------------
# curve sampling (non-certificate output)
# ---------------------------------------------------------------------------


def export_curve_samples(V: RationalFunction, window, resolution: int,
                         path: str) -> str:
    """Write a CSV of sign samples of V over a rectangular window.

    ``window`` is (x0, x1, y0, y1) with exact rational entries.  The file
    holds ``resolution`` x ``resolution`` grid rows (kind=grid) with the
    sign of V, followed by midpoints of sign changes between adjacent grid
    points (kind=crossing).  Floating point is used for the written
    coordinates; this export is for plotting, not part of any certificate.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    V = V if isinstance(V, RationalFunction) else RationalFunction(V, 1)
    x0, x1, y0, y1 = (Fraction(v) for v in window)
    if not (x0 < x1 and y0 < y1):
        raise ValueError("window must satisfy x0 < x1 and y0 < y1")

    xs = [x0 + (x1 - x0) * i / (resolution - 1) for i in range(resolution)]
    ys = [y0 + (y1 - y0) * j / (resolution - 1) for j in range(resolution)]

    grid: dict = {}
    for i, xv in enumerate(xs):
        for j, yv in enumerate(ys):
            try:
                value = V.evaluate({"x": xv, "y": yv})
            except CycleCertError:
                grid[(i, j)] = None
                continue
            grid[(i, j)] = value

    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["kind", "x", "y", "value", "sign"])
        for i, xv in enumerate(xs):
            for j, yv in enumerate(ys):
                value = grid[(i, j)]
                if value is None:
                    writer.writerow(["grid", float(xv), float(yv), "", ""])
                else:
                    sign = (value > 0) - (value < 0)
                    writer.writerow(["grid", float(xv), float(yv),
                                     float(value), sign])
        for i, xv in enumerate(xs):
            for j, yv in enumerate(ys):
                here = grid[(i, j)]
                if here is None:
                    continue
                for di, dj in ((1, 0), (0, 1)):
                    ni, nj = i + di, j + dj
                    if ni >= resolution or nj >= resolution:
                        continue
                    there = grid[(ni, nj)]
                    if there is None:
                        continue
                    if (here > 0 and there < 0) or (here < 0 and there > 0):
                        mx = (xs[i] + xs[ni]) / 2
                        my = (ys[j] + ys[nj]) / 2
                        writer.writerow(["crossing", float(mx), float(my),
                                         "", ""])
    return path
