"""Tests for problem-file loading, certificate dispatch, report shape, and
the curve-sampling export."""

import csv
import json
from fractions import Fraction
from pathlib import Path

import pytest

from cyclecert import __version__
from cyclecert.algebra import Polynomial, RationalFunction
from cyclecert.errors import SchemaError
from cyclecert.problems import (
    export_curve_samples,
    load_problem,
    run_certificate,
)

X = Polynomial.variable("x")
Y = Polynomial.variable("y")

REPO_PROBLEMS = Path(__file__).resolve().parent.parent / "problems"

VDP = """
[system]
P = "y"
Q = "-eps*(x^2 - 1)*y - x"

[params]
eps = "1"

[certificate]
method = "direct"
V = "x^2 + y^2 - 1"
s = "-2"
"""

ROTATION_S0 = """
[system]
P = "-y"
Q = "x"

[certificate]
method = "direct"
V = "x^2 + y^2 - 1"
s = "0"
"""

POLAR_BAD_ORIGIN = """
[system]
P = "1 + y"
Q = "-x"

[certificate]
method = "polar"
s = "-1"
"""


def write(tmp_path, text, name="problem.prob"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# loader
# ---------------------------------------------------------------------------


class TestLoader:
    def test_vdp_file_loads(self, tmp_path):
        spec = load_problem(write(tmp_path, VDP))
        assert spec.method == "direct"
        assert spec.system.params == {"eps": Fraction(1)}
        assert spec.method_args["s"] == Fraction(-2)
        assert spec.method_args["V"] == RationalFunction(X * X + Y * Y - 1)
        assert spec.region.kind == "plane"

    def test_missing_candidate_is_schema_error(self, tmp_path):
        text = VDP.replace('V = "x^2 + y^2 - 1"\n', "")
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, text))
        assert "missing keys: V" in str(exc.value)

    def test_extra_key_is_schema_error(self, tmp_path):
        text = VDP + 'w = "1"\n'
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, text))
        assert "unexpected keys: w" in str(exc.value)

    def test_unknown_method(self, tmp_path):
        text = VDP.replace('method = "direct"', 'method = "homotopy"')
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, text))
        assert "homotopy" in str(exc.value)

    def test_unknown_section(self, tmp_path):
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, VDP + "\n[extras]\nq = \"1\"\n"))
        assert "[extras]" in str(exc.value)

    def test_malformed_line_reports_line_number(self, tmp_path):
        text = '[system]\nP = "y"\nQ: "-x"\n'
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, text))
        assert "line 3" in str(exc.value)

    def test_duplicate_key(self, tmp_path):
        text = VDP.replace('P = "y"', 'P = "y"\nP = "2*y"')
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, text))
        assert "duplicate key" in str(exc.value)

    def test_entry_before_section(self, tmp_path):
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, 'P = "y"\n'))
        assert "before any section" in str(exc.value)

    def test_param_must_be_exact_rational(self, tmp_path):
        text = VDP.replace('eps = "1"', 'eps = "3.14"')
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, text))
        assert "exact rational" in str(exc.value)

    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(OSError):
            load_problem(str(tmp_path / "nope.prob"))

    def test_override_replaces_param(self, tmp_path):
        path = write(tmp_path, VDP)
        spec = load_problem(path, overrides={"eps": Fraction(1, 2)})
        assert spec.system.params == {"eps": Fraction(1, 2)}

    def test_override_must_name_existing_param(self, tmp_path):
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, VDP), overrides={"mu": Fraction(1)})
        assert "mu" in str(exc.value)

    def test_interval_forms(self, tmp_path):
        base = ('[system]\nf = "x^2"\ng = "x"\n\n[certificate]\n'
                'method = "massera"\ninterval = "{0}"\n')
        spec = load_problem(write(tmp_path, base.format("[-1, 1]")))
        iv = spec.method_args["interval"]
        assert iv.lo == -1 and iv.hi == 1 and not iv.lo_open
        spec = load_problem(write(tmp_path, base.format("(-inf, inf)"),
                                  name="p2.prob"))
        iv = spec.method_args["interval"]
        assert iv.lo is None and iv.hi is None
        with pytest.raises(SchemaError):
            load_problem(write(tmp_path, base.format("-1 .. 1"),
                               name="p3.prob"))

    def test_lienard_g_must_be_polynomial(self, tmp_path):
        text = ('[system]\nF = "x^3/3 - x"\ng = "1/(1 + x)"\n\n'
                '[certificate]\nmethod = "lienard"\n')
        with pytest.raises(SchemaError) as exc:
            load_problem(write(tmp_path, text))
        assert "polynomial" in str(exc.value)

    def test_lienard_accepts_rational_damping(self, tmp_path):
        text = ('[system]\nF = "x*(1 - x^2)/(1 + x^2)"\ng = "x"\n\n'
                '[certificate]\nmethod = "lienard"\ns = "-1"\n')
        spec = load_problem(write(tmp_path, text))
        assert not spec.method_args["F"].is_polynomial
        assert spec.method_args["g"] == X

    def test_region_key(self, tmp_path):
        text = VDP.replace('s = "-2"', 's = "-2"\nregion = "strip (-2, 2)"')
        spec = load_problem(write(tmp_path, text))
        assert spec.region.kind == "strip"
        assert spec.region.x_lo == -2 and spec.region.x_hi == 2

    def test_comments_and_blank_lines_ignored(self, tmp_path):
        spec = load_problem(write(tmp_path, "# header\n\n" + VDP))
        assert spec.method == "direct"


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


class TestRunCertificate:
    def test_vdp_certifies_one_cycle(self, tmp_path):
        report = run_certificate(load_problem(write(tmp_path, VDP)))
        assert report.status == "certified"
        assert report.bound == 1
        assert report.exit_code_hint == 0
        assert report.candidate_v == RationalFunction(X * X + Y * Y - 1)
        assert report.payload["direct"]["bound_kind"] == "AtMost"
        assert "outside the unit circle" in report.human_summary

    def test_rotation_inconclusive(self, tmp_path):
        report = run_certificate(load_problem(write(tmp_path, ROTATION_S0)))
        assert report.status == "inconclusive"
        assert report.bound is None
        assert report.exit_code_hint == 2

    def test_polar_surfaces_origin_error(self, tmp_path):
        report = run_certificate(
            load_problem(write(tmp_path, POLAR_BAD_ORIGIN)))
        assert report.status == "error"
        assert report.exit_code_hint == 1
        assert report.payload["error"] == "NonzeroAtOrigin"

    def test_report_dict_shape(self, tmp_path):
        report = run_certificate(load_problem(write(tmp_path, VDP)))
        doc = report.as_dict()
        assert doc["version"] == __version__
        assert set(doc) == {"version", "method", "status", "bound",
                            "certificate", "human_summary",
                            "exit_code_hint"}
        json.dumps(doc)  # JSON-safe throughout

    def test_reports_are_deterministic(self, tmp_path):
        path = write(tmp_path, VDP)
        first = run_certificate(load_problem(path))
        second = run_certificate(load_problem(path))
        assert first.to_json() == second.to_json()

    def test_repo_problem_corpus(self):
        # every shipped example certifies, and status matches the bound
        assert REPO_PROBLEMS.is_dir()
        seen = 0
        for path in sorted(REPO_PROBLEMS.glob("*.prob")):
            report = run_certificate(load_problem(str(path)))
            assert report.status == "certified", path.name
            assert report.bound is not None, path.name
            assert report.exit_code_hint == 0, path.name
            seen += 1
        assert seen >= 8

    def test_certified_iff_bound_present(self, tmp_path):
        for text in (VDP, ROTATION_S0, POLAR_BAD_ORIGIN):
            report = run_certificate(load_problem(write(tmp_path, text)))
            assert (report.status == "certified") == \
                (report.bound is not None)

    def test_mt_cascade_not_found_is_inconclusive(self, tmp_path):
        text = ('[system]\nP = "(1 + x^2)*y"\nQ = "x*y + y^2"\n\n'
                '[certificate]\nmethod = "mt-recurrence"\ns = "-1"\n'
                'n = "2"\n')
        report = run_certificate(load_problem(write(tmp_path, text)))
        assert report.status == "inconclusive"
        assert "not_found" in report.payload

    def test_second_method_residual_blocks_claim(self, tmp_path):
        text = ('[system]\nh0 = "1"\nh1 = "0"\nh2 = "x"\n\n'
                '[certificate]\nmethod = "second-method"\nv2 = "1"\n')
        report = run_certificate(load_problem(write(tmp_path, text)))
        assert report.status == "inconclusive"
        assert report.payload["residual"] != "0"

    def test_kolmogorov_wrong_sign_inconclusive(self, tmp_path):
        # S = 1 as in the shipped example, but h2 = +1 flips T negative
        text = ('[system]\ng0 = "2 - x"\ng1 = "-1"\nh0 = "x - 1"\n'
                'h1 = "0"\nh2 = "1"\n\n[certificate]\n'
                'method = "kolmogorov"\nlambda = "1"\n'
                'interval = "(0, inf)"\n')
        report = run_certificate(load_problem(write(tmp_path, text)))
        assert report.status == "inconclusive"
        assert "same-sign hypothesis" in report.human_summary

    def test_lv_degenerate_still_excludes_cycles(self, tmp_path):
        text = ('[system]\na = "1"\nb = "2"\nc = "3"\nd = "2"\ne = "4"\n'
                'f = "6"\n\n[certificate]\nmethod = "lotka-volterra"\n')
        report = run_certificate(load_problem(write(tmp_path, text)))
        assert report.status == "certified"
        assert report.bound == 0
        assert report.payload["degenerate"] is True

    def test_unbound_parameter_is_error_report(self, tmp_path):
        text = VDP.replace("[params]\neps = \"1\"\n", "")
        # eps now undeclared: parsing P/Q fails at load with a clear error
        with pytest.raises(Exception) as exc:
            load_problem(write(tmp_path, text))
        assert "eps" in str(exc.value)


# ---------------------------------------------------------------------------
# curve sampling
# ---------------------------------------------------------------------------


class TestExportCurveSamples:
    def test_circle_grid(self, tmp_path):
        out = str(tmp_path / "circle.csv")
        export_curve_samples(RationalFunction(X * X + Y * Y - 1),
                             (-2, 2, -2, 2), 21, out)
        with open(out, newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["kind", "x", "y", "value", "sign"]
        grid = [r for r in rows[1:] if r[0] == "grid"]
        crossings = [r for r in rows[1:] if r[0] == "crossing"]
        assert len(grid) == 21 * 21
        assert crossings, "the circle must produce sign changes"
        by_point = {(r[1], r[2]): r for r in grid}
        assert by_point[("-2.0", "-2.0")][4] == "1"    # outside
        assert by_point[("0.0", "0.0")][4] == "-1"     # inside
        # crossing midpoints hug the circle
        for r in crossings:
            radius = (float(r[1]) ** 2 + float(r[2]) ** 2) ** 0.5
            assert abs(radius - 1.0) < 0.25

    def test_rational_candidate_marks_poles(self, tmp_path):
        out = str(tmp_path / "pole.csv")
        export_curve_samples(RationalFunction(Polynomial.constant(1), X),
                             (-1, 1, -1, 1), 3, out)
        with open(out, newline="") as handle:
            rows = [r for r in csv.reader(handle) if r and r[0] == "grid"]
        poles = [r for r in rows if r[1] == "0.0"]
        assert len(poles) == 3
        assert all(r[3] == "" and r[4] == "" for r in poles)

    def test_resolution_must_be_at_least_two(self, tmp_path):
        with pytest.raises(ValueError):
            export_curve_samples(RationalFunction(X), (-1, 1, -1, 1), 1,
                                 str(tmp_path / "x.csv"))

    def test_window_must_be_ordered(self, tmp_path):
        with pytest.raises(ValueError):
            export_curve_samples(RationalFunction(X), (1, -1, -1, 1), 5,
                                 str(tmp_path / "x.csv"))
