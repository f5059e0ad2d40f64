"""Command-line surface: outputs, formats, determinism, exit codes."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hirzebruch_torsion import cli, torsion
from hirzebruch_torsion.constants import ExactConstant, log_rational


def run_cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "hirzebruch_torsion.cli", *argv],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


class TestHeightCommand:
    def test_single_value(self):
        code, out, _ = run_cli("height", "--n", "1")
        assert code == 0
        assert out.strip() == "23/4"

    def test_csv_range(self):
        code, out, _ = run_cli("height", "--n-max", "3", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,height"
        assert lines[1:] == ["0,3", "1,23/4", "2,19/2", "3,57/4"]


class TestTorsionCommand:
    def test_json_routes_agree(self):
        code, out, _ = run_cli("torsion", "--n", "0", "--route", "all",
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        entry = payload[0]
        rr = entry["routes"]["rr"]
        bb = entry["routes"]["bb"]
        assert rr == bb
        # the split case reduces to twice the base-line torsion
        main = ExactConstant.from_json_dict(entry["main_theorem_value"]["exact"])
        assert main == torsion.closed_tau_p1().scale(2)
        got = ExactConstant.from_json_dict(rr["exact"])
        assert got == torsion.closed_tau_p1().scale(2)

    def test_text_folding(self):
        code, out, _ = run_cli("torsion", "--n", "1", "--route", "closed")
        assert code == 0
        assert "2*tau_P1" in out

    def test_expand_tau_flag(self):
        code, out, _ = run_cli("torsion", "--n", "1", "--route", "closed",
                               "--expand-tau")
        assert code == 0
        assert "tau_P1" not in out and "zeta'(-1)" in out


class TestVerifyCommand:
    def test_passes_and_exit_zero(self):
        code, out, _ = run_cli("verify", "--n-list", "1,2", "--tol", "1e-8",
                               "--height-range", "5")
        assert code == 0
        assert "all passed" in out

    def test_json_format(self):
        code, out, _ = run_cli("verify", "--n-list", "1", "--format", "json",
                               "--height-range", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["all_passed"] is True

    def test_unreachable_tolerance_exits_one(self):
        # a demand below quadrature noise must be reported as a failure
        code, out, _ = run_cli("verify", "--n-list", "1", "--tol", "1e-16",
                               "--height-range", "0")
        assert code == 1
        assert "FAIL" in out

    def test_nonpositive_tolerance_is_config_error(self):
        code, _, _ = run_cli("verify", "--n-list", "1", "--tol", "0")
        assert code == 2


class TestIntegralsCommand:
    def test_csv_round_trip(self):
        code, out, _ = run_cli("integrals", "--n", "2", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "name,n,expected,computed,abs_error,pass"
        for line in lines[1:]:
            cells = line.split(",")
            assert cells[-1] == "true"
            assert abs(float(cells[2]) - float(cells[3])) <= 1e-8


class TestTableCommand:
    def test_csv_header(self):
        code, out, _ = run_cli("table", "--n-list", "0,1")
        assert code == 0
        assert out.splitlines()[0] == ("n,height,tau_float,tau_minus_logvol_float,"
                                       "route_discrepancy,max_integral_discrepancy")


class TestConstantsCommand:
    def test_lists_atoms(self):
        code, out, _ = run_cli("constants")
        assert code == 0
        assert "zeta'(-1)" in out and "log(pi)" in out

    def test_json(self):
        code, out, _ = run_cli("constants", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert {"atom", "reference"} == set(rows[0])


class TestFormsCommand:
    def test_single_form_columns(self):
        code, out, _ = run_cli("forms", "--n", "1", "--form", "alpha",
                               "--grid-points", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "u,fx,fphi"
        assert len(lines) == 6
        u, fx, fphi = (float(v) for v in lines[1].split(","))
        assert fx == pytest.approx((1 + 2 * u) / (1 + u), rel=1e-12)

    def test_all_forms_have_name_column(self):
        code, out, _ = run_cli("forms", "--n", "0", "--grid-points", "3")
        assert code == 0
        assert out.splitlines()[0] == "form,u,fx,fphi"

    def test_unknown_form_is_config_error(self):
        code, _, err = run_cli("forms", "--n", "1", "--form", "nope")
        assert code == 2
        assert "unknown form" in err


class TestTraceAndErrors:
    def test_height_trace_emits_rewrite_json(self):
        code, out, err = run_cli("height", "--n", "2", "--trace")
        assert code == 0
        assert out.strip() == "19/2"
        steps = json.loads(err)
        assert steps and all(set(s) == {"rule", "before", "after"} for s in steps)
        assert any(s["rule"] == "x_square" for s in steps)

    def test_nonconvergence_exit_code(self):
        code, _, err = run_cli("integrals", "--n", "5", "--quad-tol", "1e-16",
                               "--max-refinement", "1")
        assert code == 3
        assert "converge" in err


class TestConfigErrors:
    def test_missing_n(self):
        code, _, _ = run_cli("height")
        assert code == 2

    def test_negative_n(self):
        code, _, _ = run_cli("height", "--n", "-3")
        assert code == 2

    def test_bad_subcommand(self):
        code, _, _ = run_cli("frobnicate")
        assert code == 2

    def test_bad_quad_tol(self):
        code, _, _ = run_cli("torsion", "--n", "1", "--quad-tol", "0")
        assert code == 2


class TestDeterminism:
    def test_byte_identical_reports(self):
        args = ("verify", "--n-list", "1", "--format", "csv", "--height-range", "3")
        _, out1, _ = run_cli(*args)
        _, out2, _ = run_cli(*args)
        assert out1 == out2

    def test_byte_identical_tables(self):
        args = ("table", "--n-list", "0,1,2")
        _, out1, _ = run_cli(*args)
        _, out2, _ = run_cli(*args)
        assert out1 == out2


class TestFormatExact:
    def test_folding(self):
        value = torsion.closed_tau(1)
        text = cli.format_exact(value)
        assert text.endswith("2*tau_P1")

    def test_negative_multiple(self):
        text = cli.format_exact(torsion.closed_tau_p1().scale(-2))
        assert text == "-2*tau_P1"

    def test_unfoldable_passthrough(self):
        v = log_rational(Fraction(3, 2))
        assert cli.format_exact(v) == str(v)
