"""Tests for the command-line harness: eval, verify, table."""

import csv
import io
import json
import math

import pytest
from click.testing import CliRunner

from poincarewaves.cli import format_complex, main
from poincarewaves.lorentz_harmonics import HarmonicIndex, generalized_m, z_sum
from poincarewaves.group_kinematics import make_angles


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, args, expect=0):
    result = runner.invoke(main, args)
    assert result.exit_code == expect, (args, result.exit_code, result.output)
    return result


def parse_csv(result):
    return list(csv.reader(io.StringIO(result.stdout_bytes.decode())))


class TestFormatComplex:
    def test_seventeen_significant_digits(self):
        assert format_complex(1.0) == "1+0i"
        assert format_complex(complex(1 / 3, -2 / 3)) == (
            "0.33333333333333331-0.66666666666666663i")

    def test_negative_real(self):
        assert format_complex(complex(-2.5, 0.5)) == "-2.5+0.5i"


class TestEval:
    def test_z_identity_point(self, runner):
        result = invoke(runner, ["eval", "z", "--l", "1", "--m", "0",
                                 "--n", "0", "--theta", "0", "--tau", "0"])
        assert result.output.strip() == "z = 1+0i"

    def test_z_matches_library(self, runner):
        result = invoke(runner, ["eval", "z", "--l", "2", "--m", "1",
                                 "--n", "-1", "--theta", "0.7",
                                 "--tau", "0.3", "--format", "json"])
        payload = json.loads(result.output)
        expected = z_sum(HarmonicIndex(2, 1, -1), 0.7, 0.3)
        value = payload["values"]["z"]
        assert complex(value["re"], value["im"]) == expected

    def test_z_dotted_conjugates(self, runner):
        base = ["eval", "z", "--l", "1", "--m", "1", "--n", "0",
                "--theta", "0.7", "--tau", "0.3", "--format", "json"]
        plain = json.loads(invoke(runner, base).output)["values"]["z"]
        dotted = json.loads(invoke(runner, base + ["--dotted"]).output
                            )["values"]["z"]
        assert dotted["re"] == plain["re"]
        assert dotted["im"] == -plain["im"]

    def test_pi_tokens(self, runner):
        result = invoke(runner, ["eval", "z", "--l", "1", "--m", "0",
                                 "--n", "0", "--theta", "pi/2", "--tau", "0",
                                 "--format", "json"])
        payload = json.loads(result.output)
        expected = z_sum(HarmonicIndex(1, 0, 0), math.pi / 2, 0.0)
        assert payload["values"]["z"]["re"] == pytest.approx(expected.real)

    def test_generalized_m_function(self, runner):
        result = invoke(runner, [
            "eval", "m", "--l", "1", "--m", "1", "--n", "0", "--phi", "0.3",
            "--epsilon", "0.2", "--theta", "1.0", "--tau", "0.4",
            "--chi", "0.5", "--vareps", "0.1", "--format", "json"])
        payload = json.loads(result.output)["values"]["m"]
        expected = generalized_m(
            HarmonicIndex(1, 1, 0),
            make_angles(0.3, 0.2, 1.0, 0.4, 0.5, 0.1))
        assert complex(payload["re"], payload["im"]) == expected

    def test_polarization_axis(self, runner):
        result = invoke(runner, ["eval", "polarization", "--k", "0,0,1"])
        lines = result.output.strip().split("\n")
        assert lines[2] == "eps_zero = (0+0i, 0+0i, 1+0i)"

    def test_radial_paper_example(self, runner):
        result = invoke(runner, ["eval", "radial", "--variant", "paper",
                                 "--l", "1", "--C", "0", "--r", "1"])
        assert "f_zero = 2+0i" in result.output

    def test_planewave_csv_splits_components(self, runner):
        result = invoke(runner, ["eval", "planewave", "--k", "1,2,3",
                                 "--lam", "1", "--x", "0,0,0", "--t", "0",
                                 "--format", "csv"])
        rows = parse_csv(result)
        assert rows[0][:2] == ["psi_1_re", "psi_1_im"]
        assert len(rows[0]) == 12 and len(rows) == 2

    def test_assemble_runs(self, runner):
        result = invoke(runner, [
            "eval", "assemble", "--k", "1,2,3", "--lam", "-1", "--l", "1",
            "--x", "0.1,0.2,0.3", "--t", "0.4", "--r", "1+0.5j",
            "--C", "0.5", "--angles", "0.3,0.2,1.0,0.4,0.5,0.1",
            "--format", "json"])
        payload = json.loads(result.output)
        assert len(payload["values"]["psi"]) == 6

    @pytest.mark.parametrize("args", [
        ["eval", "nosuch", "--l", "1"],
        ["eval", "z", "--l", "1", "--m", "0"],
        ["eval", "z", "--l", "1", "--m", "0", "--n", "0",
         "--theta", "bogus", "--tau", "0"],
        ["eval", "z", "--l", "1", "--m", "7", "--n", "0",
         "--theta", "0", "--tau", "0"],
        ["eval", "polarization", "--k", "0,0,0"],
        ["eval", "polarization", "--k", "1,2"],
        ["eval", "radial", "--l", "0.5", "--r", "1"],
        ["eval", "z", "--l", "1", "--m", "0", "--n", "0",
         "--theta", "-0.5", "--tau", "0"],
    ])
    def test_usage_errors_exit_two(self, runner, args):
        invoke(runner, args, expect=2)

    def test_theta_out_of_range_message_names_parameter(self, runner):
        result = runner.invoke(main, ["eval", "m", "--l", "1", "--m", "0",
                                      "--n", "0", "--phi", "0",
                                      "--epsilon", "0", "--theta", "4",
                                      "--tau", "0", "--chi", "0",
                                      "--vareps", "0"])
        assert result.exit_code == 2
        assert "theta" in result.output


class TestVerify:
    def test_default_json_schema(self, runner):
        result = invoke(runner, ["verify", "transversality"])
        report = json.loads(result.output)
        assert report["suite"] == "transversality"
        assert set(report["summary"]) == {"passed", "failed", "flagged"}
        assert report["records"]
        record = report["records"][0]
        assert set(record) == {"suite", "name", "indices", "point",
                               "residual", "scale", "tolerance", "passed",
                               "flagged"}

    def test_all_seeded_byte_identical(self, runner):
        first = invoke(runner, ["verify", "all", "--seed", "42"])
        second = invoke(runner, ["verify", "all", "--seed", "42"])
        assert first.stdout_bytes == second.stdout_bytes

    def test_paper_variant_flagged_failures_exit_zero(self, runner):
        result = invoke(runner, ["verify", "radial", "--variant", "paper"])
        report = json.loads(result.output)
        failures = [r for r in report["records"] if not r["passed"]]
        assert failures
        assert all(r["flagged"] for r in failures)

    def test_printed_lambda_flagged_exit_zero(self, runner):
        result = invoke(runner, ["verify", "commutators",
                                 "--corrected-lambda", "false"])
        report = json.loads(result.output)
        assert report["summary"]["failed"] > 0

    def test_forced_failure_exits_one(self, runner):
        invoke(runner, ["verify", "casimir", "--tol", "casimir=1e-30"],
               expect=1)

    def test_tolerance_override_applies(self, runner):
        result = invoke(runner, ["verify", "legendre", "--tol",
                                 "legendre=0.5"])
        report = json.loads(result.output)
        assert all(r["tolerance"] == 0.5 for r in report["records"])

    @pytest.mark.parametrize("args", [
        ["verify", "nosuch"],
        ["verify", "casimir", "--tol", "nosuchname=1"],
        ["verify", "casimir", "--tol", "casimir"],
        ["verify", "casimir", "--lmax", "9"],
        ["verify", "casimir", "--seed", "-1"],
    ])
    def test_usage_errors_exit_two(self, runner, args):
        invoke(runner, args, expect=2)

    def test_csv_format_is_rfc4180(self, runner):
        result = invoke(runner, ["verify", "transversality",
                                 "--format", "csv"])
        raw = result.stdout_bytes.decode()
        assert "\r\n" in raw
        rows = parse_csv(result)
        assert rows[0] == ["suite", "name", "indices", "point", "residual",
                           "scale", "tolerance", "passed", "flagged"]
        assert len(rows) == 16
        assert all(row[8] in ("true", "false") for row in rows[1:])

    def test_text_format_summary(self, runner):
        result = invoke(runner, ["verify", "commutators",
                                 "--format", "text"])
        lines = result.output.strip().split("\n")
        assert lines[-1].startswith("summary: ")
        assert all(line.startswith(("PASS", "FAIL")) for line in lines[:-1])

    def test_seed_changes_report(self, runner):
        one = invoke(runner, ["verify", "casimir", "--seed", "1"])
        two = invoke(runner, ["verify", "casimir", "--seed", "2"])
        assert one.stdout_bytes != two.stdout_bytes


class TestTable:
    def test_nine_rows_with_kronecker_first(self, runner):
        result = invoke(runner, ["table", "z", "--l", "1", "--m", "1",
                                 "--n", "0", "--theta", "0:pi:9",
                                 "--tau", "0"])
        rows = parse_csv(result)
        assert rows[0] == ["theta", "tau", "value_re", "value_im"]
        assert len(rows) == 10
        assert float(rows[1][0]) == 0.0
        assert float(rows[1][2]) == 0.0 and float(rows[1][3]) == 0.0
        assert float(rows[-1][0]) == pytest.approx(math.pi)

    def test_matches_eval_pointwise(self, runner):
        result = invoke(runner, ["table", "z", "--l", "1", "--m", "1",
                                 "--n", "0", "--theta", "0:pi:5",
                                 "--tau", "-0.4:0.4:3"])
        rows = parse_csv(result)
        assert len(rows) == 16
        idx = HarmonicIndex(1, 1, 0)
        for theta, tau, re_, im_ in rows[1:]:
            direct = z_sum(idx, float(theta), float(tau))
            assert complex(float(re_), float(im_)) == direct

    def test_row_major_theta_outer(self, runner):
        result = invoke(runner, ["table", "zonal", "--l", "1",
                                 "--theta", "0.5:2.5:2", "--tau", "0:1:2"])
        rows = parse_csv(result)
        grid = [(float(r[0]), float(r[1])) for r in rows[1:]]
        assert grid == [(0.5, 0.0), (0.5, 1.0), (2.5, 0.0), (2.5, 1.0)]

    def test_json_rows(self, runner):
        result = invoke(runner, ["table", "z", "--l", "0.5", "--m", "0.5",
                                 "--n", "0.5", "--theta", "0:pi:3",
                                 "--tau", "0.2", "--format", "json"])
        payload = json.loads(result.output)
        assert len(payload["rows"]) == 3
        assert set(payload["rows"][0]) == {"theta", "tau", "value"}

    @pytest.mark.parametrize("args", [
        ["table", "z", "--l", "1", "--m", "1", "--n", "0",
         "--theta", "0:pi:0", "--tau", "0"],
        ["table", "z", "--l", "1", "--m", "1", "--n", "0",
         "--theta", "0:pi:-3", "--tau", "0"],
        ["table", "z", "--l", "1", "--m", "1", "--n", "0",
         "--theta", "0:pi", "--tau", "0"],
        ["table", "z", "--l", "1", "--theta", "0:pi:3", "--tau", "0"],
        ["table", "nosuch", "--l", "1", "--theta", "0", "--tau", "0"],
    ])
    def test_usage_errors_exit_two(self, runner, args):
        invoke(runner, args, expect=2)
