"""CLI contract: argument handling, output schema, determinism, exit codes."""

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from gapspec import cli


def run_cli(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrum:
    def test_csv_shape(self, capsys):
        code, out, err = run_cli(
            ["spectrum", "--kernel", "sine", "--s", "2.0", "--top", "5"], capsys
        )
        assert code == 0 and err == ""
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["index", "lambda", "one_minus_lambda", "mu"]
        assert len(rows) == 6
        lam = float(rows[1][1])
        assert 0.0 < lam < 1.0
        assert float(rows[1][2]) == pytest.approx(1.0 - lam, rel=1e-12)

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(
            ["spectrum", "--kernel", "airy", "--s", "-3.0", "--format", "json", "--top", "3"],
            capsys,
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["schema_version"] == 1
        assert payload["config_echo"]["family"] == "airy"
        assert payload["config_echo"]["deterministic"] is True
        assert len(payload["rows"]) == 3

    def test_deterministic_output(self, capsys):
        argv = ["spectrum", "--kernel", "bessel", "--a", "0.5", "--s", "9.0"]
        _, out1, _ = run_cli(argv, capsys)
        _, out2, _ = run_cli(argv, capsys)
        assert out1 == out2

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "spec.csv"
        code, out, _ = run_cli(
            ["spectrum", "--kernel", "sine", "--s", "2.0", "--output", str(path)], capsys
        )
        assert code == 0 and out == ""
        data = path.read_bytes()
        assert b"\r" not in data  # LF only
        assert data.decode("utf-8").startswith("index,")


class TestDet:
    def test_gamma_variants_agree(self, capsys):
        base = ["det", "--kernel", "sine", "--s", "2.0"]
        _, out_g, _ = run_cli(base + ["--gamma", "0.5"], capsys)
        _, out_v, _ = run_cli(base + ["--v", str(math.log(2.0))], capsys)
        lg_g = float(out_g.splitlines()[1].split(",")[0])
        lg_v = float(out_v.splitlines()[1].split(",")[0])
        assert lg_g == pytest.approx(lg_v, rel=1e-12)

    def test_conflicting_gamma_flags(self, capsys):
        code, _, err = run_cli(
            ["det", "--kernel", "sine", "--s", "2.0", "--gamma", "0.5", "--v", "1.0"],
            capsys,
        )
        assert code == 2
        assert "exactly one" in err

    def test_pole_exits_numerical(self, capsys):
        code, _, err = run_cli(
            ["det", "--kernel", "sine", "--s", "4.0", "--gamma", "1.5"], capsys
        )
        assert code == 3
        assert "numerical" in err


class TestAsymp:
    def test_gap_value_matches_library(self, capsys):
        from gapspec.asymptotics import airy_gap

        code, out, _ = run_cli(
            ["asymp", "--formula", "airy-gap", "--s", "-4.0"], capsys
        )
        assert code == 0
        assert float(out.splitlines()[1]) == pytest.approx(airy_gap(-4.0), rel=1e-15)

    def test_transition_row(self, capsys):
        code, out, _ = run_cli(
            ["asymp", "--formula", "airy-transition", "--s", "-4.0", "--chi", "0.0"],
            capsys,
        )
        assert code == 0
        header, row = out.splitlines()[:2]
        assert header == "log_prefactor,factors,p,error_exponent,log_value"
        fields = row.split(",")
        assert int(fields[2]) == 1
        assert float(fields[3]) == pytest.approx(0.5)

    def test_bessel_requires_order(self, capsys):
        code, _, err = run_cli(
            ["det", "--kernel", "bessel", "--s", "9.0"], capsys
        )
        assert code == 2
        assert "--a" in err

    def test_sine_sub_needs_v(self, capsys):
        code, _, _ = run_cli(["asymp", "--formula", "sine-sub", "--s", "4.0"], capsys)
        assert code == 2


class TestScan:
    def test_eig_scan_csv(self, capsys):
        code, out, _ = run_cli(
            [
                "scan", "--kind", "eig", "--kernel", "sine", "--grid", "2.5,3.5",
                "--index", "0", "--n", "80",
            ],
            capsys,
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["t", "numeric", "predicted", "rel_error"]
        assert len(rows) == 3

    def test_det_scan_needs_chi(self, capsys):
        code, _, err = run_cli(
            ["scan", "--kind", "det", "--kernel", "airy", "--grid", "6.0"], capsys
        )
        assert code == 2
        assert "--chi" in err

    def test_jobs_flag_deterministic(self, capsys):
        argv = [
            "scan", "--kind", "eig", "--kernel", "sine", "--grid", "2.5,3.0,3.5",
            "--n", "80",
        ]
        _, out1, _ = run_cli(argv + ["--jobs", "1"], capsys)
        _, out2, _ = run_cli(argv + ["--jobs", "3"], capsys)
        assert out1 == out2


class TestConfigFile:
    def test_config_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"kernel": "sine", "s": 2.0, "n": 60}))
        code, out, _ = run_cli(["spectrum", "--config", str(cfg)], capsys)
        assert code == 0
        assert out.startswith("index,")

    def test_flag_overrides_config(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"kernel": "sine", "s": 2.0, "format": "json"}))
        code, out, _ = run_cli(
            ["spectrum", "--config", str(cfg), "--format", "csv"], capsys
        )
        assert code == 0
        assert out.startswith("index,")  # csv won

    def test_bad_config(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text("[1, 2]")
        code, _, _ = run_cli(["spectrum", "--config", str(cfg)], capsys)
        assert code == 2


class TestUsageErrors:
    def test_missing_required(self, capsys):
        code, _, err = run_cli(["spectrum"], capsys)
        assert code == 2
        assert "kernel" in err

    def test_unknown_command(self, capsys):
        assert run_cli(["frobnicate"], capsys)[0] == 2

    def test_n_out_of_range(self, capsys):
        code, _, _ = run_cli(
            ["spectrum", "--kernel", "sine", "--s", "2.0", "--n", "5"], capsys
        )
        assert code == 2


class TestEntryPoint:
    def test_installed_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "gapspec.cli", "asymp", "--formula", "sine-crit", "--s", "4.0"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("log_value")

    def test_float_format_17g(self, capsys):
        _, out, _ = run_cli(
            ["asymp", "--formula", "sine-crit", "--s", "4.0"], capsys
        )
        value = out.splitlines()[1]
        # round-trips exactly through float
        assert format(float(value), ".17g") == value
