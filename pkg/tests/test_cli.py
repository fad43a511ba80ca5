"""CLI tests: exit codes, output formats, determinism."""

import json
import math

import pytest

from kgamma import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_k_gamma(self, capsys):
        code, out, _ = run(["eval", "k_gamma", "--x", "5", "--k", "1"], capsys)
        assert code == 0
        assert float(out) == pytest.approx(24.0, rel=1e-12)

    def test_k_zeta(self, capsys):
        code, out, _ = run(["eval", "k_zeta", "--x", "4", "--k", "2"], capsys)
        assert code == 0
        assert float(out) == pytest.approx(math.pi**2 / 6.0, rel=1e-12)

    def test_domain_error_names_precondition(self, capsys):
        code, _, err = run(["eval", "k_gamma", "--x", "-1", "--k", "1"], capsys)
        assert code == 3
        assert "x" in err

    def test_unknown_function_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["eval", "nope", "--x", "1"])
        assert exc.value.code == 2

    def test_missing_argument(self, capsys):
        code, _, err = run(["eval", "k_gamma", "--x", "1"], capsys)
        assert code == 2
        assert "--k" in err

    def test_oracle_variant_reports_error_estimate(self, capsys):
        code, out, _ = run(
            ["eval", "oracle_k_gamma", "--x", "1", "--k", "2"], capsys
        )
        assert code == 0
        assert "error_estimate=" in out
        assert float(out.split()[0]) == pytest.approx(
            math.sqrt(math.pi / 2.0), rel=1e-8
        )


class TestVerify:
    def test_small_t4_grid_csv(self, capsys, tmp_path):
        out_path = tmp_path / "report.csv"
        code, _, err = run(
            ["verify", "--theorems", "T4K", "--x", "1,2", "--k", "1,2",
             "--n", "1,2", "--format", "csv", "--output", str(out_path)],
            capsys,
        )
        lines = out_path.read_text().splitlines()
        assert lines[0].startswith("#")
        assert lines[1] == ",".join(cli.CSV_COLUMNS)
        assert len(lines) == 2 + 8
        # even-n Turán points genuinely reverse at k <= 1, so the sweep
        # reports a mathematical FAIL
        assert code == 1
        assert "T4K" in err

    def test_no_theorems_is_usage_error(self, capsys):
        code, _, err = run(["verify"], capsys)
        assert code == 2

    def test_default_grid_deterministic(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            run(["verify", "--default-grid", "--output", str(path)], capsys)
        bodies = [p.read_text().split("\n", 1)[1] for p in paths]
        assert bodies[0] == bodies[1]

    def test_t1_default_grid_passes(self, capsys, tmp_path):
        out_path = tmp_path / "t1.csv"
        code, _, _ = run(
            ["verify", "--theorems", "T1", "--default-grid",
             "--output", str(out_path)],
            capsys,
        )
        assert code == 0
        for line in out_path.read_text().splitlines()[2:]:
            slack = float(line.split(",")[11])
            assert slack >= -1e-9

    def test_json_round_trip(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, _, _ = run(
            ["verify", "--theorems", "T5", "--x", "1", "--k", "1,2",
             "--format", "json", "--output", str(out_path)],
            capsys,
        )
        assert code == 0
        payload = json.loads(out_path.read_text())
        assert isinstance(payload, list)
        assert "run_metadata" in payload[0]
        records = payload[1:]
        assert all(r["theorem_id"] == "T5" for r in records)
        assert json.loads(json.dumps(payload)) == payload

    def test_unknown_theorem(self, capsys):
        code, _, err = run(["verify", "--theorems", "T9"], capsys)
        assert code == 2

    def test_unwritable_output(self, capsys):
        code, _, err = run(
            ["verify", "--theorems", "T5", "--x", "1", "--k", "1",
             "--output", "/nonexistent-dir/report.csv"],
            capsys,
        )
        assert code == 4

    def test_bad_grid_axis(self, capsys):
        code, _, err = run(
            ["verify", "--theorems", "T5", "--x", "1:2"], capsys
        )
        assert code == 2

    def test_env_tolerance_override(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.REL_TOL_ENV, "not-a-number")
        code, _, err = run(
            ["verify", "--theorems", "T5", "--x", "1", "--k", "1"], capsys
        )
        assert code == 2
        monkeypatch.setenv(cli.REL_TOL_ENV, "1e-10")
        code, _, _ = run(
            ["verify", "--theorems", "T5", "--x", "1", "--k", "1"], capsys
        )
        assert code == 0


class TestCrosscheck:
    def test_single_point(self, capsys):
        code, out, _ = run(
            ["crosscheck", "--x", "1", "--k", "1", "--p-param", "1",
             "--m", "1", "--n", "1"],
            capsys,
        )
        assert code == 0
        for line in out.strip().splitlines():
            assert line.endswith("ok")
        k_gamma_line = next(l for l in out.splitlines() if l.startswith("k_gamma "))
        assert float(k_gamma_line.split("=")[1].split()[0]) <= 1e-10

    def test_invalid_grid(self, capsys):
        code, _, err = run(["crosscheck", "--k", "0,1"], capsys)
        assert code == 2


class TestGridParsing:
    def test_comma_list(self):
        assert cli.parse_grid_axis("1,2.5,5") == (1.0, 2.5, 5.0)

    def test_linear_range(self):
        assert cli.parse_grid_axis("0:1:3") == (0.0, 0.5, 1.0)

    def test_log_range(self):
        values = cli.parse_grid_axis("0.1:10:3:log")
        assert values == pytest.approx((0.1, 1.0, 10.0))

    def test_integer_axis(self):
        assert cli.parse_grid_axis("1,2,4", integer=True) == (1, 2, 4)
        with pytest.raises(cli.UsageError):
            cli.parse_grid_axis("1.5", integer=True)

    def test_bad_spec(self):
        with pytest.raises(cli.UsageError):
            cli.parse_grid_axis("1:2")
        with pytest.raises(cli.UsageError):
            cli.parse_grid_axis("")
