"""End-to-end tests of the command-line front end and its exit codes."""

import json
import math

import numpy as np
import pytest

from planequant.cli import main

TWO_PI = 2.0 * math.pi


def _read(path) -> str:
    return path.read_text(encoding="utf-8")


class TestSpectrumCommand:
    def test_small_dim_full_spectrum(self, tmp_path):
        out = tmp_path / "spec.csv"
        assert main(["spectrum", "--n", "3", "--out", str(out)]) == 0
        lines = _read(out).strip().splitlines()
        assert lines[0] == "index,eigenvalue"
        values = sorted(float(line.split(",")[1]) for line in lines[1:])
        assert values == pytest.approx([-1.224745, 0.0, 1.224745], abs=1e-6)

    def test_bisect_summary(self, tmp_path):
        out = tmp_path / "s.csv"
        assert main(["spectrum", "--n", "5000", "--method", "bisect", "--out", str(out)]) == 0
        lines = _read(out).strip().splitlines()
        header = lines[0].split(",")
        row = dict(zip(header, lines[1].split(",")))
        assert row["N"] == "5000"
        assert float(row["sigma"]) < TWO_PI

    def test_auto_switches_to_bisect_beyond_cap(self, tmp_path):
        out = tmp_path / "s.csv"
        assert main([
            "spectrum", "--n", "3000", "--dense-cap", "1000", "--out", str(out),
        ]) == 0
        assert _read(out).startswith("N,lambda_m")

    def test_json_format(self, tmp_path):
        out = tmp_path / "spec.json"
        assert main(["spectrum", "--n", "4", "--format", "json", "--out", str(out)]) == 0
        data = json.loads(_read(out))
        assert len(data["eigenvalues"]) == 4

    def test_degenerate_dim_is_usage_error(self, tmp_path):
        assert main(["spectrum", "--n", "1", "--out", str(tmp_path / "x.csv")]) == 2

    def test_io_failure(self, tmp_path):
        missing = tmp_path / "no" / "such" / "dir" / "x.csv"
        assert main(["spectrum", "--n", "3", "--out", str(missing)]) == 3


class TestSigmaTableCommand:
    def test_explicit_list_matches_reference(self, tmp_path):
        out = tmp_path / "sigma.csv"
        assert main(["sigma-table", "--n-list", "10,55,100", "--out", str(out)]) == 0
        lines = _read(out).strip().splitlines()
        assert lines[0].endswith(",two_pi")
        sigmas = [float(line.split(",")[5]) for line in lines[1:]]
        assert sigmas == pytest.approx([4.713054, 5.774856, 5.941534], abs=1e-5)

    def test_geometric_ladder_monotone_within_parity(self, tmp_path):
        out = tmp_path / "ladder.csv"
        assert main(["sigma-table", "--geometric", "10", "2000", "8", "--out", str(out)]) == 0
        rows = [line.split(",") for line in _read(out).strip().splitlines()[1:]]
        by_parity: dict[str, list[float]] = {"even": [], "odd": []}
        for row in rows:
            by_parity[row[6]].append(float(row[5]))
        for values in by_parity.values():
            assert values == sorted(values)

    def test_empty_list_is_usage_error(self, tmp_path):
        assert main(["sigma-table", "--n-list", "", "--out", str(tmp_path / "x.csv")]) == 2

    def test_bad_dim_is_usage_error(self, tmp_path):
        assert main(["sigma-table", "--n-list", "5,1", "--out", str(tmp_path / "x.csv")]) == 2

    def test_emit_plot_writes_scripts(self, tmp_path):
        out = tmp_path / "sigma.csv"
        assert main([
            "sigma-table", "--n-list", "10,11,12", "--out", str(out), "--emit-plot",
        ]) == 0
        sigma_script = _read(tmp_path / "sigma_sigma.gp")
        assert "sigma.csv" in sigma_script and "2 pi" in sigma_script
        assert (tmp_path / "sigma_extremes.gp").exists()

    def test_byte_identical_across_runs(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["sigma-table", "--n-list", "2,3,10,55", "--out", str(a)]) == 0
        assert main(["sigma-table", "--n-list", "2,3,10,55", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_nine_significant_digits_round_trip(self, tmp_path):
        out = tmp_path / "sigma.csv"
        assert main(["sigma-table", "--n-list", "10,55", "--out", str(out)]) == 0
        for line in _read(out).strip().splitlines()[1:]:
            for cell in line.split(",")[1:6]:
                assert f"{float(cell):.9g}" == cell


class TestLowerSymbolsCommand:
    def test_grid_with_default_dim(self, tmp_path):
        out = tmp_path / "h.csv"
        assert main([
            "lower-symbols", "--which", "H", "--steps", "9",
            "--q-min", "-3", "--q-max", "3", "--p-min", "-3", "--p-max", "3",
            "--out", str(out),
        ]) == 0
        lines = _read(out).strip().splitlines()
        assert lines[0] == "q,p,value"
        assert len(lines) == 1 + 81

    def test_uncertainty_grid_below_half_for_two_levels(self, tmp_path):
        out = tmp_path / "u.csv"
        assert main([
            "lower-symbols", "--which", "UNCERTAINTY", "--n", "2", "--steps", "21",
            "--q-min", "-8", "--q-max", "8", "--p-min", "-8", "--p-max", "8",
            "--out", str(out),
        ]) == 0
        values = np.array([
            float(line.split(",")[2]) for line in _read(out).strip().splitlines()[1:]
        ])
        assert values.max() <= 0.5 + 1e-12
        assert values.min() < 0.45  # dips well below the supremum away from the origin

    def test_emit_plot(self, tmp_path):
        out = tmp_path / "q2.csv"
        assert main([
            "lower-symbols", "--which", "Q2", "--steps", "5", "--out", str(out), "--emit-plot",
        ]) == 0
        assert "splot 'q2.csv'" in _read(tmp_path / "q2.gp")

    def test_overflowing_grid_is_usage_error(self, tmp_path):
        assert main([
            "lower-symbols", "--which", "H", "--q-min", "-60", "--q-max", "60",
            "--out", str(tmp_path / "x.csv"),
        ]) == 2

    def test_json_format(self, tmp_path):
        out = tmp_path / "c.json"
        assert main([
            "lower-symbols", "--which", "C", "--steps", "4", "--format", "json",
            "--out", str(out),
        ]) == 0
        data = json.loads(_read(out))
        assert data["n_dim"] == 12
        assert len(data["values"]) == 16


class TestBoundsCommand:
    def test_report_to_stdout(self, capsys):
        assert main(["bounds", "--l-c", "1e-10", "--l-m", "1e-35"]) == 0
        out = capsys.readouterr().out
        assert "6.28318531e+15" in out

    def test_hall_bound_with_theta(self, capsys, tmp_path):
        json_out = tmp_path / "b.json"
        assert main([
            "bounds", "--l-c", "2.0", "--l-m", "1.0", "--theta", "4.0",
            "--out", str(json_out),
        ]) == 0
        data = json.loads(_read(json_out))
        assert data["hall_l_max"] == pytest.approx(TWO_PI * 2.0)

    def test_inverse_problem_line(self, capsys):
        assert main([
            "bounds", "--l-c", "1e-5", "--l-m", "1.6e-35", "--universe-size", "1.3e26",
        ]) == 0
        out = capsys.readouterr().out
        assert "l_c =" in out

    def test_bad_scales_usage_error(self, capsys):
        assert main(["bounds", "--l-c", "1e-35", "--l-m", "1e-10"]) == 2

    def test_finite_dim_sigma_flag(self, capsys):
        assert main(["bounds", "--l-c", "1.0", "--l-m", "1.0", "--sigma-n", "10"]) == 0
        out = capsys.readouterr().out
        assert "4.71305409" in out


class TestVerifyCommand:
    def test_quick_budget_passes(self, capsys):
        assert main(["verify", "--n-max-dense", "64"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 9
        assert "FAIL" not in out

    def test_injected_fault_fails_by_name(self, capsys):
        assert main(["verify", "--n-max-dense", "64", "--inject-fault"]) == 1
        captured = capsys.readouterr()
        assert "FAIL interlacing" in captured.out
        assert "interlacing" in captured.err

    def test_deterministic_for_fixed_seed(self, capsys):
        assert main(["verify", "--n-max-dense", "32", "--seed", "7"]) == 0
        first = capsys.readouterr().out
        assert main(["verify", "--n-max-dense", "32", "--seed", "7"]) == 0
        assert capsys.readouterr().out == first
