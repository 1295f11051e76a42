import json
import xml.etree.ElementTree as ET

import pytest

from tricolor import cli, sim


def run_cli(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInfo:
    def test_r1_json(self, capsys):
        code, out, _ = run_cli(["info", "--r", "1", "--format", "json"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 18 and report["k"] == 4
        assert report["d_label"] == 4
        assert report["subtiling_edges"] == 9

    def test_r2_text(self, capsys):
        code, out, _ = run_cli(["info", "--r", "2"], capsys)
        assert code == 0
        assert "[[72, 4, 8]]" in out


class TestDecode:
    def test_empty_error_corrected(self, capsys):
        code, out, _ = run_cli(
            ["decode", "--r", "1", "--error", "", "--format", "json"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] == "success"
        assert report["estimate"] == []

    def test_single_hyperedge_r2(self, capsys):
        code, out, _ = run_cli(
            ["decode", "--r", "2", "--error", "31", "--format", "json"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] == "success"
        assert report["estimate"] == [31]

    def test_seeded_shot_reproducible(self, capsys):
        argv = ["decode", "--r", "2", "--p", "0.08", "--seed", "42",
                "--format", "json"]
        _, out1, _ = run_cli(argv, capsys)
        _, out2, _ = run_cli(argv, capsys)
        assert out1 == out2

    def test_needs_error_or_p(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["decode", "--r", "1"])
        assert exc.value.code == 2


class TestSweep:
    BASE = ["sweep", "--code", "color-hex", "--r-list", "1,2",
            "--p-start", "0.06", "--p-stop", "0.1", "--p-step", "0.02",
            "--trials", "60", "--seed", "4"]

    def test_writes_csv_and_plot(self, capsys, tmp_path):
        out_csv = str(tmp_path / "run.csv")
        out_svg = str(tmp_path / "run.svg")
        code, _, _ = run_cli(self.BASE + ["--out", out_csv, "--plot", out_svg],
                             capsys)
        assert code == 0
        rows = sim.read_stats_csv(out_csv)
        assert len(rows) == 6
        assert {r.r for r in rows} == {1, 2}
        tree = ET.parse(out_svg)
        assert tree.getroot().tag.endswith("svg")

    def test_byte_identical_across_worker_counts(self, capsys, tmp_path):
        texts = []
        for workers in (1, 4, 8):
            path = str(tmp_path / f"run{workers}.csv")
            code, _, _ = run_cli(
                self.BASE + ["--out", path, "--threads", str(workers)], capsys)
            assert code == 0
            with open(path, "rb") as fh:
                texts.append(fh.read())
        assert texts[0] == texts[1] == texts[2]

    def test_missing_grid_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["sweep", "--r", "1", "--trials", "5"])
        assert exc.value.code == 2

    def test_empty_grid_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["sweep", "--r", "1", "--p-start", "0.1", "--p-stop",
                      "0.05", "--p-step", "0.01"])
        assert exc.value.code == 2

    def test_stdout_when_no_out(self, capsys):
        code, out, _ = run_cli(
            ["sweep", "--code", "color-hex", "--r", "1", "--p-start", "0.05",
             "--p-stop", "0.05", "--p-step", "0.01", "--trials", "30",
             "--seed", "1"], capsys)
        assert code == 0
        assert out.startswith("code,r,n,k,p,")

    def test_json_rows_mirror_csv(self, capsys):
        argv = ["sweep", "--code", "color-hex", "--r", "1", "--p-start",
                "0.05", "--p-stop", "0.07", "--p-step", "0.02", "--trials",
                "40", "--seed", "2"]
        code, out_csv, _ = run_cli(argv, capsys)
        assert code == 0
        code, out_json, _ = run_cli(argv + ["--format", "json"], capsys)
        assert code == 0
        rows = json.loads(out_json)
        csv_lines = out_csv.strip().splitlines()[1:]
        assert len(rows) == len(csv_lines) == 2
        for row, line in zip(rows, csv_lines):
            fields = line.split(",")
            assert row["p"] == float(fields[4])
            assert row["failures"] == int(fields[6])
            assert row["logical_rate"] == float(fields[8])


class TestThreshold:
    def _sweep_csv(self, tmp_path, capsys):
        path = str(tmp_path / "sweep.csv")
        argv = ["sweep", "--code", "color-hex", "--r-list", "1,2",
                "--p-start", "0.05", "--p-stop", "0.13", "--p-step", "0.04",
                "--trials", "400", "--seed", "8", "--out", path]
        code, _, _ = run_cli(argv, capsys)
        assert code == 0
        return path

    def test_csv_equals_in_process(self, capsys, tmp_path):
        path = self._sweep_csv(tmp_path, capsys)
        code, out_csv, _ = run_cli(["threshold", "--csv", path,
                                    "--format", "json"], capsys)
        assert code == 0
        argv = ["threshold", "--code", "color-hex", "--r-list", "1,2",
                "--p-start", "0.05", "--p-stop", "0.13", "--p-step", "0.04",
                "--trials", "400", "--seed", "8", "--format", "json"]
        code, out_cfg, _ = run_cli(argv, capsys)
        assert code == 0
        assert json.loads(out_csv) == json.loads(out_cfg)

    def test_synthetic_fixture_crossing(self, capsys, tmp_path):
        # hand-built curves crossing at p = 0.10 exactly
        rows = []
        for r, rates in ((2, (0.30, 0.35, 0.40)), (4, (0.20, 0.35, 0.50))):
            for p, rate in zip((0.09, 0.10, 0.11), rates):
                f = int(rate * 1000)
                lo, hi = sim.wilson_interval(f, 1000)
                rows.append(sim.TrialStats("color-hex", r, 18, 4, p, 1000, f,
                                           0, rate, lo, hi, 0))
        path = str(tmp_path / "synth.csv")
        sim.write_stats_csv(rows, path)
        code, out, _ = run_cli(["threshold", "--csv", path, "--format",
                                "json"], capsys)
        assert code == 0
        report = json.loads(out)[0]
        assert abs(report["crossing_p"] - 0.10) < 1e-9

    def test_surface_report_includes_bound(self, capsys, tmp_path):
        rows = []
        for r, rates in ((4, (0.30, 0.40)), (8, (0.25, 0.45))):
            for p, rate in zip((0.15, 0.17), rates):
                f = int(rate * 1000)
                lo, hi = sim.wilson_interval(f, 1000)
                rows.append(sim.TrialStats("surface-hex", r, 144, 2, p, 1000,
                                           f, 0, rate, lo, hi, 0))
        path = str(tmp_path / "surf.csv")
        sim.write_stats_csv(rows, path)
        code, out, _ = run_cli(["threshold", "--csv", path, "--format",
                                "json"], capsys)
        assert code == 0
        report = json.loads(out)[0]
        assert "implied_color_bound" in report
        assert 0 < report["implied_color_bound"] < report["crossing_p"]

    def test_unbracketed_grid_exit_code_3(self, capsys, tmp_path):
        rows = []
        for r in (2, 4):
            for p in (0.01, 0.02):
                # larger code strictly better everywhere: no crossing
                rate = 0.2 / r
                f = int(rate * 1000)
                lo, hi = sim.wilson_interval(f, 1000)
                rows.append(sim.TrialStats("color-hex", r, 18, 4, p, 1000, f,
                                           0, rate, lo, hi, 0))
        path = str(tmp_path / "nob.csv")
        sim.write_stats_csv(rows, path)
        code, _, err = run_cli(["threshold", "--csv", path], capsys)
        assert code == 3
        assert "bracket" in err

    def test_malformed_csv_is_usage_error(self, capsys, tmp_path):
        path = str(tmp_path / "junk.csv")
        with open(path, "w") as fh:
            fh.write("not,a,sweep\n1,2,3\n")
        code, _, err = run_cli(["threshold", "--csv", path], capsys)
        assert code == 2
        assert "error" in err

    def test_missing_csv_is_usage_error(self, capsys, tmp_path):
        code, _, err = run_cli(
            ["threshold", "--csv", str(tmp_path / "absent.csv")], capsys)
        assert code == 2

    def test_internal_error_exit_code_4(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise RuntimeError("kernel invariant broken")
        monkeypatch.setattr(sim, "run_color_trials", boom)
        code, _, err = run_cli(
            ["threshold", "--code", "color-hex", "--r-list", "1,2",
             "--p-start", "0.05", "--p-stop", "0.06", "--p-step", "0.01",
             "--trials", "10"], capsys)
        assert code == 4
        assert "internal error" in err
