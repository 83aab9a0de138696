"""End-to-end tests of the command-line interface."""

import pytest

from ri_thermalizer.cli import main

FIG3A_STYLE_CONFIG = """\
# n* against J*tau at strong coupling, low target temperature
kind = NstarVsJtau
grid = 0.6:2.4:7
d = 3
beta = 10
j = 10
epsilon = 1e-4
n_max = 100000
"""

FIG3A_GOLDEN_CSV = """\
point,value,stderr,reachable
0.6,29,0,true
0.9,12,0,true
1.2,6,0,true
1.5,3,0,true
1.8,5,0,true
2.1,9,0,true
2.4,18,0,true
"""


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "sweep.cfg"
    path.write_text(FIG3A_STYLE_CONFIG)
    return path


class TestSweepCommand:
    def test_golden_file(self, config_path, tmp_path):
        out = tmp_path / "out.csv"
        assert main(["sweep", str(config_path), "--out", str(out)]) == 0
        assert out.read_text() == FIG3A_GOLDEN_CSV

    def test_stdout_when_no_out(self, config_path, capsys):
        assert main(["sweep", str(config_path)]) == 0
        assert capsys.readouterr().out == FIG3A_GOLDEN_CSV

    def test_identical_bytes_across_runs(self, config_path, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["sweep", str(config_path), "--out", str(out1)])
        main(["sweep", str(config_path), "--out", str(out2)])
        assert out1.read_bytes() == out2.read_bytes()

    def test_parallel_flag_matches_serial(self, config_path, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["sweep", str(config_path), "--out", str(out1)])
        main(["sweep", str(config_path), "--out", str(out2), "--parallel", "3"])
        assert out1.read_bytes() == out2.read_bytes()

    def test_env_var_overrides_parallel(self, config_path, tmp_path, monkeypatch):
        monkeypatch.setenv("RI_THERMALIZER_THREADS", "2")
        out = tmp_path / "env.csv"
        assert main(["sweep", str(config_path), "--out", str(out), "--parallel", "1"]) == 0
        assert out.read_text() == FIG3A_GOLDEN_CSV

    def test_invalid_config_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.cfg"
        bad.write_text("kind = NstarVsBeta\ngrid = 1,2\nbogus = 3\n")
        assert main(["sweep", str(bad)]) == 2
        assert "bogus" in capsys.readouterr().err

    def test_missing_config_exits_2(self, tmp_path):
        assert main(["sweep", str(tmp_path / "nope.cfg")]) == 2

    def test_unwritable_output_exits_3(self, config_path):
        assert main(["sweep", str(config_path), "--out", "/nonexistent-dir/x.csv"]) == 3

    def test_seed_override_changes_ensemble(self, tmp_path):
        cfg = tmp_path / "ens.cfg"
        cfg.write_text(
            "kind = RandomEnsembleVsBeta\ngrid = 1.0\nrepetitions = 3\n"
            "epsilon = 0.05\nn_max = 2000\ntau = 100\n"
        )
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["sweep", str(cfg), "--out", str(out1), "--seed", "1"])
        main(["sweep", str(cfg), "--out", str(out2), "--seed", "2"])
        assert out1.read_text() != out2.read_text()

    def test_engine_override_rejected_when_incompatible(self, config_path, capsys):
        assert main(["sweep", str(config_path), "--engine", "OdeSL"]) == 2

    def test_brute_force_engine_reproduces_golden(self, config_path, tmp_path):
        out = tmp_path / "bf.csv"
        assert main(["sweep", str(config_path), "--out", str(out), "--engine", "BruteForce"]) == 0
        assert out.read_text() == FIG3A_GOLDEN_CSV


class TestValidateCommand:
    def test_all_checks_pass(self, capsys):
        assert main(["validate"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.count("[PASS]") >= 5


class TestSpectraCommand:
    def test_closed_matches_numeric_in_output(self, capsys):
        assert main(["spectra", "4", "0.8", "0.9"]) == 0
        lines = capsys.readouterr().out.splitlines()
        data = [ln for ln in lines if ln and ln[0].isdigit()]
        assert len(data) == 8  # 4 discrete + 4 continuous rows
        for row in data:
            _, closed, numeric = row.split(",")
            assert abs(float(closed) - float(numeric)) <= 1e-9

    def test_bad_arguments_exit_2(self):
        assert main(["spectra", "1", "0.8", "0.9"]) == 2
        assert main(["spectra", "3", "1.8", "0.9"]) == 2
