"""Unit tests for sweep configuration, execution, and CSV emission."""

import io
import math

import numpy as np
import pytest

from ri_thermalizer.errors import ConfigInvalid, IoError
from ri_thermalizer.sweeps import (
    SweepRecord,
    SweepSpec,
    emit_csv,
    format_csv,
    parse_config,
    parse_csv,
    run_sweep,
)


class TestParseConfig:
    def test_minimal_config_gets_defaults(self):
        spec = parse_config("kind = NstarVsBeta\ngrid = 1,2,5\n")
        assert spec.kind == "NstarVsBeta"
        assert spec.grid == (1.0, 2.0, 5.0)
        assert spec.omega == 1.0
        assert spec.epsilon == 1e-4
        assert spec.engine == "Recursion"

    def test_sl_kinds_default_to_ode_engine(self):
        spec = parse_config("kind = TsimVsBeta\ngrid = 1,2\n")
        assert spec.engine == "OdeSL"

    def test_linear_grid_form(self):
        spec = parse_config("kind = NstarVsBeta\ngrid = 0:1:5\n")
        assert np.allclose(spec.grid, [0.0, 0.25, 0.5, 0.75, 1.0])

    def test_comments_and_blank_lines(self):
        text = "# sweep over beta\n\nkind = NstarVsBeta  # inline\ngrid = 1,2\n"
        assert parse_config(text).kind == "NstarVsBeta"

    def test_unknown_key_named(self):
        with pytest.raises(ConfigInvalid, match="line 3.*'frequency'"):
            parse_config("kind = NstarVsBeta\ngrid = 1,2\nfrequency = 2\n")

    def test_missing_required_keys(self):
        with pytest.raises(ConfigInvalid, match="kind"):
            parse_config("grid = 1,2\n")
        with pytest.raises(ConfigInvalid, match="grid"):
            parse_config("kind = NstarVsBeta\n")

    def test_grid_must_increase(self):
        with pytest.raises(ConfigInvalid, match="increasing"):
            parse_config("kind = NstarVsBeta\ngrid = 2,1\n")

    def test_engine_kind_compatibility(self):
        with pytest.raises(ConfigInvalid, match="OdeSL"):
            parse_config("kind = NstarVsBeta\ngrid = 1,2\nengine = OdeSL\n")
        with pytest.raises(ConfigInvalid, match="BruteForce"):
            parse_config("kind = RandomEnsembleVsBeta\ngrid = 1,2\nengine = Recursion\n")

    def test_bad_numeric_values(self):
        with pytest.raises(ConfigInvalid, match="integer"):
            parse_config("kind = NstarVsBeta\ngrid = 1,2\nd = three\n")
        with pytest.raises(ConfigInvalid, match="number"):
            parse_config("kind = NstarVsBeta\ngrid = 1,2\nbeta = warm\n")

    def test_physical_parameter_guards(self):
        with pytest.raises(ConfigInvalid, match="positive"):
            parse_config("kind = NstarVsBeta\ngrid = 1,2\nj = 0\n")
        with pytest.raises(ConfigInvalid, match="gamma"):
            parse_config("kind = TsimVsBeta\ngrid = 1,2\ngamma = -1\n")
        with pytest.raises(ConfigInvalid, match="lo < hi"):
            parse_config("kind = RandomEnsembleVsBeta\ngrid = 1,2\nlo = 2\nhi = 1\n")
        with pytest.raises(ConfigInvalid, match="epsilon grid"):
            parse_config("kind = TsimVsEpsilon\ngrid = 0.5,2\n")


class TestRunSweep:
    def test_single_point_grid(self):
        spec = SweepSpec(kind="NstarVsBeta", grid=(5.0,), j_tau=math.pi / 2)
        records = run_sweep(spec)
        assert len(records) == 1
        assert records[0].reachable
        assert records[0].stderr == 0.0

    def test_nstar_vs_beta_decreases_toward_two(self):
        spec = SweepSpec(kind="NstarVsBeta", grid=tuple(np.linspace(0.5, 10, 12)), j_tau=math.pi / 2)
        values = [rec.value for rec in run_sweep(spec)]
        assert values[-1] == 2.0
        assert all(a >= b for a, b in zip(values, values[1:]))

    def test_tsim_vs_beta_qubit_monotone(self):
        spec = SweepSpec(kind="TsimVsBeta", grid=(0.5, 1.0, 2.0, 5.0, 10.0), d=2, gamma=1.0)
        values = [rec.value for rec in run_sweep(spec)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_tsim_vs_epsilon_grows_as_precision_tightens(self):
        spec = SweepSpec(kind="TsimVsEpsilon", grid=(1e-6, 1e-4, 1e-2), beta=2.0, gamma=1.0)
        values = [rec.value for rec in run_sweep(spec)]
        assert values[0] > values[1] > values[2]
        # roughly logarithmic in the precision target (equal decade gaps)
        gaps = (values[0] - values[1], values[1] - values[2])
        assert 0.6 < gaps[0] / gaps[1] < 1.4

    def test_unreachable_point_reports_cap(self):
        spec = SweepSpec(kind="NstarVsJtau", grid=(math.pi,), beta=2.0, n_max=40)
        rec = run_sweep(spec)[0]
        assert not rec.reachable
        assert rec.value == 40.0

    def test_deterministic_bytes(self):
        spec = SweepSpec(
            kind="RandomEnsembleVsBeta",
            grid=(1.0,),
            seed=77,
            repetitions=3,
            epsilon=0.05,
            n_max=2000,
            tau=100.0,
        )
        a = format_csv(run_sweep(spec))
        b = format_csv(run_sweep(spec))
        assert a == b

    def test_parallel_matches_serial(self):
        spec = SweepSpec(kind="NstarVsBeta", grid=(1.0, 3.0, 7.0), j_tau=math.pi / 4)
        assert format_csv(run_sweep(spec, parallel=3)) == format_csv(run_sweep(spec))

    def test_ensemble_mean_stability(self):
        base = dict(
            kind="RandomEnsembleVsBeta",
            grid=(1.0, 2.0),
            seed=5,
            epsilon=0.05,
            n_max=2000,
            tau=100.0,
        )
        small = run_sweep(SweepSpec(repetitions=6, **base))
        large = run_sweep(SweepSpec(repetitions=12, **base))
        for a, b in zip(small, large):
            assert a.stderr > 0.0
            assert abs(a.value - b.value) < 3.0 * max(a.stderr, b.stderr)


class TestCsv:
    def test_empty_records_header_only(self):
        buf = io.StringIO()
        emit_csv([], buf)
        assert buf.getvalue() == "point,value,stderr,reachable\n"

    def test_unreachable_sentinel_row(self):
        buf = io.StringIO()
        emit_csv([SweepRecord(1.0, 500.0, 0.0, False)], buf)
        assert buf.getvalue().splitlines()[1] == "1,500,0,false"

    def test_round_trip_is_byte_stable(self):
        records = [
            SweepRecord(0.5, 123.456789012345, 0.25, True),
            SweepRecord(1.0 / 3.0, 2.0, 0.0, False),
            SweepRecord(math.pi, 1e-12, 7.5e-3, True),
        ]
        text = format_csv(records)
        assert format_csv(parse_csv(text)) == text

    def test_twelve_significant_digits(self):
        text = format_csv([SweepRecord(1.0 / 3.0, 2.0 / 3.0, 0.0, True)])
        assert "0.333333333333,0.666666666667" in text

    def test_io_error_wrapped(self):
        with pytest.raises(IoError):
            emit_csv([], "/nonexistent-dir/out.csv")

    def test_writes_to_path(self, tmp_path):
        path = tmp_path / "out.csv"
        emit_csv([SweepRecord(1.0, 2.0, 0.0, True)], path)
        assert path.read_text() == "point,value,stderr,reachable\n1,2,0,true\n"
