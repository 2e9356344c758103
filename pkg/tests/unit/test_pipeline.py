"""Tests for the run configuration, command runner and CLI."""

import io
import json
import math
from pathlib import Path

import pandas as pd
import pytest

from chshtrap.core.constants import MAX_ENTANGLED_ALPHA, TSIRELSON_BOUND
from chshtrap.core.exceptions import ConfigurationError
from chshtrap.core.types import Evaluator, StateFamily
from chshtrap.pipeline import (
    EXIT_OK,
    EXIT_USAGE,
    Command,
    OutputFormat,
    RunPipeline,
    build_run_config,
    render,
    run,
)
from chshtrap.reservoir import TrappingReservoir
from scripts.chsh_trap import main


def run_to_text(config) -> tuple[int, str]:
    stream = io.StringIO()
    status = run(config, stream=stream)
    return status, stream.getvalue()


class TestBuildRunConfig:
    """Tests for config precedence and validation."""

    def test_yaml_defaults(self):
        """Without a file or flags the YAML defaults apply."""
        config = build_run_config("sweep")
        assert config.command is Command.SWEEP
        assert config.points == 201
        assert config.restarts == 32
        assert config.grid_density == 12
        assert config.lambda_ == 0.1
        assert config.family is StateFamily.PHI
        assert config.alpha == pytest.approx(MAX_ENTANGLED_ALPHA)

    def test_file_overrides_defaults(self, tmp_path):
        """A key=value file overrides the YAML defaults."""
        path = tmp_path / "run.conf"
        path.write_text("family=PSI\nr=0.9\npoints=11\nlambda=0.5\n")
        config = build_run_config("sweep", config_file=path)
        assert config.family is StateFamily.PSI
        assert config.r == 0.9
        assert config.points == 11
        assert config.lambda_ == 0.5

    def test_flags_override_file(self, tmp_path):
        """Flags override the file; None flags are ignored."""
        path = tmp_path / "run.conf"
        path.write_text("r=0.9\npoints=11\n")
        config = build_run_config("sweep", flags={"r": 0.8, "points": None}, config_file=path)
        assert config.r == 0.8
        assert config.points == 11

    def test_dashed_keys(self, tmp_path):
        """Dashed file keys map to their flag names."""
        path = tmp_path / "run.conf"
        path.write_text("grid-density=5\nboth-evaluators=true\n")
        config = build_run_config("oracle-check", config_file=path)
        assert config.grid_density == 5
        assert config.evaluators == [Evaluator.RESTRICTED, Evaluator.HORODECKI]

    def test_bad_value_names_key(self):
        """Out-of-range values name the offending key."""
        with pytest.raises(ConfigurationError) as exc:
            build_run_config("sweep", flags={"r": 1.5})
        assert exc.value.config_key == "r"

    def test_unknown_key(self, tmp_path):
        """Unknown file keys are rejected by name."""
        path = tmp_path / "run.conf"
        path.write_text("foo=1\n")
        with pytest.raises(ConfigurationError) as exc:
            build_run_config("sweep", config_file=path)
        assert exc.value.config_key == "foo"

    def test_missing_config_file(self, tmp_path):
        """A missing config file names the config key."""
        with pytest.raises(ConfigurationError) as exc:
            build_run_config("sweep", config_file=tmp_path / "absent.conf")
        assert exc.value.config_key == "config"

    def test_missing_yaml_falls_back(self, tmp_path):
        """A config dir without defaults.yaml uses constants."""
        config = build_run_config("sweep", config_dir=tmp_path)
        assert config.points == 201

    def test_purities(self):
        """Comma-separated purities parse and are range-checked."""
        config = build_run_config("sweep", flags={"purities": "1.0, 0.8"})
        assert config.purities == (1.0, 0.8)
        with pytest.raises(ConfigurationError) as exc:
            build_run_config("sweep", flags={"purities": "1.2"})
        assert exc.value.config_key == "purities"

    def test_reservoir(self):
        """Reservoir flags build the matching model."""
        config = build_run_config("evolve", flags={"model": "Trapping", "w": 0.9})
        assert isinstance(config.reservoir, TrappingReservoir)
        assert config.reservoir.w == 0.9


class TestRunPipeline:
    """Tests for command dispatch and rendering."""

    def test_sweep_csv(self):
        """Sweep writes one CSV row per grid point."""
        config = build_run_config("sweep", flags={"points": 11})
        status, text = run_to_text(config)
        assert status == EXIT_OK

        frame = pd.read_csv(io.StringIO(text))
        assert len(frame) == 11
        assert frame["x"].iloc[-1] == 1.0
        assert frame["restricted_max"].iloc[-1] == pytest.approx(TSIRELSON_BOUND, abs=1e-9)
        assert frame["horodecki_max"].isna().all()

    def test_output_is_deterministic(self):
        """Repeated runs produce identical bytes."""
        config = build_run_config("sweep", flags={"points": 21, "both_evaluators": True})
        first = run_to_text(config)[1]
        second = run_to_text(config)[1]
        assert first == second

    def test_figure_table(self):
        """Purities switch the sweep to the figure layout."""
        config = build_run_config("sweep", flags={"points": 11, "purities": "1,0.6"})
        frame = RunPipeline(config).run()
        assert list(frame.columns) == ["x", "r=1", "r=0.6"]

    def test_figure_table_both_evaluators(self):
        """Purities with both evaluators give one column pair per purity."""
        config = build_run_config(
            "sweep", flags={"points": 11, "purities": "1,0.6", "both_evaluators": True}
        )
        frame = RunPipeline(config).run()
        assert list(frame.columns) == [
            "x",
            "r=1:restricted",
            "r=1:horodecki",
            "r=0.6:restricted",
            "r=0.6:horodecki",
        ]
        assert frame["r=1:horodecki"].iloc[-1] == pytest.approx(TSIRELSON_BOUND)
        assert (frame["r=1:restricted"] <= frame["r=1:horodecki"] + 1e-9).all()

    def test_threshold(self):
        """Threshold reports one row per evaluator."""
        config = build_run_config("threshold", flags={"both_evaluators": True})
        frame = RunPipeline(config).run()
        assert list(frame["evaluator"]) == ["restricted", "horodecki"]
        assert frame["x_star"].iloc[0] == pytest.approx(0.8, abs=1e-9)
        assert frame["x_star"].iloc[1] == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-9)

    def test_ewl_json(self):
        """ewl JSON carries params, matrix and evaluation."""
        config = build_run_config("ewl", flags={"format": "json", "r": 0.5})
        status, text = run_to_text(config)
        assert status == EXIT_OK
        document = json.loads(text)
        assert document["params"]["r"] == 0.5
        assert len(document["state"]["elements"]) == 16
        assert document["evaluation"]["restricted_max"] == pytest.approx(TSIRELSON_BOUND * 0.5)

    def test_ewl_csv(self):
        """ewl CSV lists the sixteen matrix elements."""
        frame = RunPipeline(build_run_config("ewl")).run()
        assert len(frame) == 16
        assert frame["re"].sum() == pytest.approx(1.0 + 2 * 0.5)

    def test_evolve_json(self):
        """evolve JSON carries samples and the protection time."""
        config = build_run_config(
            "evolve",
            flags={"format": "json", "model": "trapping", "w": 0.95, "t1": 50.0, "samples": 11},
        )
        status, text = run_to_text(config)
        assert status == EXIT_OK
        document = json.loads(text)
        assert document["protection_time"] == {"restricted": None}
        assert len(document["samples"]) == 11
        assert all(s["violation_restricted"] for s in document["samples"])

    def test_critical_purity(self):
        """critical-purity reports r_crit."""
        config = build_run_config("critical-purity", flags={"family": "psi"})
        frame = RunPipeline(config).run()
        assert frame["r_crit"].iloc[0] == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-8)

    def test_oracle_check(self):
        """oracle-check passes on a few seeded states."""
        config = build_run_config(
            "oracle-check",
            flags={"n": 3, "restarts": 4, "grid_density": 6, "seed": 7, "state_seed": 7},
        )
        status, text = run_to_text(config)
        assert status == EXIT_OK
        frame = pd.read_csv(io.StringIO(text))
        assert len(frame) == 3
        assert (frame["discrepancy"] <= 1e-4).all()
        assert frame["restricted_le_horodecki"].all()

    def test_oracle_seed_only_moves_restarts(self):
        """--seed changes the restarts; the drawn states follow --state-seed."""

        def states(seed: int, state_seed: int) -> pd.DataFrame:
            flags = {"n": 2, "restarts": 4, "grid_density": 6}
            flags |= {"seed": seed, "state_seed": state_seed}
            frame = RunPipeline(build_run_config("oracle-check", flags=flags)).run()
            return frame[["restricted_max", "horodecki_max"]]

        pd.testing.assert_frame_equal(states(1, 5), states(2, 5))
        assert not states(1, 5).equals(states(1, 6))

    def test_summary_has_no_csv_form(self):
        """Summary documents refuse CSV."""
        with pytest.raises(ConfigurationError):
            render({"n": 1}, OutputFormat.CSV)

    def test_json_nulls(self):
        """Missing values are written as null."""
        text = render(pd.DataFrame({"x": [0.0], "value": [None]}), OutputFormat.JSON)
        assert json.loads(text) == [{"x": 0.0, "value": None}]

    def test_writes_to_path(self, tmp_path):
        """--out writes the file and nothing to the stream."""
        out = tmp_path / "nested" / "threshold.csv"
        config = build_run_config("threshold", flags={"out": out})
        status, text = run_to_text(config)
        assert status == EXIT_OK
        assert text == ""
        assert out.read_text().startswith("evaluator,exists,x_star")

    def test_domain_error_is_usage(self):
        """Invalid time grids exit with the usage status."""
        config = build_run_config("evolve", flags={"t0": 5.0, "t1": 1.0})
        assert run_to_text(config)[0] == EXIT_USAGE


class TestMain:
    """Tests for the command-line entry point."""

    def test_threshold(self, capsys):
        """The psi threshold prints as CSV on stdout."""
        status = main(["threshold", "--family", "psi", "--r", "1.0", "--alpha", "0.70710678"])
        assert status == EXIT_OK
        frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert frame["x_star"].iloc[0] == pytest.approx(0.7666, abs=1e-4)

    def test_bad_purity(self):
        """r above one exits with the usage status."""
        assert main(["sweep", "--r", "2.0"]) == EXIT_USAGE

    def test_bad_choice(self):
        """argparse rejects unknown families."""
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--family", "chi"])
        assert exc.value.code == 2

    def test_config_file(self, tmp_path, capsys):
        """--config feeds the run configuration."""
        path = tmp_path / "run.conf"
        path.write_text("points=5\n")
        assert main(["sweep", "--config", str(path), "--format", "json"]) == EXIT_OK
        records = json.loads(capsys.readouterr().out)
        assert [r["x"] for r in records] == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_missing_config_file(self, tmp_path):
        """A missing --config file exits with the usage status."""
        assert main(["sweep", "--config", str(Path(tmp_path) / "absent.conf")]) == EXIT_USAGE
