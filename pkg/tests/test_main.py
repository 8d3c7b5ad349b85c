# Copyright 2026 The genmom Team. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Test cases for the __main__ module."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from genmom import __main__
from genmom.config import GENMOM_THREADS_ENV
from genmom.core_objects import CheckRecord
from genmom.runner import Runner


CHEAP_WELL = ["--set", "n_max=2", "--set", "n=2001"]


@pytest.fixture
def runner() -> CliRunner:
    """Fixture for invoking command-line interfaces."""
    return CliRunner()


def test_main_help(runner: CliRunner) -> None:
    """It exits with a status code of zero."""
    result = runner.invoke(__main__.main, ["--help"])
    assert result.exit_code == 0
    assert "run" in result.output
    assert "curve" in result.output


def test_run_writes_report(runner: CliRunner, tmp_path: Path) -> None:
    """It writes a JSON report and exits with zero when nothing fails."""
    path = tmp_path / "well.json"
    result = runner.invoke(
        __main__.main, ["run", "--suite", "well", *CHEAP_WELL, "--out", str(path)]
    )
    assert result.exit_code == 0, result.output
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["schema"] == 1
    assert data["summary"]["fail"] == 0


def test_run_prints_csv(runner: CliRunner) -> None:
    """It prints the report when no output path is given."""
    result = runner.invoke(
        __main__.main, ["run", "--suite", "well", *CHEAP_WELL, "--format", "csv"]
    )
    assert result.exit_code == 0
    assert "check_id,status,tolerance,measured" in result.output
    assert "well.spectrum.a=0.0,pass" in result.output


@pytest.mark.parametrize(
    "args, message",
    [
        (["--suite", "well", "--set", "a=2"], "a out of domain |a| < 1"),
        (["--suite", "well", "--set", "alpha=0.1"], "Unknown parameter alpha"),
        (["--suite", "well", "--set", "a"], "Expected key=value"),
        (["--suite", "well", "--set", "n=many"], "n must be an integer"),
        (["--suite", "spectra"], "Invalid value"),
        (["--suite", "well", "--format", "yaml"], "Invalid value"),
        ([], "Missing option"),
    ],
)
def test_run_usage_errors(runner: CliRunner, args, message: str) -> None:
    """It exits with status 2 and names the offending input."""
    result = runner.invoke(__main__.main, ["run", *args])
    assert result.exit_code == 2
    assert message in result.output


@pytest.mark.parametrize(
    "args, message",
    [
        (["--suite", "commutator", "--set", "window=3"], "must be normalized"),
        (["--suite", "fourier", "--set", "n=9"], "must be normalized"),
    ],
)
def test_run_unusable_grid(runner: CliRunner, tmp_path: Path, args, message: str) -> None:
    """It exits with status 2 when the grid cannot resolve the suite states."""
    path = tmp_path / "report.json"
    result = runner.invoke(__main__.main, ["run", *args, "--out", str(path)])
    assert result.exit_code == 2
    assert message in result.output
    assert not path.exists()


def test_run_failed_check(runner: CliRunner, tmp_path: Path, monkeypatch) -> None:
    """It writes the report and exits with status 1 when a check fails."""
    failing = CheckRecord(
        check_id="well.spectrum.a=0.0",
        inputs={"a": 0.0},
        measured={"max_rel_error": 0.5},
        tolerance=1e-10,
        status="fail",
    )
    monkeypatch.setattr(Runner, "well", lambda self, params: [failing])
    path = tmp_path / "well.json"
    result = runner.invoke(__main__.main, ["run", "--suite", "well", "--out", str(path)])
    assert result.exit_code == 1
    assert "1 checks, 1 failed, 0 flagged" in result.output
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["summary"]["fail"] == 1
    assert data["records"][0]["status"] == "fail"


def test_run_invalid_threads(runner: CliRunner) -> None:
    """It rejects a bad thread cap from the environment."""
    result = runner.invoke(
        __main__.main, ["run", "--suite", "well", *CHEAP_WELL], env={GENMOM_THREADS_ENV: "0"}
    )
    assert result.exit_code == 2
    assert GENMOM_THREADS_ENV in result.output


def test_curve_prints_csv(runner: CliRunner) -> None:
    """It prints a two-column curve."""
    result = runner.invoke(
        __main__.main, ["curve", "--quantity", "density_b", "--set", "b=0.2", "--set", "points=4"]
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "x,value"
    assert len(lines) == 5


def test_curve_writes_file(runner: CliRunner, tmp_path: Path) -> None:
    """It writes the curve to the given path."""
    path = tmp_path / "psi.csv"
    result = runner.invoke(
        __main__.main,
        ["curve", "--quantity", "psi_n_imag", "--set", "level=3", "--set", "points=7", "--out", str(path)],
    )
    assert result.exit_code == 0
    assert result.output == ""
    assert len(path.read_text(encoding="utf-8").splitlines()) == 8


@pytest.mark.parametrize(
    "args",
    [
        ["--quantity", "entropy"],
        ["--quantity", "eta", "--set", "x_min=12"],
        ["--quantity", "psi_n_real", "--set", "level=0"],
        ["--quantity", "density_a", "--set", "a=-1"],
    ],
)
def test_curve_usage_errors(runner: CliRunner, args) -> None:
    """It exits with status 2 on bad curve requests."""
    result = runner.invoke(__main__.main, ["curve", *args])
    assert result.exit_code == 2
