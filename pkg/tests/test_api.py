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

"""Test suite for the API functions."""

import json
from pathlib import Path

import pytest

from genmom import Runner, emit_curve, run
from genmom.core_objects import Report


def test_api_run(tmp_path: Path) -> None:
    """Test the run function."""
    path = tmp_path / "report.json"
    report = run("well", params={"n_max": 2, "n": 2001}, output_path=str(path), threads=2)
    assert isinstance(report, Report)
    assert report.suite == "well"
    assert report.exit_code == 0
    assert json.loads(path.read_text(encoding="utf-8")) == report.to_dict()


def test_api_run_fills_defaults() -> None:
    """Test that omitted parameters fall back to the defaults."""
    report = run("well", params={"n_max": 1, "n": 1001}, threads=1)
    assert report.environment["params"]["a"] == 0.5
    assert report.environment["params"]["n_max"] == 1


@pytest.mark.parametrize(
    "kwargs, message",
    [
        ({"suite": "spectra"}, "is not a valid suite"),
        ({"suite": "well", "format": "yaml"}, "is not a valid format"),
        ({"suite": "well", "params": {"a": 2.0}}, "a out of domain"),
        ({"suite": "kernel", "params": {"alpha": 0.1}}, "Unknown parameter alpha"),
    ],
)
def test_api_run_invalid(kwargs, message: str) -> None:
    """Test that invalid configurations are rejected before any work is done."""
    with pytest.raises(ValueError, match=message):
        run(**kwargs)


def test_api_emit_curve(tmp_path: Path) -> None:
    """Test the emit_curve function."""
    path = tmp_path / "density.csv"
    text = emit_curve("density_a", params={"a": 0.3, "points": 3}, output_path=str(path))
    assert path.read_text(encoding="utf-8") == text
    lines = text.splitlines()
    assert lines[0] == "x,value"
    assert len(lines) == 4


def test_api_emit_curve_invalid() -> None:
    """Test that invalid curve requests are rejected."""
    with pytest.raises(ValueError):
        emit_curve("density_c")
    with pytest.raises(ValueError):
        emit_curve("density_a", params={"a": 1.0})
    with pytest.raises(ValueError):
        emit_curve("eta", params={"x_min": 20.0})


def test_api_exports() -> None:
    """Test the package-level exports."""
    import genmom

    assert genmom.Runner is Runner
    assert isinstance(genmom.__version__, str)
