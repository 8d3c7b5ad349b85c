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

"""Test suite for the scenario and result dataclasses."""

import pytest

from genmom.core_objects import (
    CommutatorScenario,
    DeformParamsP,
    DeformParamsX,
    Grid,
    IndependenceRoots,
)
from genmom.grid import gaussian, symmetric_grid


@pytest.fixture
def dummy_grid() -> Grid:
    """Fixture for a dummy Grid object."""
    return symmetric_grid(12.0, 2401)


def test_commutator_scenario_init(dummy_grid: Grid) -> None:
    """Test the CommutatorScenario object init."""
    state = gaussian(dummy_grid)
    scenario = CommutatorScenario(
        dp=DeformParamsP(a=0.0, b=0.0, k=1.0),
        dx=DeformParamsX(c=0.0, d=0.0, x=1.0),
        psi=state,
        phi=state,
    )
    assert scenario.is_standard


def test_commutator_scenario_not_normalized(dummy_grid: Grid) -> None:
    """Test that unnormalized states are rejected."""
    state = gaussian(dummy_grid)
    with pytest.raises(ValueError, match="must be normalized"):
        CommutatorScenario(
            dp=DeformParamsP(a=0.1, b=0.0, k=1.0),
            dx=DeformParamsX(c=0.0, d=0.0, x=1.0),
            psi=state,
            phi=2.0 * state,
        )


def test_commutator_scenario_wrong_types(dummy_grid: Grid) -> None:
    """Test the CommutatorScenario object init with swapped parameter objects."""
    state = gaussian(dummy_grid)
    with pytest.raises(TypeError):
        CommutatorScenario(
            dp=DeformParamsX(c=0.0, d=0.0, x=1.0),
            dx=DeformParamsX(c=0.0, d=0.0, x=1.0),
            psi=state,
            phi=state,
        )


def test_independence_roots_init() -> None:
    """Test the IndependenceRoots object init."""
    roots = IndependenceRoots(scan="x", fixed=1.0, lower=0.0, upper=3.0, roots=[1.0])
    assert roots.roots == [1.0]
    assert not roots.identically_zero
    assert roots.residuals is None


@pytest.mark.parametrize(
    "scan, lower, upper", [("y", 0.0, 1.0), ("x", 1.0, 1.0), ("k", 2.0, 0.0)]
)
def test_independence_roots_wrong_values(scan: str, lower: float, upper: float) -> None:
    """Test the IndependenceRoots object init with a bad axis or range."""
    with pytest.raises(ValueError):
        IndependenceRoots(scan=scan, fixed=0.0, lower=lower, upper=upper)
