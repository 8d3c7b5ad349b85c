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

"""Test cases for the squarewell module."""

import logging
import math

import numpy as np
import pytest

from genmom.core_objects import Grid, WellConfig
from genmom.grid import make_grid
from genmom.squarewell import (
    boundary_residual,
    branch_eigen_residuals,
    confirmed_roots,
    norm_report,
    predicted_level_residual,
    psi_n,
    psi_n_values,
    solve_level,
    spectrum,
    squared_eigen_residual,
    theta_phases,
)


@pytest.fixture
def standard() -> WellConfig:
    """Fixture for the undeformed unit well."""
    return WellConfig(L=1.0, m=1.0, a=0.0, n_max=5)


@pytest.fixture
def well_grid() -> Grid:
    """Fixture for the grid spanning the unit well."""
    return make_grid(0.0, 1.0, 8001)


def test_standard_spectrum_roots(standard: WellConfig) -> None:
    """Test that the scan recovers n pi exactly at a = 0."""
    roots = confirmed_roots(standard, 5.5 * math.pi, 2000)
    assert len(roots) == 5
    for n, root in enumerate(roots, start=1):
        assert root == pytest.approx(n * math.pi, abs=1e-8)


@pytest.mark.parametrize("a", [0.3, 0.6, 0.9])
def test_deformed_level_residuals(a: float) -> None:
    """Test the boundary residual at n pi against its closed form."""
    cfg = WellConfig(L=1.0, m=1.0, a=a, n_max=5)
    for n in range(1, 6):
        measured = boundary_residual(cfg, n * math.pi)[0]
        assert measured == pytest.approx(predicted_level_residual(a, n), abs=1e-10)


def test_deformed_sweep_reports_no_spurious_roots() -> None:
    """Test that residual minima above tolerance are not counted as roots."""
    cfg = WellConfig(L=1.0, m=1.0, a=0.3, n_max=5)
    roots = confirmed_roots(cfg, 5.5 * math.pi, 2000)
    assert all(boundary_residual(cfg, r)[0] < 1e-8 for r in roots)


def test_spectrum(standard: WellConfig) -> None:
    """Test levels and energies of the undeformed well."""
    levels = spectrum(standard)
    assert [level.n for level in levels] == [1, 2, 3, 4, 5]
    assert all(level.confirmed for level in levels)
    assert levels[2].E == pytest.approx((3.0 * math.pi) ** 2 / 2.0)


def test_unconfirmed_levels_warn(caplog) -> None:
    """Test that deformed levels are reported, with a warning, not dropped."""
    cfg = WellConfig(L=1.0, m=1.0, a=0.3, n_max=2)
    with caplog.at_level(logging.WARNING):
        levels = spectrum(cfg)
    assert len(levels) == 2
    assert not levels[0].confirmed
    assert "not confirmed" in caplog.text


def test_theta_phases_are_mirrored() -> None:
    """Test theta2(0) = -theta1(0)."""
    theta1, theta2 = theta_phases(0.6, math.pi, 0.0)
    assert theta2 == -theta1


@pytest.mark.parametrize("a", [0.0, 0.3, 0.9])
def test_left_wall_is_exact(a: float, well_grid) -> None:
    """Test that psi_n vanishes exactly at x = 0 for every a."""
    cfg = WellConfig(L=1.0, m=1.0, a=a, n_max=5)
    for n in range(1, 6):
        assert psi_n(cfg, n, well_grid).values[0] == 0


def test_standard_eigenfunctions(standard: WellConfig, well_grid) -> None:
    """Test psi_n = sqrt(2/L) sin(n pi x / L) at a = 0."""
    for n in range(1, 6):
        state = psi_n(standard, n, well_grid)
        expected = math.sqrt(2.0) * np.sin(n * math.pi * well_grid.points)
        assert np.max(np.abs(state.values - expected)) < 1e-12
        assert abs(state.values[-1]) < 1e-8
        assert norm_report(state) == pytest.approx(1.0, abs=1e-10)


def test_small_deformation_limit(well_grid) -> None:
    """Test the a -> 0 limit of the deformed eigenfunctions."""
    cfg = WellConfig(L=1.0, m=1.0, a=1e-6, n_max=5)
    for n in range(1, 6):
        values = psi_n_values(cfg, n, well_grid.points)
        expected = math.sqrt(2.0) * np.sin(n * math.pi * well_grid.points)
        assert np.max(np.abs(values - expected)) < 1e-5


@pytest.mark.parametrize("a", [0.0, 0.3, 0.6])
def test_branch_eigen_residuals(a: float, well_grid) -> None:
    """Test that each branch is an eigenfunction of its own operator."""
    cfg = WellConfig(L=1.0, m=1.0, a=a, n_max=3)
    for n in range(1, 4):
        plus, minus = branch_eigen_residuals(cfg, n, well_grid)
        assert plus < 1e-6
        assert minus < 1e-6


def test_squared_eigen_residual(standard: WellConfig, well_grid) -> None:
    """Test p_H**2 psi_n = k0**2 psi_n at a = 0."""
    for n in range(1, 6):
        assert squared_eigen_residual(standard, n, well_grid) < 1e-5


def test_solve_level_attaches_eigenfunction(standard: WellConfig, well_grid) -> None:
    """Test that solve_level carries the sampled level."""
    level = solve_level(standard, 2, well_grid)
    assert level.confirmed
    assert level.psi_n is not None
    assert level.k0 == pytest.approx(2.0 * math.pi)


def test_wrong_grid_and_level(standard: WellConfig) -> None:
    """Test the grid span and level range checks."""
    with pytest.raises(ValueError, match="span"):
        psi_n(standard, 1, make_grid(-1.0, 1.0, 101))
    with pytest.raises(ValueError, match="Level"):
        psi_n_values(standard, 6, 0.5)


def test_out_of_domain_deformation() -> None:
    """Test the |a| < 1 validation message."""
    with pytest.raises(ValueError, match=r"a out of domain \|a\| < 1"):
        WellConfig(L=1.0, m=1.0, a=2.0, n_max=5)
