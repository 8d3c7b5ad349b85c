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

"""Test cases for the eigenfunctions module."""

import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genmom.config import CASE_A, CASE_B, CASE_GENERAL
from genmom.core_objects import DeformParamsP, EigenfunctionSpec, Grid
from genmom.eigenfunctions import (
    I1_quadrature,
    I2_quadrature,
    Phi_of_x,
    W_of_x,
    W_on_grid,
    branch_angle_a,
    density_case_a,
    density_case_b,
    eigen_rate,
    eigen_residual,
    orthonormality_report,
    phase_case_a,
    phase_case_b,
    psi_case_a,
    psi_case_b,
    psi_general_numeric,
    sample_eigenfunction,
    v_of_x,
)
from genmom.grid import make_grid, sample


SQRT_2PI = math.sqrt(2.0 * math.pi)


@pytest.fixture
def grid() -> Grid:
    """Fixture for the 2001-point eigenfunction grid."""
    return make_grid(-5.0, 5.0, 2001)


def test_case_a_at_zero_deformation_is_plane_wave(grid: Grid) -> None:
    """Test that a = 0 gives e^{ikx} / sqrt(2 pi)."""
    values = psi_case_a(0.0, 1.7, grid.points)
    assert np.max(np.abs(values - np.exp(1.7j * grid.points) / SQRT_2PI)) < 1e-12


@pytest.mark.parametrize("a, k", [(0.5, 1.0), (-0.3, 2.0), (0.9, 0.7)])
def test_case_a_eigen_residual(grid: Grid, a: float, k: float) -> None:
    """Test the closed-form case-a eigenfunction against p_H."""
    psi = sample(lambda x: psi_case_a(a, k, x), grid)
    bound = 1e-6 if abs(a) < 0.9 else 1e-4
    assert eigen_residual(psi, DeformParamsP(a=a, b=0.0, k=k)) < bound


@given(a=st.floats(-0.6, 0.6), k=st.floats(0.5, 2.5))
@settings(max_examples=30, deadline=None)
def test_case_a_random_draws(a: float, k: float) -> None:
    """Property: case-a eigenfunctions solve the eigenvalue equation."""
    g = make_grid(-5.0, 5.0, 2001)
    psi = sample(lambda x: psi_case_a(a, k, x), g)
    assert eigen_residual(psi, DeformParamsP(a=a, b=0.0, k=k)) < 1e-6


@given(b=st.floats(-0.6, 0.6), k=st.floats(0.5, 2.5))
@settings(max_examples=30, deadline=None)
def test_case_b_random_draws(b: float, k: float) -> None:
    """Property: case-b eigenfunctions solve the eigenvalue equation."""
    g = make_grid(-5.0, 5.0, 2001)
    psi = sample(lambda x: psi_case_b(b, k, x), g)
    assert eigen_residual(psi, DeformParamsP(a=0.0, b=b, k=k)) < 1e-6


@pytest.mark.parametrize("parameter", [0.0, 0.4, -0.7])
def test_densities(grid: Grid, parameter: float) -> None:
    """Test that the squared moduli reproduce the density formulas."""
    k = 1.3
    assert np.max(np.abs(np.abs(psi_case_a(parameter, k, grid.points)) ** 2 - density_case_a(parameter, k, grid.points))) < 1e-12
    assert np.max(np.abs(np.abs(psi_case_b(parameter, k, grid.points)) ** 2 - density_case_b(parameter, k, grid.points))) < 1e-12


def test_density_at_zero_deformation() -> None:
    """Test the flat density 1 / (2 pi) of the plane wave."""
    assert density_case_a(0.0, 1.0, 2.0) == pytest.approx(1.0 / (2.0 * math.pi))


@pytest.mark.parametrize("a", [0.5, 0.9, -0.9])
def test_phase_is_continuous(a: float) -> None:
    """Test that the unwrapped phase has no jumps with 40 samples per period."""
    k = 1.0
    xs = np.linspace(-4.0 * math.pi, 4.0 * math.pi, 4 * 40 + 1)
    assert np.max(np.abs(np.diff(phase_case_a(a, k, xs)))) < math.pi / 2.0
    assert np.max(np.abs(np.diff(phase_case_b(a, k, xs)))) < math.pi / 2.0


def test_branch_angle_follows_identity_at_zero() -> None:
    """Test that the branch angle is the identity at a = 0."""
    u = np.linspace(-10.0, 10.0, 101)
    assert np.max(np.abs(branch_angle_a(0.0, u) - u)) < 1e-12


@pytest.mark.parametrize("x", [0.3, 1.7, 4.9, -2.6])
def test_quadrature_oracles(x: float) -> None:
    """Test the closed forms against exp(ik I(x)) across tangent cells."""
    a, k = 0.3, 2.0
    ratio_a = psi_case_a(a, k, x) / psi_case_a(a, k, 0.0)
    assert abs(ratio_a - np.exp(1j * k * I1_quadrature(a, k, x))) < 1e-7
    ratio_b = psi_case_b(a, k, x) / psi_case_b(a, k, 0.0)
    assert abs(ratio_b - np.exp(1j * k * I2_quadrature(a, k, x))) < 1e-7


def test_limits_converge_linearly(grid: Grid) -> None:
    """Test that a -> 0 and b -> 0 converge to the plane wave at rate O(parameter)."""
    plane = np.exp(1j * grid.points) / SQRT_2PI
    for closed in (psi_case_a, psi_case_b):
        gaps = [np.max(np.abs(closed(eps, 1.0, grid.points) - plane)) for eps in (1e-1, 1e-2, 1e-3)]
        assert gaps[1] / gaps[0] < 0.2
        assert gaps[2] / gaps[1] < 0.2
        assert gaps[2] < 5e-3


def test_zero_eigenvalue_is_degenerate(caplog) -> None:
    """Test that k = 0 returns the constant with a warning."""
    with caplog.at_level(logging.WARNING):
        values = psi_case_a(0.5, 0.0, np.array([0.0, 1.0]))
    assert np.all(values == 1.0 / SQRT_2PI)
    assert "degenerates" in caplog.text


@pytest.mark.parametrize("a", [1.0, -1.2])
def test_out_of_domain_deformation(a: float) -> None:
    """Test that |a| >= 1 is rejected."""
    with pytest.raises(ValueError):
        psi_case_a(a, 1.0, 0.0)
    with pytest.raises(ValueError):
        psi_case_b(a, 1.0, 0.0)


def test_eigen_rate_standard() -> None:
    """Test that the logarithmic derivative is ik without deformation."""
    assert eigen_rate(DeformParamsP(0.0, 0.0, 1.5), 0.7) == pytest.approx(1.5j)


def test_general_numeric(grid: Grid) -> None:
    """Test the ODE eigenfunction for a generic deformation."""
    result = psi_general_numeric(0.4, 0.3, 1.0, grid)
    assert result.converged
    assert result.residual < 1e-5


@pytest.mark.parametrize("a, b, closed", [(0.5, 0.0, psi_case_a), (0.0, 0.5, psi_case_b)])
def test_general_numeric_matches_closed_forms(grid: Grid, a: float, b: float, closed) -> None:
    """Test the ODE eigenfunction against the closed forms, aligned at x = 0."""
    numeric = psi_general_numeric(a, b, 1.0, grid).psi.values
    reference = closed(max(a, b), 1.0, grid.points)
    origin = grid.index_of(0.0)
    gap = np.max(np.abs(numeric / numeric[origin] - reference / reference[origin]))
    assert gap < 1e-6


@pytest.mark.parametrize("case", [CASE_A, CASE_B, CASE_GENERAL])
def test_sample_eigenfunction(grid: Grid, case: str) -> None:
    """Test sampling through an EigenfunctionSpec."""
    spec = EigenfunctionSpec(
        case=case,
        a=0.3 if case != CASE_B else 0.0,
        b=0.2 if case != CASE_A else 0.0,
        k=1.0,
    )
    psi = sample_eigenfunction(spec, grid)
    assert eigen_residual(psi, spec.deform) < 1e-5


def test_v_of_x_matches_tangent_form() -> None:
    """Test the pole-free evaluation of v against the tangent expression."""
    a, k, kp, x = 0.3, 1.0, 2.5, 0.3
    tu, tp = math.tan(k * x / 2.0), math.tan(kp * x / 2.0)
    expected = (tu - tp) / (1.0 - a * (tu + tp) + tu * tp)
    assert v_of_x(a, k, kp, x) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("a", [0.0, 0.3, -0.6])
def test_phase_difference(a: float) -> None:
    """Test that Phi is the difference of the two continuous phases."""
    x = np.linspace(-40.0, 40.0, 4001)
    expected = phase_case_a(a, 1.0, x) - phase_case_a(a, 2.5, x)
    assert np.max(np.abs(Phi_of_x(a, 1.0, 2.5, x) - expected)) < 1e-9


def test_W(grid: Grid) -> None:
    """Test W against its quadrature and its a = 0 value."""
    assert W_of_x(0.0, 1.0, 2.5, 1.3) == pytest.approx(1.3, abs=1e-12)
    running = W_on_grid(0.4, 1.0, 2.5, grid)
    index = grid.index_of(3.0)
    assert running[index] == pytest.approx(W_of_x(0.4, 1.0, 2.5, 3.0), abs=1e-8)
    assert np.all(np.diff(running) > 0)


def test_orthonormality_standard() -> None:
    """Test the Dirichlet-kernel overlap at a = 0."""
    k, kp, window = 1.0, 2.5, 20.0
    report = orthonormality_report(0.0, k, kp, window, 4001)
    expected = math.sin((k - kp) * window) / (math.pi * (k - kp))
    assert abs(report.overlap - expected) < 1e-8
    assert report.phase_identity_defect < 1e-10
    assert report.diagonal.real == pytest.approx(window / math.pi, rel=1e-10)


def test_orthonormality_deformed() -> None:
    """Test the off-diagonal concentration for a = 0.3 on X = 40."""
    report = orthonormality_report(0.3, 1.0, 2.5, 40.0, 8001)
    assert report.off_diagonal_ratio < 0.05
    assert report.phase_identity_defect > 0
