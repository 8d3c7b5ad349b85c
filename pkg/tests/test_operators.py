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

"""Test cases for the operators module."""

import logging
import math
from typing import Tuple

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genmom.config import (
    HERMITICITY_GRID,
    HERMITICITY_LABEL_RANGE,
    PACKET_CENTER_RANGE,
    PACKET_MOMENTUM_RANGE,
    PACKET_WIDTH_RANGE,
)
from genmom.core_objects import DeformParamsP, DeformParamsX, Grid, GridFunction, KernelParamsP, KernelParamsX
from genmom.grid import gaussian, interior, make_grid, normalize, sample, symmetric_grid
from genmom.operators import (
    apply_operator,
    apply_p,
    apply_p0,
    apply_p_dagger,
    apply_pH,
    apply_x0,
    apply_x_dagger,
    apply_x_momentum,
    apply_xH,
    hermiticity_defect,
)


@pytest.fixture
def grid() -> Grid:
    """Fixture for a grid on which packets vanish at the edges."""
    return symmetric_grid(15.0, 3001)


@pytest.fixture
def states(grid: Grid) -> Tuple[GridFunction, GridFunction]:
    """Fixture for two distinct normalized wave packets."""
    phi = normalize(gaussian(grid, center=0.5, width=1.0, momentum=0.7))
    psi = normalize(gaussian(grid, center=-0.3, width=0.8, momentum=-0.5))
    return phi, psi


def _interior_gap(left: GridFunction, right: np.ndarray) -> float:
    return float(np.max(np.abs(interior(left.values - right))))


def test_standard_momentum_on_plane_wave() -> None:
    """Test -i d/dx e^{ikx} = k e^{ikx}."""
    g = make_grid(-5.0, 5.0, 2001)
    wave = sample(lambda x: np.exp(1.3j * x), g)
    assert _interior_gap(apply_p0(wave), 1.3 * wave.values) < 1e-9


def test_standard_position_on_plane_wave() -> None:
    """Test i d/dk e^{-ikx0} = x0 e^{-ikx0}."""
    g = make_grid(-5.0, 5.0, 2001)
    wave = sample(lambda k: np.exp(-2j * k), g)
    assert _interior_gap(apply_x0(wave), 2.0 * wave.values) < 1e-8


def test_p_and_adjoint_at_zero_k() -> None:
    """Test p and its adjoint on x**2 for real C and k = 0."""
    g = make_grid(-2.0, 2.0, 401)
    square = sample(lambda x: x**2, g)
    p = KernelParamsP(C=0.7, k=0.0)
    expected = 2.0 * g.points
    assert np.max(np.abs(apply_p(square, p).values - (0.7 - 1j) * expected)) < 1e-10
    assert np.max(np.abs(apply_p_dagger(square, p).values + (0.7 + 1j) * expected)) < 1e-10


def test_hermitian_parts(states) -> None:
    """Test p_H = (p + p^dagger) / 2 and x_H = (x + x^dagger) / 2."""
    _, psi = states
    dp = DeformParamsP(a=0.3, b=-0.4, k=1.2)
    dx = DeformParamsX(c=-0.5, d=0.2, x=0.8)
    p, q = dp.kernel(), dx.kernel()
    mean_p = 0.5 * (apply_p(psi, p) + apply_p_dagger(psi, p))
    mean_x = 0.5 * (apply_x_momentum(psi, q) + apply_x_dagger(psi, q))
    assert np.max(np.abs(apply_pH(psi, dp).values - mean_p.values)) < 1e-10
    assert np.max(np.abs(apply_xH(psi, dx).values - mean_x.values)) < 1e-10


def test_standard_deformation_recovers_standard_operators(states) -> None:
    """Test that (a, b) = (0, 0) and (c, d) = (0, 0) give -i d/dx and i d/dk."""
    _, psi = states
    assert np.max(np.abs(apply_pH(psi, DeformParamsP(0.0, 0.0, 1.0)).values - apply_p0(psi).values)) < 1e-12
    assert np.max(np.abs(apply_xH(psi, DeformParamsX(0.0, 0.0, 1.0)).values - apply_x0(psi).values)) < 1e-12


@given(
    radius=st.floats(0.0, 0.9),
    angle=st.floats(0.0, 2.0 * math.pi),
    label=st.floats(*HERMITICITY_LABEL_RANGE),
    first=st.tuples(
        st.floats(*PACKET_CENTER_RANGE), st.floats(*PACKET_WIDTH_RANGE), st.floats(*PACKET_MOMENTUM_RANGE)
    ),
    second=st.tuples(
        st.floats(*PACKET_CENTER_RANGE), st.floats(*PACKET_WIDTH_RANGE), st.floats(*PACKET_MOMENTUM_RANGE)
    ),
)
@settings(max_examples=25, deadline=None)
def test_hermitian_operators_have_no_adjoint_defect(
    radius: float,
    angle: float,
    label: float,
    first: Tuple[float, float, float],
    second: Tuple[float, float, float],
) -> None:
    """Property: p_H and x_H are Hermitian for every deformation and packet pair."""
    g = make_grid(*HERMITICITY_GRID)
    phi = normalize(gaussian(g, center=first[0], width=first[1], momentum=first[2]))
    psi = normalize(gaussian(g, center=second[0], width=second[1], momentum=second[2]))
    a, b = radius * math.cos(angle), radius * math.sin(angle)
    p_h = hermiticity_defect("pH", DeformParamsP(a=a, b=b, k=label), phi, psi)
    x_h = hermiticity_defect("xH", DeformParamsX(c=b, d=a, x=label), phi, psi)
    assert not p_h.flagged and not x_h.flagged
    assert p_h.defect < 1e-6
    assert x_h.defect < 1e-6


def test_non_hermitian_defect_gaussian() -> None:
    """Test the adjoint defect |k| |Re C| e^{-k**2/4} of p on the unit Gaussian."""
    g = symmetric_grid(12.0, 2401)
    unit = gaussian(g)
    result = hermiticity_defect("p", KernelParamsP(C=1.0, k=1.0), unit, unit)
    assert result.defect == pytest.approx(math.exp(-0.25), abs=1e-6)


def test_non_hermitian_defect_packets(states) -> None:
    """Test that p and x are not Hermitian."""
    phi, psi = states
    assert hermiticity_defect("p", KernelParamsP(C=0.5 + 0.5j, k=1.0), phi, psi).defect > 1e-2
    assert hermiticity_defect("x", KernelParamsX(D=0.5 - 0.5j, x=1.0), phi, psi).defect > 1e-2


def test_non_hermitian_momentum_hermitian_corner(states) -> None:
    """Test that p with k = 0 and imaginary C reduces to the Hermitian -i(1 - Im C) d/dx."""
    phi, psi = states
    p = KernelParamsP(C=0.5j, k=0.0)
    assert np.max(np.abs(apply_p(psi, p).values - 0.5 * apply_p0(psi).values)) < 1e-12
    assert hermiticity_defect("p", p, phi, psi).defect < 1e-7


@pytest.mark.parametrize(
    "operator, params",
    [
        ("p0", None),
        ("p", KernelParamsP(C=0.5 + 0.5j, k=1.0)),
        ("p_dagger", KernelParamsP(C=-0.3 + 1.2j, k=-0.7)),
        ("pH", DeformParamsP(a=0.3, b=-0.4, k=1.2)),
        ("x0", None),
        ("x", KernelParamsX(D=0.5 - 0.5j, x=1.0)),
        ("x_dagger", KernelParamsX(D=2.0, x=-0.4)),
        ("xH", DeformParamsX(c=-0.5, d=0.2, x=0.8)),
    ],
)
def test_operators_are_linear(states, operator: str, params) -> None:
    """Test A(alpha phi + beta psi) = alpha A phi + beta A psi for every operator."""
    phi, psi = states
    alpha, beta = 1.5 - 0.5j, -0.25 + 2j
    whole = apply_operator(operator, phi * alpha + psi * beta, params).values
    parts = alpha * apply_operator(operator, phi, params).values + beta * apply_operator(operator, psi, params).values
    assert np.max(np.abs(whole - parts)) < 1e-13 * (1.0 + np.max(np.abs(parts)))


def test_hermitian_momentum_is_continuous_at_standard_deformation(states) -> None:
    """Test that p_H approaches p0 linearly as (a, b) -> (0, 0)."""
    _, psi = states
    standard = apply_p0(psi).values
    gaps = [
        float(np.max(np.abs(apply_pH(psi, DeformParamsP(a=eps, b=0.0, k=1.0)).values - standard)))
        for eps in (1e-1, 1e-2, 1e-3)
    ]
    for coarse, fine in zip(gaps, gaps[1:]):
        assert coarse / fine == pytest.approx(10.0, rel=1e-6)
    assert gaps[0] > 0.0


def test_non_decaying_states_are_flagged(caplog) -> None:
    """Test that boundary terms are flagged instead of rejected."""
    g = make_grid(-5.0, 5.0, 1001)
    constant = sample(lambda x: 1.0, g)
    with caplog.at_level(logging.WARNING):
        result = hermiticity_defect("pH", DeformParamsP(0.3, 0.0, 1.0), constant, constant)
    assert result.flagged
    assert result.edge_magnitude == 1.0
    assert "window edges" in caplog.text


def test_apply_operator_dispatch(states) -> None:
    """Test operator lookup by tag."""
    _, psi = states
    dp = DeformParamsP(0.2, 0.1, 0.5)
    assert np.array_equal(apply_operator("pH", psi, dp).values, apply_pH(psi, dp).values)
    assert np.array_equal(apply_operator("p0", psi).values, apply_p0(psi).values)


def test_apply_operator_errors(states) -> None:
    """Test unknown tags and missing parameters."""
    _, psi = states
    with pytest.raises(ValueError, match="not a valid operator"):
        apply_operator("q", psi)
    with pytest.raises(ValueError, match="needs parameters"):
        apply_operator("pH", psi)
