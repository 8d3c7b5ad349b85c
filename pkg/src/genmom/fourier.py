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

"""Fourier pair between position and momentum grids by direct quadrature."""

import logging
from typing import Union

import numpy as np
from scipy.integrate import simpson

from .config import (
    DEFAULT_NORMALIZATION,
    EDGE_DECAY_TOL,
    NORMALIZATION_TOL,
    TRANSFORM_CHUNK_SIZE,
)
from .core_objects import FtPairResult, Grid, GridFunction
from .grid import derivative, edge_magnitude, integrate


logger = logging.getLogger(__name__)


def transform_at(
    gf: GridFunction, points: Union[float, np.ndarray], sign: int
) -> np.ndarray:
    """
    Evaluate `(1/sqrt(2 pi)) * integral gf(s) exp(sign * i t s) ds` at each t.

    The integral runs over the window of `gf` with composite Simpson
    weights. Targets are processed in blocks so that memory stays bounded
    on large grids.

    Parameters
    ----------
    gf : GridFunction
        The integrand samples, on the source axis.
    points : float or np.ndarray
        The conjugate-axis values t.
    sign : int
        +1 for the position-space (forward) kernel, -1 for the inverse.

    Returns
    -------
    np.ndarray
        Complex transform values, one per target.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, not {sign}")
    targets = np.atleast_1d(np.asarray(points, dtype=float))
    s = gf.grid.points
    h = gf.grid.spacing
    out = np.empty(targets.shape[0], dtype=complex)
    for start in range(0, targets.shape[0], TRANSFORM_CHUNK_SIZE):
        block = targets[start : start + TRANSFORM_CHUNK_SIZE]
        integrand = gf.values[np.newaxis, :] * np.exp(sign * 1j * np.outer(block, s))
        out[start : start + block.shape[0]] = simpson(
            integrand.real, dx=h, axis=1
        ) + 1j * simpson(integrand.imag, dx=h, axis=1)
    return DEFAULT_NORMALIZATION * out


def _edge_check(gf: GridFunction, name: str) -> float:
    edge = edge_magnitude(gf)
    if edge > EDGE_DECAY_TOL:
        logger.warning(
            f"{name} does not decay at the window edges (|f| = {edge:.3e}), truncation error expected"
        )
    return edge


def forward_ft(beta: GridFunction, x_grid: Grid) -> GridFunction:
    """
    Position-space function from momentum-space samples.

    `alpha(x) = (1/sqrt(2 pi)) integral beta(k) e^{ikx} dk`, evaluated at
    every point of `x_grid`. A warning is logged when `beta` does not decay
    at the edges of its window.

    Parameters
    ----------
    beta : GridFunction
        Samples on a k-axis grid.
    x_grid : Grid
        The target position grid.

    Returns
    -------
    GridFunction
        alpha on `x_grid`.
    """
    _edge_check(beta, "beta")
    return GridFunction(grid=x_grid, values=transform_at(beta, x_grid.points, 1))


def inverse_ft(alpha: GridFunction, k_grid: Grid) -> GridFunction:
    """Momentum-space function `(1/sqrt(2 pi)) integral alpha(x) e^{-ikx} dx`."""
    _edge_check(alpha, "alpha")
    return GridFunction(grid=k_grid, values=transform_at(alpha, k_grid.points, -1))


def ft_pair(source: GridFunction, target_grid: Grid, inverse: bool) -> FtPairResult:
    """
    Transform `source` and keep the edge-decay flag alongside the result.

    Parameters
    ----------
    source : GridFunction
        The function to transform.
    target_grid : Grid
        The conjugate-axis grid.
    inverse : bool
        True for the e^{-ikx} kernel, False for e^{ikx}.

    Returns
    -------
    FtPairResult
        Source, target, and the edge-decay diagnostics.
    """
    target = inverse_ft(source, target_grid) if inverse else forward_ft(source, target_grid)
    edge = edge_magnitude(source)
    return FtPairResult(
        source=source,
        target=target,
        edge_magnitude=edge,
        edge_flagged=edge > EDGE_DECAY_TOL,
    )


def verify_momentum_correspondence(alpha: GridFunction, k_grid: Grid) -> float:
    """
    Defect of the correspondence k <-> -i d/dx.

    Returns `max_k |k * F[alpha](k) - F[-i alpha'](k)|` with `F` the inverse
    transform. Non-decaying inputs give a large defect, which is returned
    rather than rejected.
    """
    lhs = k_grid.points * inverse_ft(alpha, k_grid).values
    rhs = inverse_ft(-1j * derivative(alpha), k_grid).values
    return float(np.max(np.abs(lhs - rhs)))


def verify_position_correspondence(beta: GridFunction, x_grid: Grid) -> float:
    """Defect of the correspondence x <-> i d/dk, the momentum-space twin."""
    lhs = x_grid.points * forward_ft(beta, x_grid).values
    rhs = forward_ft(1j * derivative(beta), x_grid).values
    return float(np.max(np.abs(lhs - rhs)))


def _check_normalized(gf: GridFunction, name: str) -> GridFunction:
    density = gf.abs2()
    norm2 = integrate(density).real
    if abs(norm2 - 1.0) > NORMALIZATION_TOL:
        raise ValueError(
            f"{name} must be normalized, integral of |{name}|**2 is {norm2}"
        )
    return density


def eta(phi: GridFunction, x_grid: Grid) -> GridFunction:
    """
    Forward transform of the momentum density |phi|**2.

    Parameters
    ----------
    phi : GridFunction
        A normalized state on a k-axis grid.
    x_grid : Grid
        The position grid to evaluate on.

    Raises
    ------
    ValueError
        If `phi` is not normalized to within 1e-8.

    Returns
    -------
    GridFunction
        eta on `x_grid`.
    """
    density = _check_normalized(phi, "phi")
    return GridFunction(grid=x_grid, values=transform_at(density, x_grid.points, 1))


def sigma(psi: GridFunction, k_grid: Grid) -> GridFunction:
    """Inverse transform of the position density |psi|**2, on `k_grid`."""
    density = _check_normalized(psi, "psi")
    return GridFunction(grid=k_grid, values=transform_at(density, k_grid.points, -1))


def eta_at(phi: GridFunction, x: Union[float, np.ndarray]) -> np.ndarray:
    """eta at arbitrary positions."""
    return transform_at(_check_normalized(phi, "phi"), x, 1)


def sigma_at(psi: GridFunction, k: Union[float, np.ndarray]) -> np.ndarray:
    """sigma at arbitrary wavenumbers."""
    return transform_at(_check_normalized(psi, "psi"), k, -1)
