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

"""Generalized transform kernels rebuilt from their first-order equations."""

import logging
from typing import Callable, Union

import numpy as np

from .config import POLE_GUARD
from .core_objects import Grid, GridFunction, KernelParamsP, KernelParamsX
from .grid import cumulative_integrate, derivative, interior, sample


logger = logging.getLogger(__name__)

PointwiseFunction = Callable[[np.ndarray], np.ndarray]
ArrayLike = Union[float, np.ndarray]


def f_of_x(p: KernelParamsP, x: ArrayLike) -> np.ndarray:
    """Position-space kernel solution `C e^{ikx} - i`."""
    return p.C * np.exp(1j * p.k * np.asarray(x, dtype=float)) - 1j


def h_of_k(p: KernelParamsX, k: ArrayLike) -> np.ndarray:
    """Momentum-space kernel solution `D e^{-ikx} + i`."""
    return p.D * np.exp(-1j * np.asarray(k, dtype=float) * p.x) + 1j


def _sample_nonvanishing(fn: PointwiseFunction, g: Grid, name: str) -> GridFunction:
    sampled = sample(fn, g)
    smallest = float(np.min(np.abs(sampled.values)))
    if smallest <= POLE_GUARD:
        where = g.points[int(np.argmin(np.abs(sampled.values)))]
        raise ValueError(
            f"{name} vanishes on the grid near {where} (|{name}| = {smallest:.3e}), the kernel integrand has a pole"
        )
    return sampled


def _anchored_exponential(
    exponent: GridFunction, anchor: float, target: Callable[[float], complex]
) -> GridFunction:
    """exp(-exponent), rescaled so that its value at the anchor equals `target(anchor)`."""
    g = exponent.grid
    index = g.index_of(anchor)
    if index is None:
        index = 0
        anchor = g.x_min
    shifted = exponent.values - exponent.values[index]
    return exponent.with_values(target(anchor) * np.exp(-shifted))


def reconstruct_G(
    f: PointwiseFunction, k: float, g: Grid, anchor: float = 0.0
) -> GridFunction:
    """
    Rebuild G(k, x) = exp(-integral (k + f') / f dx) on a position grid.

    The derivative f' is taken numerically from the samples of `f`, so the
    reconstruction checks the kernel equation rather than restating it. The
    integration constant makes G equal e^{-ik x} at `anchor`, which is 1 at
    the default anchor 0. If the anchor is not a grid point, `x_min` is used.

    Parameters
    ----------
    f : callable
        Vectorized f(x).
    k : float
        The momentum label of the kernel.
    g : Grid
        The position grid.
    anchor : float
        Position where the integration constant is fixed.

    Raises
    ------
    ValueError
        If f vanishes (|f| <= 1e-12) anywhere on the grid.

    Returns
    -------
    GridFunction
        The reconstructed kernel.
    """
    fs = _sample_nonvanishing(f, g, "f")
    integrand = fs.with_values((k + derivative(fs).values) / fs.values)
    return _anchored_exponential(
        cumulative_integrate(integrand), anchor, lambda x0: np.exp(-1j * k * x0)
    )


def reconstruct_Gtilde(
    h: PointwiseFunction, x: float, g: Grid, anchor: float = 0.0
) -> GridFunction:
    """
    Rebuild G~(k, x) = exp(-integral (x + h') / h dk) on a momentum grid.

    The mirror of `reconstruct_G`: the constant makes G~ equal e^{ik x} at
    the anchor wavenumber.
    """
    hs = _sample_nonvanishing(h, g, "h")
    integrand = hs.with_values((x + derivative(hs).values) / hs.values)
    return _anchored_exponential(
        cumulative_integrate(integrand), anchor, lambda k0: np.exp(1j * k0 * x)
    )


def kernel_defect_G(G: GridFunction, k: float) -> float:
    """Max pointwise distance from the plane wave e^{-ikx}."""
    return float(np.max(np.abs(G.values - np.exp(-1j * k * G.x))))


def kernel_defect_Gtilde(Gt: GridFunction, x: float) -> float:
    """Max pointwise distance from the plane wave e^{ikx}."""
    return float(np.max(np.abs(Gt.values - np.exp(1j * Gt.x * x))))


def ode_residual_G(f: PointwiseFunction, k: float, g: Grid) -> float:
    """
    Interior max of |f' G + f G' + k G| with G = e^{-ikx}.

    Both derivatives come from the grid stencils.
    """
    fs = sample(f, g)
    G = sample(lambda x: np.exp(-1j * k * x), g)
    residual = derivative(fs).values * G.values + fs.values * derivative(G).values
    residual = residual + k * G.values
    return float(np.max(np.abs(interior(residual))))


def ode_residual_Gtilde(h: PointwiseFunction, x: float, g: Grid) -> float:
    """Interior max of |h G~' + G~ (x + h')| with G~ = e^{ikx} on a k grid."""
    hs = sample(h, g)
    Gt = sample(lambda k: np.exp(1j * k * x), g)
    residual = hs.values * derivative(Gt).values
    residual = residual + Gt.values * (x + derivative(hs).values)
    return float(np.max(np.abs(interior(residual))))
