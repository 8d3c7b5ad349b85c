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

"""Uniform grids, quadrature and finite differences."""

import logging
from typing import Callable

import numpy as np
from scipy.integrate import cumulative_simpson, simpson

from .config import BOUNDARY_STENCIL_POINTS
from .core_objects import Grid, GridFunction


logger = logging.getLogger(__name__)

# 4th-order one-sided stencils (numerators over 12h) for the two edge samples.
_EDGE_STENCILS = (
    np.array([-25.0, 48.0, -36.0, 16.0, -3.0]),
    np.array([-3.0, -10.0, 18.0, -6.0, 1.0]),
)


def make_grid(x_min: float, x_max: float, n: int) -> Grid:
    """
    Build a uniform grid.

    Parameters
    ----------
    x_min : float
        Left end of the window.
    x_max : float
        Right end of the window.
    n : int
        Odd number of samples, at least 9.

    Returns
    -------
    Grid
        The grid with samples at `x_min + i * spacing`.
    """
    return Grid(x_min=float(x_min), x_max=float(x_max), n=n)


def symmetric_grid(half_width: float, n: int) -> Grid:
    """Grid on `[-half_width, half_width]`."""
    return make_grid(-half_width, half_width, n)


def sample(f: Callable[[np.ndarray], np.ndarray], g: Grid) -> GridFunction:
    """
    Sample a pointwise function on a grid.

    `f` is called once with the full array of sample positions and may
    return a scalar (broadcast to every sample) or an array.

    Parameters
    ----------
    f : callable
        Vectorized function of the position.
    g : Grid
        The grid to sample on.

    Raises
    ------
    ValueError
        If `f` is not finite at every sample.

    Returns
    -------
    GridFunction
        The samples `f(x_i)`.
    """
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        values = np.asarray(f(g.points), dtype=complex)
    values = np.broadcast_to(values, (g.n,))
    bad = ~np.isfinite(values)
    if np.any(bad):
        first = g.points[np.argmax(bad)]
        raise ValueError(f"Sampled function is not finite at x = {first}")
    return GridFunction(grid=g, values=values)


def integrate(gf: GridFunction) -> complex:
    """Composite Simpson approximation of the integral over the grid window."""
    h = gf.grid.spacing
    return complex(
        simpson(gf.values.real, dx=h) + 1j * simpson(gf.values.imag, dx=h)
    )


def cumulative_integrate(gf: GridFunction) -> GridFunction:
    """Running Simpson integral from `x_min`, zero at the first sample."""
    h = gf.grid.spacing
    real = cumulative_simpson(gf.values.real, dx=h, initial=0.0)
    imag = cumulative_simpson(gf.values.imag, dx=h, initial=0.0)
    return gf.with_values(real + 1j * imag)


def derivative(gf: GridFunction) -> GridFunction:
    """
    Fourth-order finite-difference derivative.

    Central five-point differences in the interior and one-sided five-point
    stencils on the two samples at each edge. Exact for polynomials of
    degree four or less.

    Parameters
    ----------
    gf : GridFunction
        The function to differentiate.

    Returns
    -------
    GridFunction
        The derivative samples.
    """
    f = gf.values
    h = gf.grid.spacing
    out = np.empty_like(f)
    out[2:-2] = (f[:-4] - 8.0 * f[1:-3] + 8.0 * f[3:-1] - f[4:]) / (12.0 * h)
    head = f[:5]
    tail = f[-5:][::-1]
    for i, stencil in enumerate(_EDGE_STENCILS):
        out[i] = stencil @ head / (12.0 * h)
        out[-1 - i] = -(stencil @ tail) / (12.0 * h)
    return gf.with_values(out)


def inner_product(f: GridFunction, g: GridFunction) -> complex:
    """
    L2 inner product, antilinear in the first argument.

    Raises
    ------
    ValueError
        If the two functions live on different grids.
    """
    if f.grid != g.grid:
        raise ValueError(f"Grid mismatch: {f.grid} is not {g.grid}")
    return integrate(f.conj() * g)


def norm(gf: GridFunction) -> float:
    """L2 norm over the grid window."""
    return float(np.sqrt(max(inner_product(gf, gf).real, 0.0)))


def normalize(gf: GridFunction) -> GridFunction:
    """Rescale to unit L2 norm on the grid window."""
    size = norm(gf)
    if size == 0:
        raise ValueError("Cannot normalize the zero function")
    return gf * (1.0 / size)


def gaussian(
    g: Grid, center: float = 0.0, width: float = 1.0, momentum: float = 0.0
) -> GridFunction:
    """
    Gaussian wave packet normalized on the whole line.

    `(pi w**2)**(-1/4) exp(-(x - c)**2 / (2 w**2) + i p x)`. With the
    defaults this is `pi**(-1/4) e^{-x**2/2}`, its own Fourier transform.
    """
    if not width > 0:
        raise ValueError(f"width must be positive, not {width}")
    amplitude = (np.pi * width * width) ** -0.25
    return sample(
        lambda x: amplitude
        * np.exp(-((x - center) ** 2) / (2.0 * width * width) + 1j * momentum * x),
        g,
    )


def interior(values: np.ndarray) -> np.ndarray:
    """Drop the samples handled by the one-sided edge stencils."""
    return values[BOUNDARY_STENCIL_POINTS:-BOUNDARY_STENCIL_POINTS]


def edge_magnitude(gf: GridFunction) -> float:
    """Largest modulus over the first and last samples."""
    return float(max(abs(gf.values[0]), abs(gf.values[-1])))
