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

"""Infinite square well with the deformed momentum operator, b = 0."""

import logging
from typing import List, Optional, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from .config import ROOT_DEDUP_TOL, WELL_MINIMIZE_XTOL, WELL_ROOT_TOL
from .core_objects import DeformParamsP, Grid, GridFunction, WellConfig, WellSolution
from .eigenfunctions import eigen_residual, phase_case_a
from .grid import integrate, interior, sample
from .operators import apply_pH


logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


def theta_phases(a: float, k0: float, x: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """
    The two continuous phases of the well eigenfunction.

    `theta1` is the case-a phase with wavenumber k0 and `theta2` the same
    phase with `a` replaced by `-a`, so `theta2(0) = -theta1(0)`.
    """
    return phase_case_a(a, k0, x), phase_case_a(-a, k0, x)


def _two_branch(a: float, k: float, x: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """`e^{i theta1} / sqrt(1 - a sin kx)` and `e^{-i theta2} / sqrt(1 + a sin kx)`."""
    theta1, theta2 = theta_phases(a, k, x)
    sin_kx = np.sin(k * np.asarray(x, dtype=float))
    plus = np.exp(1j * theta1) / np.sqrt(1.0 - a * sin_kx)
    minus = np.exp(-1j * theta2) / np.sqrt(1.0 + a * sin_kx)
    return plus, minus


def boundary_residual(cfg: WellConfig, k: ArrayLike) -> np.ndarray:
    """
    Right-wall mismatch of the two branches as a function of k.

    `|e^{i theta1(L)} / sqrt(1 - a sin kL) - e^{-i theta2(L)} / sqrt(1 + a sin kL)|`,
    vectorized over k. The left wall is satisfied identically.
    """
    k = np.atleast_1d(np.asarray(k, dtype=float))
    theta1 = np.array([phase_case_a(cfg.a, kk, cfg.L) for kk in k], dtype=float)
    theta2 = np.array([phase_case_a(-cfg.a, kk, cfg.L) for kk in k], dtype=float)
    sin_kl = np.sin(k * cfg.L)
    plus = np.exp(1j * theta1) / np.sqrt(1.0 - cfg.a * sin_kl)
    minus = np.exp(-1j * theta2) / np.sqrt(1.0 + cfg.a * sin_kl)
    return np.abs(plus - minus)


def predicted_level_residual(a: float, n: int) -> float:
    """Boundary residual at k0 = n pi / L implied by the continuous phases."""
    s = np.sqrt(1.0 - a * a)
    return float(2.0 * abs(np.sin(0.5 * n * np.pi * (1.0 + 1.0 / s))))


def spectrum(cfg: WellConfig) -> List[WellSolution]:
    """
    Levels n = 1..n_max with k0 = n pi / L and E = k0**2 / 2m.

    Each level carries the boundary residual at its k0 and is `confirmed`
    when that residual is below 1e-8.
    """
    levels = []
    for n in range(1, cfg.n_max + 1):
        k0 = cfg.k0(n)
        residual = float(boundary_residual(cfg, k0)[0])
        levels.append(
            WellSolution(
                n=n,
                k0=k0,
                E=cfg.energy(n),
                boundary_residual=residual,
                confirmed=residual < WELL_ROOT_TOL,
            )
        )
    return levels


def confirmed_roots(cfg: WellConfig, k_max: float, n_scan: int) -> List[float]:
    """
    Zeros of `boundary_residual` on (0, k_max].

    Every strict local minimum of an `n_scan`-point scan is refined with
    Brent's method inside its bracket; a refined minimum counts as a root
    when the residual there is below 1e-8.

    Parameters
    ----------
    cfg : WellConfig
        The well.
    k_max : float
        Upper end of the scan.
    n_scan : int
        Number of scan points.

    Returns
    -------
    List[float]
        Sorted roots.
    """
    ks = np.linspace(k_max / n_scan, k_max, n_scan)
    values = boundary_residual(cfg, ks)
    roots: List[float] = []
    for i in range(1, n_scan - 1):
        if not (values[i] < values[i - 1] and values[i] < values[i + 1]):
            continue
        result = minimize_scalar(
            lambda kk: float(boundary_residual(cfg, kk)[0]),
            bracket=(ks[i - 1], ks[i], ks[i + 1]),
            method="brent",
            options={"xtol": WELL_MINIMIZE_XTOL},
        )
        if result.fun >= WELL_ROOT_TOL:
            logger.info(f"Residual minimum {result.fun:.3e} near k = {result.x:.6f} is not a root")
            continue
        if roots and abs(result.x - roots[-1]) < ROOT_DEDUP_TOL:
            continue
        roots.append(float(result.x))
    return sorted(roots)


def _check_well_grid(cfg: WellConfig, g: Grid) -> None:
    if abs(g.x_min) > 1e-12 or abs(g.x_max - cfg.L) > 1e-12:
        raise ValueError(f"The grid must span [0, {cfg.L}], not [{g.x_min}, {g.x_max}]")


def psi_n_values(
    cfg: WellConfig, n: int, x: ArrayLike, prefactor: Optional[complex] = None
) -> np.ndarray:
    """
    Well eigenfunction `P(e^{i theta1} / sqrt(1 - a sin k0 x) - e^{-i theta2} / sqrt(1 + a sin k0 x))`.

    `P = -i / sqrt(2L)` by default, the value that gives `sqrt(2/L) sin(n pi x / L)`
    at a = 0.
    """
    if not 1 <= n <= cfg.n_max:
        raise ValueError(f"Level n must be in 1..{cfg.n_max}, not {n}")
    if prefactor is None:
        prefactor = -1j / np.sqrt(2.0 * cfg.L)
    plus, minus = _two_branch(cfg.a, cfg.k0(n), x)
    return prefactor * (plus - minus)


def psi_n(
    cfg: WellConfig, n: int, g: Grid, prefactor: Optional[complex] = None
) -> GridFunction:
    """
    Sample level `n` on a grid spanning [0, L].

    Raises
    ------
    ValueError
        If the grid does not span the well or `n` is out of range.
    """
    _check_well_grid(cfg, g)
    return sample(lambda x: psi_n_values(cfg, n, x, prefactor), g)


def solve_level(cfg: WellConfig, n: int, g: Grid) -> WellSolution:
    """One level with its sampled eigenfunction attached."""
    k0 = cfg.k0(n)
    residual = float(boundary_residual(cfg, k0)[0])
    return WellSolution(
        n=n,
        k0=k0,
        E=cfg.energy(n),
        boundary_residual=residual,
        confirmed=residual < WELL_ROOT_TOL,
        psi_n=psi_n(cfg, n, g),
    )


def norm_report(psi: GridFunction) -> float:
    """Integral of |psi_n|**2 over the well."""
    return float(integrate(psi.abs2()).real)


def branch_eigen_residuals(cfg: WellConfig, n: int, g: Grid) -> Tuple[float, float]:
    """
    Eigen-residuals of the two branches of level `n`.

    The first branch is an eigenfunction of p_H(k0) with eigenvalue k0, the
    second one of p_H(-k0) with eigenvalue -k0.
    """
    _check_well_grid(cfg, g)
    k0 = cfg.k0(n)
    plus = sample(lambda x: _two_branch(cfg.a, k0, x)[0], g)
    minus = sample(lambda x: _two_branch(cfg.a, k0, x)[1], g)
    return (
        eigen_residual(plus, DeformParamsP(a=cfg.a, b=0.0, k=k0)),
        eigen_residual(minus, DeformParamsP(a=cfg.a, b=0.0, k=-k0)),
    )


def squared_eigen_residual(cfg: WellConfig, n: int, g: Grid) -> float:
    """
    `||p_H(k0)**2 psi_n - k0**2 psi_n|| / ||psi_n||` on interior points.

    Zero at a = 0 up to discretization; for a != 0 the second branch is not
    an eigenfunction of p_H(k0), so this is reported as data.
    """
    psi = psi_n(cfg, n, g)
    dp = DeformParamsP(a=cfg.a, b=0.0, k=cfg.k0(n))
    defect = apply_pH(apply_pH(psi, dp), dp) - psi * (dp.k**2)
    # two stencil layers at each edge for the nested derivative
    inner = interior(interior(defect.values))
    return float(np.linalg.norm(inner) / np.linalg.norm(interior(interior(psi.values))))
