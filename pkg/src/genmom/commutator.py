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

"""Deformed canonical commutator in position and momentum space."""

import logging
import math
from typing import List, Optional, Union

import numpy as np
from scipy.optimize import bisect

from .config import BISECT_XTOL, ROOT_DEDUP_TOL, ROOT_TOL, SAME_STATE_TOL
from .core_objects import (
    CommutatorScenario,
    DeformParamsP,
    DeformParamsX,
    Grid,
    GridFunction,
    IndependenceRoots,
)
from .fourier import eta_at, inverse_ft, sigma_at
from .grid import inner_product, interior
from .operators import apply_pH, apply_xH


logger = logging.getLogger(__name__)

SQRT_2PI = math.sqrt(2.0 * math.pi)


def make_scenario(
    dp: DeformParamsP,
    dx: DeformParamsX,
    psi: GridFunction,
    k_grid: Grid,
    phi: Optional[GridFunction] = None,
) -> CommutatorScenario:
    """
    Build a scenario for the state `psi`.

    The momentum-space partner is the inverse transform of `psi` on
    `k_grid`. A separately supplied `phi` is accepted only if it agrees with
    that transform to 1e-8.

    Raises
    ------
    ValueError
        If `phi` disagrees with the transform of `psi`, or either is not
        normalized.
    """
    derived = inverse_ft(psi, k_grid)
    if phi is not None:
        if phi.grid != k_grid:
            raise ValueError(f"phi lives on {phi.grid}, expected {k_grid}")
        gap = float(np.max(np.abs(phi.values - derived.values)))
        if gap > SAME_STATE_TOL:
            raise ValueError(
                f"phi is not the transform of psi (max difference {gap:.3e}), the pair must describe one state"
            )
        derived = phi
    return CommutatorScenario(dp=dp, dx=dx, psi=psi, phi=derived)


def commutator_action_x(psi: GridFunction, dp: DeformParamsP) -> GridFunction:
    """`[x, p_H] psi = i(1 - a sin kx - b cos kx) psi` in position space."""
    kx = dp.k * psi.x
    return psi * (1j * (1.0 - dp.a * np.sin(kx) - dp.b * np.cos(kx)))


def commutator_action_k(phi: GridFunction, dx: DeformParamsX) -> GridFunction:
    """`[x_H, p] phi = i(1 - c sin kx + d cos kx) phi` in momentum space."""
    kx = phi.x * dx.x
    return phi * (1j * (1.0 - dx.c * np.sin(kx) + dx.d * np.cos(kx)))


def composition_defect_x(psi: GridFunction, dp: DeformParamsP) -> float:
    """Interior max of |x p_H psi - p_H(x psi) - commutator_action_x(psi)|."""
    composed = apply_pH(psi, dp) * psi.x - apply_pH(psi * psi.x, dp)
    return float(np.max(np.abs(interior((composed - commutator_action_x(psi, dp)).values))))


def composition_defect_k(phi: GridFunction, dx: DeformParamsX) -> float:
    """Interior max of |x_H(k phi) - k x_H phi - commutator_action_k(phi)|, p = k."""
    composed = apply_xH(phi * phi.x, dx) - apply_xH(phi, dx) * phi.x
    return float(np.max(np.abs(interior((composed - commutator_action_k(phi, dx)).values))))


def expectation_x_basis(scenario: CommutatorScenario) -> complex:
    """<psi, [x, p_H] psi> by quadrature in position space."""
    return inner_product(scenario.psi, commutator_action_x(scenario.psi, scenario.dp))


def closed_form_x(scenario: CommutatorScenario) -> complex:
    """`i[1 + sqrt(2 pi) Im((a - ib) sigma(k))]`."""
    dp = scenario.dp
    s = complex(sigma_at(scenario.psi, dp.k)[0])
    return 1j * (1.0 + SQRT_2PI * ((dp.a - 1j * dp.b) * s).imag)


def expectation_k_basis(scenario: CommutatorScenario) -> complex:
    """<phi, [x_H, p] phi> by quadrature in momentum space."""
    return inner_product(scenario.phi, commutator_action_k(scenario.phi, scenario.dx))


def closed_form_k(scenario: CommutatorScenario) -> complex:
    """`i[1 - sqrt(2 pi) Im((c - id) eta(x))]`."""
    dx = scenario.dx
    e = complex(eta_at(scenario.phi, dx.x)[0])
    return 1j * (1.0 - SQRT_2PI * ((dx.c - 1j * dx.d) * e).imag)


def residual_curve(
    scenario: CommutatorScenario, scan: str, values: Union[float, np.ndarray]
) -> np.ndarray:
    """
    Basis-independence residual along one axis.

    `R = Im((a - ib) sigma(k)) + Im((c - id) eta(x))` with `x` taken from
    `values` and k from the scenario when `scan == "x"`, the other way round
    when `scan == "k"`.
    """
    dp, dx = scenario.dp, scenario.dx
    values = np.atleast_1d(np.asarray(values, dtype=float))
    if scan == "x":
        left = np.full(values.shape, complex(sigma_at(scenario.psi, dp.k)[0]))
        right = eta_at(scenario.phi, values)
    elif scan == "k":
        left = sigma_at(scenario.psi, values)
        right = np.full(values.shape, complex(eta_at(scenario.phi, dx.x)[0]))
    else:
        raise ValueError(f"scan must be 'x' or 'k', not {scan!r}")
    return ((dp.a - 1j * dp.b) * left).imag + ((dx.c - 1j * dx.d) * right).imag


def basis_independence_residual(scenario: CommutatorScenario) -> float:
    """R at the scenario's own (k, x); zero iff both expectation values coincide."""
    return float(residual_curve(scenario, "x", scenario.dx.x)[0])


def find_independence_roots(
    scenario: CommutatorScenario,
    lower: float,
    upper: float,
    n_seeds: int,
    scan: str = "x",
) -> IndependenceRoots:
    """
    Roots of the basis-independence residual along x (k fixed) or k (x fixed).

    Sign changes on an `n_seeds`-point scan are refined by bisection. Roots
    are returned sorted and deduplicated at 1e-8. When all deformation
    parameters vanish the residual is identically zero and the result says
    so instead of listing roots.

    Parameters
    ----------
    scenario : CommutatorScenario
        The state and deformations.
    lower : float
        Start of the scan range.
    upper : float
        End of the scan range.
    n_seeds : int
        Number of scan points, at least 2.
    scan : str
        `x` or `k`.

    Returns
    -------
    IndependenceRoots
        The roots, possibly empty.
    """
    fixed = scenario.dp.k if scan == "x" else scenario.dx.x
    if scenario.is_standard:
        logger.info("All deformation parameters vanish, the residual is identically zero")
        return IndependenceRoots(
            scan=scan, fixed=fixed, lower=lower, upper=upper, identically_zero=True
        )
    if n_seeds < 2:
        raise ValueError(f"n_seeds must be at least 2, not {n_seeds}")

    def residual(t: float) -> float:
        return float(residual_curve(scenario, scan, t)[0])

    seeds = np.linspace(lower, upper, n_seeds)
    values = residual_curve(scenario, scan, seeds)
    candidates: List[float] = [float(t) for t, r in zip(seeds, values) if r == 0.0]
    for i in np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)[0]:
        candidates.append(float(bisect(residual, seeds[i], seeds[i + 1], xtol=BISECT_XTOL)))

    roots: List[float] = []
    kept_residuals: List[float] = []
    for root in sorted(candidates):
        value = residual(root)
        if abs(value) >= ROOT_TOL:
            logger.warning(f"Bracket near {scan} = {root} refined only to |R| = {abs(value):.3e}")
            continue
        if roots and root - roots[-1] < ROOT_DEDUP_TOL:
            continue
        roots.append(root)
        kept_residuals.append(value)
    logger.info(f"Found {len(roots)} independence roots along {scan} in [{lower}, {upper}]")
    return IndependenceRoots(
        scan=scan,
        fixed=fixed,
        lower=lower,
        upper=upper,
        roots=roots,
        residuals=kept_residuals,
    )
