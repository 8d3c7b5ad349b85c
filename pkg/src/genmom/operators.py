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

"""Generalized momentum and position operators acting on grid functions.

Momentum-type operators act on position-space samples, position-type
operators on momentum-space samples (the grid variable is then k). All use
hbar = 1.
"""

import logging
from typing import Callable, Dict, Union

import numpy as np

from .config import EDGE_DECAY_TOL
from .core_objects import (
    DeformParamsP,
    DeformParamsX,
    GridFunction,
    HermiticityResult,
    KernelParamsP,
    KernelParamsX,
)
from .grid import derivative, edge_magnitude, inner_product


logger = logging.getLogger(__name__)

OperatorParams = Union[None, DeformParamsP, DeformParamsX, KernelParamsP, KernelParamsX]


def apply_p0(psi: GridFunction) -> GridFunction:
    """Standard momentum operator -i d/dx."""
    return -1j * derivative(psi)


def apply_p(psi: GridFunction, p: KernelParamsP) -> GridFunction:
    """Non-Hermitian generalized momentum `(C e^{ikx} - i) d/dx`."""
    coefficient = p.C * np.exp(1j * p.k * psi.x) - 1j
    return derivative(psi) * coefficient


def apply_p_dagger(psi: GridFunction, p: KernelParamsP) -> GridFunction:
    """Adjoint `-(C* e^{-ikx} + i) d/dx + i k C* e^{-ikx}` of `apply_p`."""
    phase = np.conj(p.C) * np.exp(-1j * p.k * psi.x)
    return derivative(psi) * (-(phase + 1j)) + psi * (1j * p.k * phase)


def apply_pH(psi: GridFunction, dp: DeformParamsP) -> GridFunction:
    """
    Hermitian generalized momentum operator.

    `i[(a sin kx + b cos kx - 1) d/dx + (k/2)(a - ib) e^{-ikx}]`, the
    symmetric part of `apply_p` with C = a + ib. `(a, b) = (0, 0)` gives
    `apply_p0`.

    Parameters
    ----------
    psi : GridFunction
        Position-space samples.
    dp : DeformParamsP
        The deformation and the operator's Fourier parameter k.

    Returns
    -------
    GridFunction
        The operator applied to `psi`.
    """
    kx = dp.k * psi.x
    slope = dp.a * np.sin(kx) + dp.b * np.cos(kx) - 1.0
    shift = 0.5 * dp.k * (dp.a - 1j * dp.b) * np.exp(-1j * kx)
    return (derivative(psi) * slope + psi * shift) * 1j


def apply_x0(phi: GridFunction) -> GridFunction:
    """Standard position operator i d/dk in momentum space."""
    return 1j * derivative(phi)


def apply_x_momentum(phi: GridFunction, p: KernelParamsX) -> GridFunction:
    """Non-Hermitian generalized position `(D e^{-ikx} + i) d/dk`."""
    coefficient = p.D * np.exp(-1j * phi.x * p.x) + 1j
    return derivative(phi) * coefficient


def apply_x_dagger(phi: GridFunction, p: KernelParamsX) -> GridFunction:
    """Adjoint `(-D* e^{ikx} + i) d/dk - i x D* e^{ikx}` of `apply_x_momentum`."""
    phase = np.conj(p.D) * np.exp(1j * phi.x * p.x)
    return derivative(phi) * (1j - phase) + phi * (-1j * p.x * phase)


def apply_xH(phi: GridFunction, dx: DeformParamsX) -> GridFunction:
    """Hermitian position `i(1 - c sin kx + d cos kx) d/dk - (ix/2)(c - id) e^{ikx}`."""
    kx = phi.x * dx.x
    slope = 1j * (1.0 - dx.c * np.sin(kx) + dx.d * np.cos(kx))
    shift = -0.5j * dx.x * (dx.c - 1j * dx.d) * np.exp(1j * kx)
    return derivative(phi) * slope + phi * shift


OPERATORS: Dict[str, Callable[..., GridFunction]] = {
    "p0": apply_p0,
    "p": apply_p,
    "p_dagger": apply_p_dagger,
    "pH": apply_pH,
    "x0": apply_x0,
    "x": apply_x_momentum,
    "x_dagger": apply_x_dagger,
    "xH": apply_xH,
}


def apply_operator(
    operator: str, state: GridFunction, params: OperatorParams = None
) -> GridFunction:
    """
    Apply an operator by tag.

    Parameters
    ----------
    operator : str
        One of the keys of `OPERATORS`.
    state : GridFunction
        The state to act on.
    params : OperatorParams
        Operator parameters, None for `p0` and `x0`.

    Raises
    ------
    ValueError
        If the tag is unknown or the parameters are missing.

    Returns
    -------
    GridFunction
        The result.
    """
    if operator not in OPERATORS:
        raise ValueError(
            f"Operator {operator} is not a valid operator. Valid operators are {list(OPERATORS)}."
        )
    if operator in ("p0", "x0"):
        return OPERATORS[operator](state)
    if params is None:
        raise ValueError(f"Operator {operator} needs parameters")
    return OPERATORS[operator](state, params)


def hermiticity_defect(
    operator: str,
    params: OperatorParams,
    phi: GridFunction,
    psi: GridFunction,
) -> HermiticityResult:
    """
    Weak Hermiticity check `|<phi, A psi> - <A phi, psi>|`.

    Both states must vanish at the window edges for the boundary terms to
    drop. When they do not, the defect is still computed but the result is
    flagged.

    Parameters
    ----------
    operator : str
        Operator tag, see `OPERATORS`.
    params : OperatorParams
        Operator parameters.
    phi : GridFunction
        First state.
    psi : GridFunction
        Second state, on the same grid.

    Returns
    -------
    HermiticityResult
        The defect and the edge diagnostics.
    """
    edge = max(edge_magnitude(phi), edge_magnitude(psi))
    flagged = edge > EDGE_DECAY_TOL
    if flagged:
        logger.warning(
            f"States do not vanish at the window edges (|f| = {edge:.3e}), {operator} defect includes boundary terms"
        )
    left = inner_product(phi, apply_operator(operator, psi, params))
    right = inner_product(apply_operator(operator, phi, params), psi)
    return HermiticityResult(
        operator=operator, defect=float(abs(left - right)), edge_magnitude=edge, flagged=flagged
    )
