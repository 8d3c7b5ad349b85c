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

"""Eigenfunctions of the Hermitian generalized momentum operator.

Closed forms exist for b = 0 (case a) and a = 0 (case b). Their arctangent
antiderivatives jump by pi at every pole of tan(kx/2); the phases here are
the continuous continuation, so that consecutive tangent cells join up.
"""

import logging
from typing import Callable, Tuple, Union

import numpy as np
from scipy.integrate import quad, solve_ivp

from .config import (
    CASE_A,
    CASE_B,
    DEFAULT_NORMALIZATION,
    GENERAL_RESIDUAL_TOL,
    ODE_ATOL,
    ODE_RTOLS,
    POLE_GUARD,
    QUAD_EPSABS,
    QUAD_EPSREL,
    QUAD_LIMIT,
)
from .core_objects import (
    DeformParamsP,
    EigenfunctionSpec,
    Grid,
    GridFunction,
    NumericEigenfunction,
    OrthonormalityReport,
)
from .grid import (
    cumulative_integrate,
    inner_product,
    interior,
    sample,
    symmetric_grid,
)
from .operators import apply_pH


logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


def _check_open_interval(name: str, value: float) -> None:
    if not abs(value) < 1:
        raise ValueError(f"{name} out of domain |{name}| < 1, got {value}")


def _wrap(angle: np.ndarray) -> np.ndarray:
    """Reduce to [-pi, pi]."""
    return angle - 2.0 * np.pi * np.round(angle / (2.0 * np.pi))


def branch_angle_a(a: float, u: ArrayLike) -> np.ndarray:
    """
    Continuous arctan((tan u - a) / sqrt(1 - a**2)).

    Equal to the principal value for |u| < pi/2 and continued across the
    poles of tan u, so it advances by pi per tangent cell.
    """
    u = np.asarray(u, dtype=float)
    s = np.sqrt(1.0 - a * a)
    angle = np.arctan2(np.sin(u) - a * np.cos(u), s * np.cos(u))
    return u + _wrap(angle - u)


def branch_angle_b(b: float, u: ArrayLike) -> np.ndarray:
    """Continuous arctan(sqrt((1 + b) / (1 - b)) tan u)."""
    u = np.asarray(u, dtype=float)
    r = np.sqrt((1.0 + b) / (1.0 - b))
    return u + _wrap(np.arctan2(r * np.sin(u), np.cos(u)) - u)


def phase_case_a(a: float, k: float, x: ArrayLike) -> np.ndarray:
    """Continuous phase `kx/2 + branch_angle_a(a, kx/2) / sqrt(1 - a**2)`."""
    _check_open_interval("a", a)
    kx = k * np.asarray(x, dtype=float)
    return 0.5 * kx + branch_angle_a(a, 0.5 * kx) / np.sqrt(1.0 - a * a)


def phase_case_b(b: float, k: float, x: ArrayLike) -> np.ndarray:
    """Continuous phase `kx/2 + branch_angle_b(b, kx/2) / sqrt(1 - b**2)`."""
    _check_open_interval("b", b)
    kx = k * np.asarray(x, dtype=float)
    return 0.5 * kx + branch_angle_b(b, 0.5 * kx) / np.sqrt(1.0 - b * b)


def density_case_a(
    a: float, k: float, x: ArrayLike, normalization: complex = DEFAULT_NORMALIZATION
) -> np.ndarray:
    """Probability density `|A|**2 / |1 - a sin kx|`."""
    _check_open_interval("a", a)
    return abs(normalization) ** 2 / np.abs(1.0 - a * np.sin(k * np.asarray(x, dtype=float)))


def density_case_b(
    b: float, k: float, x: ArrayLike, normalization: complex = DEFAULT_NORMALIZATION
) -> np.ndarray:
    """Probability density `|B|**2 / |1 - b cos kx|`."""
    _check_open_interval("b", b)
    return abs(normalization) ** 2 / np.abs(1.0 - b * np.cos(k * np.asarray(x, dtype=float)))


def _degenerate(normalization: complex, x: ArrayLike) -> np.ndarray:
    logger.warning("k = 0: the eigenvalue equation degenerates, returning a constant")
    return np.full(np.shape(x), complex(normalization))


def psi_case_a(
    a: float, k: float, x: ArrayLike, normalization: complex = DEFAULT_NORMALIZATION
) -> np.ndarray:
    """
    Closed-form eigenfunction for b = 0.

    `A / sqrt|1 - a sin kx| * exp(i phase_case_a(a, k, x))`. At a = 0 this is
    the plane wave `A e^{ikx}`.

    Parameters
    ----------
    a : float
        Deformation, |a| < 1.
    k : float
        Eigenvalue (wavenumber). k = 0 returns the constant `normalization`.
    x : float or np.ndarray
        Positions.
    normalization : complex
        The constant A, 1/sqrt(2 pi) by default.

    Raises
    ------
    ValueError
        If |a| >= 1.

    Returns
    -------
    np.ndarray
        Complex samples.
    """
    _check_open_interval("a", a)
    if k == 0:
        return _degenerate(normalization, x)
    modulus = np.sqrt(density_case_a(a, k, x, 1.0))
    return normalization * modulus * np.exp(1j * phase_case_a(a, k, x))


def psi_case_b(
    b: float, k: float, x: ArrayLike, normalization: complex = DEFAULT_NORMALIZATION
) -> np.ndarray:
    """Closed-form eigenfunction for a = 0, `B / sqrt|1 - b cos kx| * exp(i phase)`."""
    _check_open_interval("b", b)
    if k == 0:
        return _degenerate(normalization, x)
    modulus = np.sqrt(density_case_b(b, k, x, 1.0))
    return normalization * modulus * np.exp(1j * phase_case_b(b, k, x))


def _complex_quad(integrand: Callable[[float], complex], x: float) -> complex:
    options = {"epsabs": QUAD_EPSABS, "epsrel": QUAD_EPSREL, "limit": QUAD_LIMIT}
    real, _ = quad(lambda t: integrand(t).real, 0.0, x, **options)
    imag, _ = quad(lambda t: integrand(t).imag, 0.0, x, **options)
    return complex(real, imag)


def I1_quadrature(a: float, k: float, x: float) -> complex:
    """Adaptive quadrature of `(1 - (ia/2) e^{-ikt}) / (1 - a sin kt)` from 0 to x."""
    _check_open_interval("a", a)
    return _complex_quad(
        lambda t: (1.0 - 0.5j * a * np.exp(-1j * k * t)) / (1.0 - a * np.sin(k * t)), x
    )


def I2_quadrature(b: float, k: float, x: float) -> complex:
    """Adaptive quadrature of `(1 - (b/2) e^{-ikt}) / (1 - b cos kt)` from 0 to x."""
    _check_open_interval("b", b)
    return _complex_quad(
        lambda t: (1.0 - 0.5 * b * np.exp(-1j * k * t)) / (1.0 - b * np.cos(k * t)), x
    )


def eigen_rate(dp: DeformParamsP, x: ArrayLike) -> np.ndarray:
    """Logarithmic derivative psi'/psi of the eigenfunction of `dp` with eigenvalue k."""
    kx = dp.k * np.asarray(x, dtype=float)
    numerator = 1.0 - 0.5j * (dp.a - 1j * dp.b) * np.exp(-1j * kx)
    return 1j * dp.k * numerator / (1.0 - dp.a * np.sin(kx) - dp.b * np.cos(kx))


def eigen_residual(psi: GridFunction, dp: DeformParamsP) -> float:
    """
    Relative eigen-residual `||p_H psi - k psi|| / ||psi||` on interior points.

    The two samples at each edge use one-sided stencils and are excluded.

    Raises
    ------
    ValueError
        If `psi` vanishes on the interior.
    """
    defect = interior((apply_pH(psi, dp) - psi * dp.k).values)
    scale = float(np.linalg.norm(interior(psi.values)))
    if scale == 0:
        raise ValueError("eigen_residual needs a nonzero function")
    return float(np.linalg.norm(defect)) / scale


def psi_general_numeric(
    a: float,
    b: float,
    k: float,
    g: Grid,
    normalization: complex = DEFAULT_NORMALIZATION,
) -> NumericEigenfunction:
    """
    Eigenfunction for any (a, b) in the unit disk by integrating its ODE.

    The first-order linear equation `psi' = eigen_rate * psi` is integrated
    from `x_min` with `psi(x_min) = normalization` using DOP853, tightening
    the tolerance until the eigen-residual falls below 1e-5.

    Parameters
    ----------
    a : float
        Deformation, real part of C.
    b : float
        Deformation, imaginary part of C.
    k : float
        Eigenvalue.
    g : Grid
        Output grid.
    normalization : complex
        Initial value at `x_min`.

    Returns
    -------
    NumericEigenfunction
        The samples, the residual, the last tolerance used and whether the
        residual met the target.
    """
    dp = DeformParamsP(a=a, b=b, k=k)
    x = g.points
    y0 = np.array([complex(normalization)])
    result = None
    for rtol in ODE_RTOLS:
        solution = solve_ivp(
            lambda t, y: eigen_rate(dp, t) * y,
            (x[0], x[-1]),
            y0,
            method="DOP853",
            t_eval=x,
            rtol=rtol,
            atol=ODE_ATOL,
        )
        if not solution.success:
            logger.warning(f"DOP853 failed at rtol = {rtol}: {solution.message}")
            continue
        psi = GridFunction(grid=g, values=solution.y[0])
        residual = eigen_residual(psi, dp)
        logger.info(f"General eigenfunction (a, b, k) = ({a}, {b}, {k}): rtol {rtol}, residual {residual:.3e}")
        result = NumericEigenfunction(
            psi=psi,
            residual=residual,
            rtol=rtol,
            converged=residual < GENERAL_RESIDUAL_TOL,
        )
        if result.converged:
            return result
    if result is None:
        raise RuntimeError(f"ODE integration failed for (a, b, k) = ({a}, {b}, {k})")
    logger.warning(
        f"General eigenfunction residual {result.residual:.3e} above {GENERAL_RESIDUAL_TOL} after refinement"
    )
    return result


def sample_eigenfunction(spec: EigenfunctionSpec, g: Grid) -> GridFunction:
    """Sample the eigenfunction described by `spec` on `g`."""
    if spec.case == CASE_A:
        return sample(lambda x: psi_case_a(spec.a, spec.k, x, spec.normalization), g)
    if spec.case == CASE_B:
        return sample(lambda x: psi_case_b(spec.b, spec.k, x, spec.normalization), g)
    return psi_general_numeric(spec.a, spec.b, spec.k, g, spec.normalization).psi


def _tangent_difference(
    a: float, k: float, kp: float, x: ArrayLike
) -> Tuple[np.ndarray, np.ndarray]:
    """sin(u - u') and cos(u - u') - a sin(u + u') with u = kx/2, u' = k'x/2."""
    x = np.asarray(x, dtype=float)
    u, up = 0.5 * k * x, 0.5 * kp * x
    return np.sin(u - up), np.cos(u - up) - a * np.sin(u + up)


def v_of_x(a: float, k: float, kp: float, x: ArrayLike) -> np.ndarray:
    """
    `(tan u - tan u') / (1 - a(tan u + tan u') + tan u tan u')`, u = kx/2.

    Evaluated as `sin(u - u') / (cos(u - u') - a sin(u + u'))`, which is the
    same quantity with the removable tangent poles cancelled.

    Raises
    ------
    ValueError
        Where the denominator vanishes, which is a genuine pole.
    """
    numerator, denominator = _tangent_difference(a, k, kp, x)
    if np.any(np.abs(denominator) < POLE_GUARD):
        raise ValueError(f"v(x) has a pole for (a, k, k') = ({a}, {k}, {kp})")
    return numerator / denominator


def Phi_of_x(a: float, k: float, kp: float, x: ArrayLike) -> np.ndarray:
    """
    Phase difference `(k - k')x/2 + arctan(sqrt(1 - a**2) v) / sqrt(1 - a**2)`.

    The arctangent is taken on the branch that makes the result equal to
    `phase_case_a(a, k, x) - phase_case_a(a, k', x)`.
    """
    _check_open_interval("a", a)
    x = np.asarray(x, dtype=float)
    s = np.sqrt(1.0 - a * a)
    numerator, denominator = _tangent_difference(a, k, kp, x)
    principal = np.arctan2(s * numerator, denominator)
    continuous = branch_angle_a(a, 0.5 * k * x) - branch_angle_a(a, 0.5 * kp * x)
    turns = np.round((continuous - principal) / (2.0 * np.pi))
    return 0.5 * (k - kp) * x + (principal + 2.0 * np.pi * turns) / s


def _w_integrand(a: float, k: float, kp: float) -> Callable[[ArrayLike], np.ndarray]:
    def integrand(t: ArrayLike) -> np.ndarray:
        return 1.0 / np.sqrt((1.0 - a * np.sin(kp * t)) * (1.0 - a * np.sin(k * t)))

    return integrand


def W_of_x(a: float, k: float, kp: float, x: float) -> float:
    """Adaptive quadrature of `1 / sqrt((1 - a sin k't)(1 - a sin kt))` from 0 to x."""
    _check_open_interval("a", a)
    integrand = _w_integrand(a, k, kp)
    value, _ = quad(
        lambda t: float(integrand(t)), 0.0, x, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT
    )
    return float(value)


def W_on_grid(a: float, k: float, kp: float, g: Grid) -> np.ndarray:
    """W at every grid point by cumulative Simpson, with W(0) = 0."""
    _check_open_interval("a", a)
    running = cumulative_integrate(sample(_w_integrand(a, k, kp), g)).values.real
    origin = g.index_of(0.0)
    if origin is not None:
        return running - running[origin]
    return running + W_of_x(a, k, kp, g.x_min)


def orthonormality_report(
    a: float, k: float, kp: float, window: float, n: int
) -> OrthonormalityReport:
    """
    Overlap <psi_k' | psi_k> of case-a eigenfunctions on [-window, window].

    Also measures how far the phase difference is from `(k - k') W(x)`
    across the window; the two agree exactly at a = 0 only.

    Parameters
    ----------
    a : float
        Deformation, |a| < 1.
    k : float
        Label of the ket.
    kp : float
        Label of the bra.
    window : float
        Half-width X of the window.
    n : int
        Grid size.

    Returns
    -------
    OrthonormalityReport
        Overlap, diagonal value and phase identity defect.
    """
    g = symmetric_grid(window, n)
    psi_k = sample(lambda x: psi_case_a(a, k, x), g)
    psi_kp = sample(lambda x: psi_case_a(a, kp, x), g)
    phase_gap = Phi_of_x(a, k, kp, g.points) - (k - kp) * W_on_grid(a, k, kp, g)
    report = OrthonormalityReport(
        a=a,
        k=k,
        kp=kp,
        window=window,
        overlap=inner_product(psi_kp, psi_k),
        diagonal=inner_product(psi_k, psi_k),
        phase_identity_defect=float(np.max(np.abs(phase_gap))),
    )
    logger.info(
        f"Overlap (a, k, k') = ({a}, {k}, {kp}) on X = {window}: |overlap| / diagonal = {report.off_diagonal_ratio:.3e}"
    )
    return report
