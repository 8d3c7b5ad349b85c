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

"""genmom verification runner."""

import csv
import io
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, TypeVar, Union

import numpy as np

from .commutator import (
    closed_form_k,
    closed_form_x,
    composition_defect_k,
    composition_defect_x,
    expectation_k_basis,
    expectation_x_basis,
    find_independence_roots,
    residual_curve,
)
from .config import (
    COARSE_GRID,
    COMMUTATOR_DRAWS,
    COMPOSITION_GRID,
    CURVE_DEFAULT_POINTS,
    CURVE_DEFAULT_RANGES,
    CURVE_IMAG_WARN_TOL,
    EIGEN_DRAWS,
    EIGEN_GRID,
    EIGEN_K_RANGE,
    EIGEN_LIMIT_PARAMS,
    EIGEN_LIMIT_RATIO,
    EIGEN_PARAM_RANGE,
    EIGEN_PHASE_SAMPLES_PER_PERIOD,
    EIGEN_QUADRATURE_POINTS,
    GENERAL_RESIDUAL_TOL,
    GENMOM_THREADS_ENV,
    GENMOM_VERSION,
    HBAR,
    HERMITICITY_DISK_RADIUS,
    HERMITICITY_DRAWS,
    HERMITICITY_GRID,
    HERMITICITY_LABEL_RANGE,
    KERNEL_C_MODULUS_RANGE,
    KERNEL_DRAW_MIN_MODULUS,
    KERNEL_DRAWS,
    KERNEL_GRID,
    KERNEL_LABEL_RANGE,
    NON_HERMITIAN_MIN_MODULUS,
    ORTHO_OFF_DIAGONAL_RATIO,
    PACKET_CENTER_RANGE,
    PACKET_GRID,
    PACKET_MOMENTUM_RANGE,
    PACKET_WIDTH_RANGE,
    ROOT_DEDUP_TOL,
    ROOT_SCAN_RANGE,
    ROOT_SCAN_SEEDS,
    WELL_A_SWEEP,
    WELL_LIMIT_A,
    WELL_LIMIT_TOL,
    WELL_ROOT_TOL,
    WELL_SCAN_POINTS,
    WELL_WALL_TOL,
)
from .core_objects import (
    CheckRecord,
    CommutatorScenario,
    CurveConfig,
    DeformParamsP,
    DeformParamsX,
    Grid,
    GridFunction,
    KernelParamsP,
    KernelParamsX,
    Report,
    RunConfig,
    WellConfig,
)
from .eigenfunctions import (
    I1_quadrature,
    I2_quadrature,
    Phi_of_x,
    W_on_grid,
    density_case_a,
    density_case_b,
    eigen_residual,
    orthonormality_report,
    phase_case_a,
    psi_case_a,
    psi_case_b,
    psi_general_numeric,
)
from .fourier import (
    eta,
    eta_at,
    forward_ft,
    ft_pair,
    inverse_ft,
    sigma,
    sigma_at,
    verify_momentum_correspondence,
    verify_position_correspondence,
)
from .grid import gaussian, make_grid, normalize, sample, symmetric_grid
from .kernels import (
    f_of_x,
    h_of_k,
    kernel_defect_G,
    kernel_defect_Gtilde,
    ode_residual_G,
    ode_residual_Gtilde,
    reconstruct_G,
    reconstruct_Gtilde,
)
from .operators import apply_p, apply_p_dagger, apply_pH, apply_x_dagger, apply_x_momentum, apply_xH, hermiticity_defect
from .squarewell import (
    boundary_residual,
    branch_eigen_residuals,
    confirmed_roots,
    norm_report,
    predicted_level_residual,
    psi_n,
    psi_n_values,
    spectrum,
    squared_eigen_residual,
)
from .utils import _format_number


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")
Number = Union[int, float]
Packet = Tuple[float, float, float]


def get_threads() -> int:
    """
    Read the sweep parallelism cap from the GENMOM_THREADS environment variable.

    Defaults to the number of processors when the variable is unset.

    Raises
    ------
    ValueError
        If the variable is set to anything but a positive integer.
    """
    raw = os.environ.get(GENMOM_THREADS_ENV)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"{GENMOM_THREADS_ENV} must be a positive integer, not {raw!r}") from None
    if threads < 1:
        raise ValueError(f"{GENMOM_THREADS_ENV} must be a positive integer, not {raw!r}")
    return threads


def _record(
    check_id: str,
    inputs: Dict[str, Any],
    measured: Dict[str, Any],
    tolerance: Optional[float],
    passed: bool,
    soft: bool = False,
) -> CheckRecord:
    """A check record; a failed soft check is reported as `flag` instead of `fail`."""
    if passed:
        status = "pass"
    else:
        status = "flag" if soft else "fail"
        logger.warning(f"Check {check_id} {status}: {measured}")
    return CheckRecord(
        check_id=check_id, inputs=inputs, measured=measured, tolerance=tolerance, status=status
    )


def _grid_block(g: Grid) -> Dict[str, Number]:
    return {"x_min": g.x_min, "x_max": g.x_max, "n": g.n}


def _max_gap(left: np.ndarray, right: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(left) - np.asarray(right))))


def _disk_draw(rng: np.random.Generator, radius: float) -> Tuple[float, float]:
    """A point drawn uniformly from the disk of the given radius."""
    r = radius * math.sqrt(rng.uniform(0.0, 1.0))
    angle = rng.uniform(0.0, 2.0 * math.pi)
    return r * math.cos(angle), r * math.sin(angle)


def _packet_draw(rng: np.random.Generator) -> Packet:
    return (
        float(rng.uniform(*PACKET_CENTER_RANGE)),
        float(rng.uniform(*PACKET_WIDTH_RANGE)),
        float(rng.uniform(*PACKET_MOMENTUM_RANGE)),
    )


def _packet(g: Grid, packet: Packet) -> GridFunction:
    center, width, momentum = packet
    return normalize(gaussian(g, center=center, width=width, momentum=momentum))


class Runner:
    """genmom verification runner.

    Runs the verification suites and renders curves. Parameter sweeps inside
    a suite are spread over a thread pool while the runner is used as a
    context manager; records are always assembled in draw order, so reports
    do not depend on the number of threads.
    """

    def __init__(self, threads: Optional[int] = None):
        """Initialize the runner."""
        self.threads = threads if threads is not None else get_threads()
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, not {self.threads}")
        self._executor: Optional[ThreadPoolExecutor] = None

    def __enter__(self) -> "Runner":
        """Enter the runner context."""
        self._executor = ThreadPoolExecutor(max_workers=self.threads)
        return self

    def __exit__(
        self,
        exception_type: Optional[Union[ValueError, TypeError, AssertionError]],
        exception_value: Optional[Exception],
        traceback: Optional[Exception],
    ) -> None:
        """Exit the runner context."""
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def _map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        if self._executor is None:
            return [fn(item) for item in items]
        return list(self._executor.map(fn, items))

    def run(self, config: RunConfig) -> Report:
        """
        Run the configured suites.

        Parameters
        ----------
        config : RunConfig
            Suite, parameters, output path and format.

        Returns
        -------
        Report
            Every record of every suite run, in suite order. The report is
            also written to `config.output_path` when one is given.
        """
        params = config.resolved
        records: List[CheckRecord] = []
        for suite in config.suites:
            logger.info(f"Running suite {suite}")
            records.extend(getattr(self, suite)(params))
        report = Report(suite=config.suite, records=records, environment=self._environment(params))
        logger.info(
            f"Suite {config.suite}: {len(records)} checks, {len(report.failed)} failed, {len(report.flagged)} flagged"
        )
        if config.output_path:
            _write_text(config.output_path, report.render(config.format))
        return report

    @staticmethod
    def _environment(params: Dict[str, Number]) -> Dict[str, Any]:
        x_grid, k_grid = _param_grids(params)
        return {
            "version": GENMOM_VERSION,
            "hbar": HBAR,
            "units": "hbar = 1; well energies in units of hbar**2 / (m L**2) times (k0 L)**2 / 2",
            "params": dict(sorted(params.items())),
            "x_grid": _grid_block(x_grid),
            "k_grid": _grid_block(k_grid),
            "suite_grids": {
                "kernel": list(KERNEL_GRID),
                "hermiticity": list(HERMITICITY_GRID),
                "eigen": list(EIGEN_GRID),
                "packets": list(PACKET_GRID),
                "composition": list(COMPOSITION_GRID),
            },
        }

    def kernel(self, params: Dict[str, Number]) -> List[CheckRecord]:
        """Kernel reconstruction and kernel-equation residuals."""
        g = make_grid(*KERNEL_GRID)
        k, x = float(params["k"]), float(params["x"])
        records = []

        G = reconstruct_G(lambda s: -1j, k, g)
        defect = kernel_defect_G(G, k)
        records.append(_record("kernel.G.standard", {"f": "-i", "k": k}, {"defect": defect}, 1e-8, defect < 1e-8))

        Gt = reconstruct_Gtilde(lambda s: 1j, x, g)
        defect = kernel_defect_Gtilde(Gt, x)
        records.append(_record("kernel.Gtilde.standard", {"h": "i", "x": x}, {"defect": defect}, 1e-8, defect < 1e-8))

        # f = -2i solves the kernel equation for e^{-ikx/2}, not e^{-ikx}
        G = reconstruct_G(lambda s: -2j, k, g)
        halved = _max_gap(G.values, np.exp(-0.5j * k * g.points))
        records.append(
            _record(
                "kernel.G.non_solution",
                {"f": "-2i", "k": k},
                {"defect_half_rate": halved, "defect_plane_wave": kernel_defect_G(G, k)},
                1e-8,
                halved < 1e-8,
            )
        )

        example = KernelParamsP(C=complex(1.0, 0.5), k=2.0)
        residual = ode_residual_G(lambda s: f_of_x(example, s), example.k, g)
        records.append(
            _record("kernel.ode_G.solution", {"C": example.C, "k": example.k}, {"residual": residual}, 1e-8, residual < 1e-8)
        )
        residual = ode_residual_G(lambda s: 1.0, example.k, g)
        records.append(
            _record("kernel.ode_G.constant", {"f": 1.0, "k": example.k}, {"residual": residual}, None, residual > 0.1)
        )
        dual = KernelParamsX(D=complex(0.3, -0.4), x=1.5)
        residual = ode_residual_Gtilde(lambda s: h_of_k(dual, s), dual.x, g)
        records.append(
            _record("kernel.ode_Gtilde.solution", {"D": dual.D, "x": dual.x}, {"residual": residual}, 1e-8, residual < 1e-8)
        )

        rng = np.random.default_rng(int(params["seed"]))
        position_draws = [self._kernel_draw(rng, g, dual=False) for _ in range(KERNEL_DRAWS)]
        momentum_draws = [self._kernel_draw(rng, g, dual=True) for _ in range(KERNEL_DRAWS)]

        def position_defect(p: KernelParamsP) -> float:
            return kernel_defect_G(reconstruct_G(lambda s: f_of_x(p, s), p.k, g), p.k)

        def momentum_defect(q: KernelParamsX) -> float:
            return kernel_defect_Gtilde(reconstruct_Gtilde(lambda s: h_of_k(q, s), q.x, g), q.x)

        for check_id, draws, evaluate in (
            ("kernel.G.draws", position_draws, position_defect),
            ("kernel.Gtilde.draws", momentum_draws, momentum_defect),
        ):
            defects = self._map(evaluate, draws)
            worst = max(defects)
            records.append(
                _record(
                    check_id,
                    {"draws": len(draws), "seed": params["seed"], "min_modulus": KERNEL_DRAW_MIN_MODULUS},
                    {"max_defect": worst, "mean_defect": float(np.mean(defects))},
                    1e-6,
                    worst < 1e-6,
                )
            )
        return records

    @staticmethod
    def _kernel_draw(
        rng: np.random.Generator, g: Grid, dual: bool
    ) -> Union[KernelParamsP, KernelParamsX]:
        """Draw kernel constants whose kernel function stays away from zero on `g`."""
        while True:
            modulus = rng.uniform(*KERNEL_C_MODULUS_RANGE)
            constant = modulus * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
            label = float(rng.uniform(*KERNEL_LABEL_RANGE))
            drawn: Union[KernelParamsP, KernelParamsX]
            if dual:
                drawn = KernelParamsX(D=constant, x=label)
                values = h_of_k(drawn, g.points)
            else:
                drawn = KernelParamsP(C=constant, k=label)
                values = f_of_x(drawn, g.points)
            if np.min(np.abs(values)) >= KERNEL_DRAW_MIN_MODULUS:
                return drawn

    def hermiticity(self, params: Dict[str, Number]) -> List[CheckRecord]:
        """Adjoint defects of the Hermitian and non-Hermitian operators."""
        g = make_grid(*HERMITICITY_GRID)
        records = []

        unit = gaussian(g)
        C, k = 1.0, 1.0
        result = hermiticity_defect("p", KernelParamsP(C=C, k=k), unit, unit)
        expected = abs(k) * abs(C) * math.exp(-k * k / 4.0)
        gap = abs(result.defect - expected)
        records.append(
            _record(
                "hermiticity.p.gaussian",
                {"C": C, "k": k, "state": "unit gaussian"},
                {"defect": result.defect, "expected": expected},
                1e-6,
                gap < 1e-6,
            )
        )

        rng = np.random.default_rng(int(params["seed"]) + 1)
        draws = [self._hermiticity_draw(rng) for _ in range(HERMITICITY_DRAWS)]

        def evaluate(draw: Tuple[DeformParamsP, DeformParamsX, Packet, Packet]) -> Dict[str, float]:
            dp, dx, first, second = draw
            phi, psi = _packet(g, first), _packet(g, second)
            kp, kx = dp.kernel(), dx.kernel()
            p_h = hermiticity_defect("pH", dp, phi, psi)
            x_h = hermiticity_defect("xH", dx, phi, psi)
            p = hermiticity_defect("p", kp, phi, psi)
            return {
                "pH": p_h.defect,
                "xH": x_h.defect,
                "p": p.defect,
                "flagged": float(p_h.flagged or x_h.flagged),
                "pH_split": _max_gap(
                    apply_pH(psi, dp).values, (0.5 * (apply_p(psi, kp) + apply_p_dagger(psi, kp))).values
                ),
                "xH_split": _max_gap(
                    apply_xH(psi, dx).values,
                    (0.5 * (apply_x_momentum(psi, kx) + apply_x_dagger(psi, kx))).values,
                ),
            }

        results = self._map(evaluate, draws)
        inputs = {"draws": len(draws), "seed": int(params["seed"]) + 1, "grid": list(HERMITICITY_GRID)}
        flagged = any(r["flagged"] for r in results)
        for name in ("pH", "xH"):
            worst = max(r[name] for r in results)
            records.append(
                _record(
                    f"hermiticity.{name}.draws",
                    inputs,
                    {"max_defect": worst, "edge_flagged": flagged},
                    1e-6,
                    worst < 1e-6 and not flagged,
                )
            )
        for name in ("pH_split", "xH_split"):
            worst = max(r[name] for r in results)
            records.append(
                _record(f"hermiticity.{name}", inputs, {"max_gap": worst}, 1e-10, worst < 1e-10)
            )
        smallest = min(r["p"] for r in results)
        records.append(
            _record(
                "hermiticity.p.draws",
                {**inputs, "min_modulus": NON_HERMITIAN_MIN_MODULUS},
                {"min_defect": smallest},
                1e-2,
                smallest > 1e-2,
                soft=True,
            )
        )
        return records

    @staticmethod
    def _hermiticity_draw(
        rng: np.random.Generator,
    ) -> Tuple[DeformParamsP, DeformParamsX, Packet, Packet]:
        while True:
            a, b = _disk_draw(rng, HERMITICITY_DISK_RADIUS)
            if math.hypot(a, b) >= NON_HERMITIAN_MIN_MODULUS:
                break
        c, d = _disk_draw(rng, HERMITICITY_DISK_RADIUS)
        dp = DeformParamsP(a=a, b=b, k=float(rng.uniform(*HERMITICITY_LABEL_RANGE)))
        dx = DeformParamsX(c=c, d=d, x=float(rng.uniform(*HERMITICITY_LABEL_RANGE)))
        return dp, dx, _packet_draw(rng), _packet_draw(rng)

    def eigen(self, params: Dict[str, Number]) -> List[CheckRecord]:  # noqa: C901
        """Closed-form and numeric eigenfunctions of the Hermitian momentum operator."""
        g = make_grid(*EIGEN_GRID)
        a, b, k = float(params["a"]), float(params["b"]), float(params["k"])
        records = []

        if k == 0:
            records.append(
                _record("eigen.degenerate", {"k": k}, {"note": "k = 0 eigenfunctions are constant"}, None, False, soft=True)
            )
        else:
            psi = sample(lambda s: psi_case_a(a, k, s), g)
            residual = eigen_residual(psi, DeformParamsP(a=a, b=0.0, k=k))
            records.append(
                _record("eigen.case_a.params", {"a": a, "k": k}, {"eigen_residual": residual}, 1e-6, residual < 1e-6)
            )
            psi = sample(lambda s: psi_case_b(b, k, s), g)
            residual = eigen_residual(psi, DeformParamsP(a=0.0, b=b, k=k))
            records.append(
                _record("eigen.case_b.params", {"b": b, "k": k}, {"eigen_residual": residual}, 1e-6, residual < 1e-6)
            )
            plane = sample(lambda s: np.exp(1j * k * s) / math.sqrt(2.0 * math.pi), g)
            standard = eigen_residual(plane, DeformParamsP(a=0.0, b=0.0, k=k))
            deformed = eigen_residual(plane, DeformParamsP(a=0.5, b=0.0, k=k))
            records.append(
                _record("eigen.plane_wave.standard", {"k": k}, {"eigen_residual": standard}, 1e-8, standard < 1e-8)
            )
            records.append(
                _record("eigen.plane_wave.deformed", {"a": 0.5, "k": k}, {"eigen_residual": deformed}, None, deformed > 1e-2, soft=True)
            )

            samples = EIGEN_PHASE_SAMPLES_PER_PERIOD * 8
            xs = np.linspace(0.0, 8.0 * 2.0 * math.pi / abs(k), samples + 1)
            jump = float(np.max(np.abs(np.diff(phase_case_a(a, k, xs)))))
            records.append(
                _record(
                    "eigen.phase.continuity",
                    {"a": a, "k": k, "samples_per_period": EIGEN_PHASE_SAMPLES_PER_PERIOD},
                    {"max_jump": jump},
                    math.pi / 2.0,
                    jump < math.pi / 2.0,
                )
            )

        rng = np.random.default_rng(int(params["seed"]) + 2)
        draws = [
            (float(rng.uniform(*EIGEN_PARAM_RANGE)), float(rng.uniform(*EIGEN_K_RANGE)))
            for _ in range(EIGEN_DRAWS)
        ]

        def evaluate_a(draw: Tuple[float, float]) -> Tuple[float, float]:
            pa, pk = draw
            values = psi_case_a(pa, pk, g.points)
            residual = eigen_residual(GridFunction(grid=g, values=values), DeformParamsP(a=pa, b=0.0, k=pk))
            return residual, _max_gap(np.abs(values) ** 2, density_case_a(pa, pk, g.points))

        def evaluate_b(draw: Tuple[float, float]) -> Tuple[float, float]:
            pb, pk = draw
            values = psi_case_b(pb, pk, g.points)
            residual = eigen_residual(GridFunction(grid=g, values=values), DeformParamsP(a=0.0, b=pb, k=pk))
            return residual, _max_gap(np.abs(values) ** 2, density_case_b(pb, pk, g.points))

        inputs = {"draws": len(draws), "seed": int(params["seed"]) + 2, "grid": list(EIGEN_GRID)}
        for case, evaluate in (("case_a", evaluate_a), ("case_b", evaluate_b)):
            results = self._map(evaluate, draws)
            worst = max(r[0] for r in results)
            records.append(
                _record(f"eigen.{case}.draws", inputs, {"max_eigen_residual": worst}, 1e-6, worst < 1e-6)
            )
            worst = max(r[1] for r in results)
            records.append(
                _record(f"eigen.{case}.density", inputs, {"max_gap": worst}, 1e-12, worst < 1e-12)
            )

        quad_a, quad_k = 0.3, 2.0
        for case, closed, oracle in (
            ("case_a", psi_case_a, I1_quadrature),
            ("case_b", psi_case_b, I2_quadrature),
        ):
            origin = complex(closed(quad_a, quad_k, 0.0))
            gaps = [
                abs(complex(closed(quad_a, quad_k, s)) / origin - np.exp(1j * quad_k * oracle(quad_a, quad_k, s)))
                for s in EIGEN_QUADRATURE_POINTS
            ]
            worst = max(gaps)
            records.append(
                _record(
                    f"eigen.{case}.quadrature",
                    {"parameter": quad_a, "k": quad_k, "x": EIGEN_QUADRATURE_POINTS},
                    {"max_gap": worst},
                    1e-7,
                    worst < 1e-7,
                )
            )

        plane = np.exp(1j * 1.0 * g.points) / math.sqrt(2.0 * math.pi)
        for case, closed in (("case_a", psi_case_a), ("case_b", psi_case_b)):
            gaps = [_max_gap(closed(eps, 1.0, g.points), plane) for eps in EIGEN_LIMIT_PARAMS]
            ratios = [gaps[i + 1] / gaps[i] for i in range(len(gaps) - 1)]
            records.append(
                _record(
                    f"eigen.{case}.limit",
                    {"parameters": EIGEN_LIMIT_PARAMS, "k": 1.0},
                    {"max_gap": gaps, "ratios": ratios},
                    EIGEN_LIMIT_RATIO,
                    all(r < EIGEN_LIMIT_RATIO for r in ratios),
                )
            )

        general_k = k if k != 0 else 1.0
        numeric = psi_general_numeric(0.4, 0.3, general_k, g)
        records.append(
            _record(
                "eigen.general.residual",
                {"a": 0.4, "b": 0.3, "k": general_k},
                {"eigen_residual": numeric.residual, "rtol": numeric.rtol},
                GENERAL_RESIDUAL_TOL,
                numeric.converged,
            )
        )
        origin = g.index_of(0.0)
        for case, pa, pb, closed in (
            ("case_a", 0.5, 0.0, lambda s: psi_case_a(0.5, general_k, s)),
            ("case_b", 0.0, 0.5, lambda s: psi_case_b(0.5, general_k, s)),
        ):
            values = psi_general_numeric(pa, pb, general_k, g).psi.values
            reference = closed(g.points)
            if origin is None:
                gap = float("nan")
            else:
                gap = _max_gap(values / values[origin], reference / reference[origin])
            records.append(
                _record(
                    f"eigen.general.{case}",
                    {"a": pa, "b": pb, "k": general_k},
                    {"max_relative_gap": gap},
                    1e-6,
                    gap < 1e-6,
                )
            )
        return records

    def ortho(self, params: Dict[str, Number]) -> List[CheckRecord]:
        """Truncated orthonormality of the case-a eigenfunctions."""
        k, kp = float(params["k"]), float(params["kp"])
        window, n = float(params["window"]), int(params["n"])
        records = []

        report = orthonormality_report(0.0, k, kp, window, n)
        if k == kp:
            expected = window / math.pi
        else:
            expected = math.sin((k - kp) * window) / (math.pi * (k - kp))
        gap = abs(report.overlap - expected)
        records.append(
            _record(
                "ortho.dirichlet",
                {"a": 0.0, "k": k, "kp": kp, "window": window},
                {"overlap": report.overlap, "expected": expected, "gap": gap},
                1e-8,
                gap < 1e-8,
            )
        )
        records.append(
            _record(
                "ortho.phase_identity.standard",
                {"a": 0.0, "k": k, "kp": kp},
                {"defect": report.phase_identity_defect},
                1e-10,
                report.phase_identity_defect < 1e-10,
            )
        )

        for a in sorted({0.3, float(params["a"])}):
            report = orthonormality_report(a, k, kp, window, n)
            finer = orthonormality_report(a, k, kp, window, 2 * n - 1)
            inputs = {"a": a, "k": k, "kp": kp, "window": window}
            records.append(
                _record(
                    f"ortho.phase_identity.a={a}",
                    inputs,
                    {"defect": report.phase_identity_defect},
                    1e-10,
                    report.phase_identity_defect < 1e-10,
                    soft=True,
                )
            )
            records.append(
                _record(
                    f"ortho.off_diagonal.a={a}",
                    inputs,
                    {
                        "overlap": report.overlap,
                        "diagonal": report.diagonal,
                        "ratio": report.off_diagonal_ratio,
                        "resolution_gap": abs(report.overlap - finer.overlap),
                    },
                    ORTHO_OFF_DIAGONAL_RATIO,
                    report.off_diagonal_ratio < ORTHO_OFF_DIAGONAL_RATIO,
                    soft=True,
                )
            )
            g = symmetric_grid(window, n)
            phase_gap = _max_gap(
                Phi_of_x(a, k, kp, g.points), phase_case_a(a, k, g.points) - phase_case_a(a, kp, g.points)
            )
            records.append(
                _record(f"ortho.phase_difference.a={a}", inputs, {"max_gap": phase_gap}, 1e-7, phase_gap < 1e-7)
            )
            increasing = bool(np.all(np.diff(W_on_grid(a, k, kp, g)) > 0))
            records.append(
                _record(f"ortho.W_monotonic.a={a}", inputs, {"increasing": increasing}, None, increasing)
            )
        return records

    def commutator(self, params: Dict[str, Number]) -> List[CheckRecord]:  # noqa: C901
        """Deformed commutator expectation values in both bases."""
        x_grid, k_grid = _param_grids(params)
        psi = gaussian(x_grid)
        phi = inverse_ft(psi, k_grid)
        records = []

        def scenario(a: float = 0.0, b: float = 0.0, k: float = 1.0, c: float = 0.0, d: float = 0.0, x: float = 1.0) -> CommutatorScenario:
            return CommutatorScenario(
                dp=DeformParamsP(a=a, b=b, k=k), dx=DeformParamsX(c=c, d=d, x=x), psi=psi, phi=phi
            )

        canonical = scenario()
        values = [
            expectation_x_basis(canonical),
            closed_form_x(canonical),
            expectation_k_basis(canonical),
            closed_form_k(canonical),
        ]
        worst = max(abs(v - 1j * HBAR) for v in values)
        records.append(
            _record("commutator.canonical", {"a": 0, "b": 0, "c": 0, "d": 0}, {"values": values, "max_gap": worst}, 1e-10, worst < 1e-10)
        )

        shift = 0.4 * math.exp(-0.25)
        for check_id, sc, basis, expected in (
            ("commutator.gaussian.b", scenario(b=0.4), "x", 1j * (1.0 - shift)),
            ("commutator.gaussian.d", scenario(d=0.4), "k", 1j * (1.0 + shift)),
        ):
            if basis == "x":
                direct, closed = expectation_x_basis(sc), closed_form_x(sc)
            else:
                direct, closed = expectation_k_basis(sc), closed_form_k(sc)
            gap = max(abs(direct - expected), abs(closed - expected))
            records.append(
                _record(
                    check_id,
                    {"b": sc.dp.b, "d": sc.dx.d, "k": sc.dp.k, "x": sc.dx.x},
                    {"direct": direct, "closed_form": closed, "expected": expected},
                    1e-8,
                    gap < 1e-8,
                )
            )

        configured = scenario(
            a=float(params["a"]), b=float(params["b"]), k=float(params["k"]),
            c=float(params["c"]), d=float(params["d"]), x=float(params["x"]),
        )
        configured_inputs = {key: params[key] for key in ("a", "b", "c", "d", "k", "x")}
        records.extend(self._commutator_agreement("commutator.params", configured_inputs, [configured]))

        gauss = 1.0 / math.sqrt(2.0 * math.pi)
        for check_id, sc, x_value, expected in (
            ("commutator.R.same_sign", scenario(b=0.4, d=0.4), 1.0, -0.8 * math.exp(-0.25) * gauss),
            ("commutator.R.root", scenario(b=0.4, d=-0.4), 1.0, 0.0),
            ("commutator.R.off_root", scenario(b=0.4, d=-0.4), 2.0, 0.4 * (math.exp(-1.0) - math.exp(-0.25)) * gauss),
        ):
            value = float(residual_curve(sc, "x", x_value)[0])
            records.append(
                _record(
                    check_id,
                    {"b": sc.dp.b, "d": sc.dx.d, "k": sc.dp.k, "x": x_value},
                    {"R": value, "expected": expected},
                    1e-10,
                    abs(value - expected) < 1e-10,
                )
            )

        lower, upper = ROOT_SCAN_RANGE
        for scan in ("x", "k"):
            found = find_independence_roots(scenario(b=0.4, d=-0.4), lower, upper, ROOT_SCAN_SEEDS, scan=scan)
            ok = len(found.roots) == 1 and abs(found.roots[0] - 1.0) < ROOT_DEDUP_TOL
            records.append(
                _record(
                    f"commutator.roots.{scan}",
                    {"b": 0.4, "d": -0.4, "fixed": found.fixed, "range": [lower, upper]},
                    {"roots": found.roots},
                    ROOT_DEDUP_TOL,
                    ok,
                )
            )
        found = find_independence_roots(scenario(b=0.4, d=0.4), lower, upper, ROOT_SCAN_SEEDS)
        records.append(
            _record("commutator.roots.none", {"b": 0.4, "d": 0.4, "range": [lower, upper]}, {"roots": found.roots}, None, not found.roots)
        )
        found = find_independence_roots(canonical, lower, upper, ROOT_SCAN_SEEDS)
        records.append(
            _record(
                "commutator.roots.identically_zero",
                {"a": 0, "b": 0, "c": 0, "d": 0},
                {"identically_zero": found.identically_zero},
                None,
                found.identically_zero,
            )
        )

        g = make_grid(*COMPOSITION_GRID)
        unit = gaussian(g)
        dp, dx = configured.dp, configured.dx
        defect_x = composition_defect_x(unit, dp)
        defect_k = composition_defect_k(unit, dx)
        records.append(
            _record("commutator.composition.x", {"a": dp.a, "b": dp.b, "k": dp.k}, {"defect": defect_x}, 1e-8, defect_x < 1e-8)
        )
        records.append(
            _record("commutator.composition.k", {"c": dx.c, "d": dx.d, "x": dx.x}, {"defect": defect_k}, 1e-8, defect_k < 1e-8)
        )

        rng = np.random.default_rng(int(params["seed"]) + 3)
        draws = [self._commutator_draw(rng) for _ in range(COMMUTATOR_DRAWS)]
        packets = make_grid(*PACKET_GRID)

        def build(draw: Tuple[DeformParamsP, DeformParamsX, Packet]) -> CommutatorScenario:
            dp, dx, packet = draw
            state = _packet(packets, packet)
            return CommutatorScenario(dp=dp, dx=dx, psi=state, phi=inverse_ft(state, packets))

        records.extend(
            self._commutator_agreement(
                "commutator.draws",
                {"draws": len(draws), "seed": int(params["seed"]) + 3, "grid": list(PACKET_GRID)},
                self._map(build, draws),
            )
        )
        return records

    def _commutator_agreement(
        self, prefix: str, inputs: Dict[str, Any], scenarios: List[CommutatorScenario]
    ) -> List[CheckRecord]:
        """Direct quadrature against closed forms in both bases, worst case over `scenarios`."""

        def evaluate(sc: CommutatorScenario) -> Tuple[float, float, float]:
            direct_x, direct_k = expectation_x_basis(sc), expectation_k_basis(sc)
            return (
                abs(direct_x - closed_form_x(sc)),
                abs(direct_k - closed_form_k(sc)),
                max(abs(direct_x.real), abs(direct_k.real)),
            )

        results = self._map(evaluate, scenarios)
        worst_x = max(r[0] for r in results)
        worst_k = max(r[1] for r in results)
        worst_real = max(r[2] for r in results)
        return [
            _record(f"{prefix}.x_basis", inputs, {"max_gap": worst_x}, 1e-8, worst_x < 1e-8),
            _record(f"{prefix}.k_basis", inputs, {"max_gap": worst_k}, 1e-8, worst_k < 1e-8),
            _record(f"{prefix}.real_part", inputs, {"max_real": worst_real}, 1e-10, worst_real < 1e-10),
        ]

    @staticmethod
    def _commutator_draw(rng: np.random.Generator) -> Tuple[DeformParamsP, DeformParamsX, Packet]:
        a, b = _disk_draw(rng, HERMITICITY_DISK_RADIUS)
        c, d = _disk_draw(rng, HERMITICITY_DISK_RADIUS)
        dp = DeformParamsP(a=a, b=b, k=float(rng.uniform(*HERMITICITY_LABEL_RANGE)))
        dx = DeformParamsX(c=c, d=d, x=float(rng.uniform(*HERMITICITY_LABEL_RANGE)))
        return dp, dx, _packet_draw(rng)

    def well(self, params: Dict[str, Number]) -> List[CheckRecord]:
        """Infinite square well spectrum and eigenfunctions."""
        L, m, n_max = float(params["L"]), float(params["m"]), int(params["n_max"])
        records = []
        k_max = (n_max + 0.5) * math.pi / L

        def sweep(a: float) -> List[float]:
            return confirmed_roots(WellConfig(L=L, m=m, a=a, n_max=n_max), k_max, WELL_SCAN_POINTS)

        expected = [n * math.pi / L for n in range(1, n_max + 1)]
        for a, roots in zip(WELL_A_SWEEP, self._map(sweep, WELL_A_SWEEP)):
            matched = len(roots) == n_max and all(
                abs(r - e) < WELL_ROOT_TOL for r, e in zip(roots, expected)
            )
            cfg = WellConfig(L=L, m=m, a=a, n_max=n_max)
            records.append(
                _record(
                    f"well.spectrum.a={a}",
                    {"a": a, "L": L, "k_max": k_max, "scan_points": WELL_SCAN_POINTS},
                    {"roots": roots, "expected": expected, "energies": [level.E for level in spectrum(cfg)]},
                    WELL_ROOT_TOL,
                    matched,
                    soft=a != 0,
                )
            )
            residuals = boundary_residual(cfg, np.array(expected))
            predicted = np.array([predicted_level_residual(a, n) for n in range(1, n_max + 1)])
            gap = _max_gap(residuals, predicted)
            records.append(
                _record(
                    f"well.level_residual.a={a}",
                    {"a": a, "L": L},
                    {"residuals": residuals, "predicted": predicted},
                    1e-10,
                    gap < 1e-10,
                )
            )

        a = float(params["a"])
        cfg = WellConfig(L=L, m=m, a=a, n_max=n_max)
        g = make_grid(0.0, L, int(params["n"]))
        for n in range(1, n_max + 1):
            state = psi_n(cfg, n, g)
            inputs = {"a": a, "L": L, "n": n}
            walls = {"left": abs(state.values[0]), "right": abs(state.values[-1])}
            records.append(
                _record(f"well.psi_n.left_wall.n={n}", inputs, {"value": walls["left"]}, 0.0, walls["left"] == 0.0)
            )
            records.append(
                _record(
                    f"well.psi_n.right_wall.n={n}",
                    inputs,
                    {"value": walls["right"]},
                    WELL_WALL_TOL,
                    walls["right"] < WELL_WALL_TOL,
                    soft=a != 0,
                )
            )
            norm2 = norm_report(state)
            records.append(
                _record(f"well.psi_n.norm.n={n}", inputs, {"norm": norm2}, 1e-10, abs(norm2 - 1.0) < 1e-10, soft=a != 0)
            )
            plus, minus = branch_eigen_residuals(cfg, n, g)
            worst = max(plus, minus)
            records.append(
                _record(f"well.branches.n={n}", inputs, {"plus": plus, "minus": minus}, 1e-6, worst < 1e-6)
            )
            squared = squared_eigen_residual(cfg, n, g)
            records.append(
                _record(f"well.squared.n={n}", inputs, {"residual": squared}, 1e-5, squared < 1e-5, soft=a != 0)
            )

        limit = WellConfig(L=L, m=m, a=WELL_LIMIT_A, n_max=n_max)
        xs = g.points
        gaps = [
            _max_gap(psi_n_values(limit, n, xs), math.sqrt(2.0 / L) * np.sin(n * math.pi * xs / L))
            for n in range(1, n_max + 1)
        ]
        worst = max(gaps)
        records.append(
            _record("well.limit", {"a": WELL_LIMIT_A, "L": L}, {"max_gap": gaps}, WELL_LIMIT_TOL, worst < WELL_LIMIT_TOL)
        )
        return records

    def fourier(self, params: Dict[str, Number]) -> List[CheckRecord]:
        """Transform pair, operator correspondences and density transforms."""
        x_grid, k_grid = _param_grids(params)
        psi = gaussian(x_grid)
        exact_beta = gaussian(k_grid)
        records = []
        inputs = {"x_grid": _grid_block(x_grid), "k_grid": _grid_block(k_grid)}

        beta = inverse_ft(psi, k_grid)
        gap = _max_gap(beta.values, exact_beta.values)
        records.append(_record("fourier.self_transform.inverse", inputs, {"max_gap": gap}, 1e-9, gap < 1e-9))
        alpha = forward_ft(exact_beta, x_grid)
        gap = _max_gap(alpha.values, psi.values)
        records.append(_record("fourier.self_transform.forward", inputs, {"max_gap": gap}, 1e-9, gap < 1e-9))
        gap = _max_gap(forward_ft(beta, x_grid).values, psi.values)
        records.append(_record("fourier.round_trip", inputs, {"max_gap": gap}, 1e-9, gap < 1e-9))

        defect = verify_momentum_correspondence(psi, k_grid)
        records.append(_record("fourier.momentum_correspondence", inputs, {"defect": defect}, 1e-8, defect < 1e-8))
        defect = verify_position_correspondence(exact_beta, x_grid)
        records.append(_record("fourier.position_correspondence", inputs, {"defect": defect}, 1e-8, defect < 1e-8))

        coarse = make_grid(*COARSE_GRID)
        constant = sample(lambda s: 1.0, coarse)
        pair = ft_pair(constant, coarse, inverse=True)
        defect = verify_momentum_correspondence(constant, coarse)
        records.append(
            _record(
                "fourier.non_decaying",
                {"grid": list(COARSE_GRID), "state": "constant 1"},
                {"defect": defect, "edge_flagged": pair.edge_flagged},
                None,
                pair.edge_flagged and defect > 1e-3,
            )
        )

        gauss = 1.0 / math.sqrt(2.0 * math.pi)
        reference = gauss * np.exp(-coarse.points**2 / 4.0)
        gap = _max_gap(eta(exact_beta, coarse).values, reference)
        records.append(_record("fourier.eta.gaussian", inputs, {"max_gap": gap, "eta_0": gauss}, 1e-9, gap < 1e-9))
        gap = _max_gap(sigma(psi, coarse).values, reference)
        records.append(_record("fourier.sigma.gaussian", inputs, {"max_gap": gap}, 1e-9, gap < 1e-9))

        packets = make_grid(*PACKET_GRID)
        shifted = _packet(packets, (0.7, 0.8, 1.3))
        shifted_phi = inverse_ft(shifted, packets)
        packet_inputs = {"center": 0.7, "width": 0.8, "momentum": 1.3, "grid": list(PACKET_GRID)}
        for check_id, transformed in (
            ("fourier.sigma.conjugate_symmetry", sigma(shifted, packets)),
            ("fourier.eta.conjugate_symmetry", eta(shifted_phi, packets)),
        ):
            gap = _max_gap(np.conj(transformed.values), transformed.values[::-1])
            records.append(_record(check_id, packet_inputs, {"max_gap": gap}, 1e-10, gap < 1e-10))
        return records

    def emit_curve(self, config: CurveConfig) -> str:
        """
        Render one quantity as a two-column CSV curve.

        Parameters
        ----------
        config : CurveConfig
            Quantity, parameters and output path.

        Returns
        -------
        str
            The CSV text, also written to `config.output_path` when one is
            given.
        """
        params = config.resolved
        quantity = config.quantity
        points = int(params.get("points", CURVE_DEFAULT_POINTS))
        if quantity.startswith("psi_n"):
            default_range = (0.0, float(params["L"]))
        else:
            default_range = CURVE_DEFAULT_RANGES[quantity]
        lower = float(params.get("x_min", default_range[0]))
        upper = float(params.get("x_max", default_range[1]))
        if not upper > lower:
            raise ValueError(f"x_max must be greater than x_min, got [{lower}, {upper}]")
        axis = np.linspace(lower, upper, points)

        values = self._curve_values(quantity, params, axis)
        if np.iscomplexobj(values):
            dropped = float(np.max(np.abs(values.imag)))
            if dropped > CURVE_IMAG_WARN_TOL:
                logger.warning(f"{quantity} has an imaginary part up to {dropped:.3e}, writing the real part")
            values = values.real

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["k" if quantity == "sigma" else "x", "value"])
        for t, v in zip(axis, values):
            writer.writerow([_format_number(t), _format_number(v)])
        text = buffer.getvalue()
        if config.output_path:
            _write_text(config.output_path, text)
        return text

    @staticmethod
    def _curve_values(quantity: str, params: Dict[str, Number], axis: np.ndarray) -> np.ndarray:
        a, b, k = float(params["a"]), float(params["b"]), float(params["k"])
        if quantity == "density_a":
            return density_case_a(a, k, axis)
        if quantity == "density_b":
            return density_case_b(b, k, axis)
        if quantity in ("psi_n_real", "psi_n_imag"):
            level = int(params.get("level", 1))
            cfg = WellConfig(
                L=float(params["L"]), m=float(params["m"]), a=a, n_max=max(int(params["n_max"]), level)
            )
            values = psi_n_values(cfg, level, axis)
            return values.real if quantity == "psi_n_real" else values.imag
        x_grid, k_grid = _param_grids(params)
        psi = gaussian(x_grid)
        if quantity == "sigma":
            return sigma_at(psi, axis)
        phi = inverse_ft(psi, k_grid)
        if quantity == "eta":
            return eta_at(phi, axis)
        sc = CommutatorScenario(
            dp=DeformParamsP(a=a, b=b, k=k),
            dx=DeformParamsX(c=float(params["c"]), d=float(params["d"]), x=float(params["x"])),
            psi=psi,
            phi=phi,
        )
        return residual_curve(sc, "x", axis)


def _param_grids(params: Dict[str, Number]) -> Tuple[Grid, Grid]:
    """The configured position and momentum grids."""
    n = int(params["n"])
    return symmetric_grid(float(params["window"]), n), symmetric_grid(float(params["k_window"]), n)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"Wrote {path}")
