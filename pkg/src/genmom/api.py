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

"""genmom function wrappers."""

from typing import Dict, Optional, Union

from .core_objects import CurveConfig, Report, RunConfig
from .runner import Runner


Number = Union[int, float]


def run(
    suite: str,
    params: Optional[Dict[str, Number]] = None,
    output_path: Optional[str] = None,
    format: str = "json",
    threads: Optional[int] = None,
) -> Report:
    """
    Run a verification suite.

    Parameters
    ----------
    suite : str
        One of `kernel`, `hermiticity`, `eigen`, `ortho`, `commutator`,
        `well`, `fourier`, or `all`.
    params : dict, optional
        Overrides of the default parameters. The default is None, which runs
        with the defaults.
    output_path : str, optional
        Where to write the rendered report. The default is None, in which
        case nothing is written.
    format : str
        `json` or `csv`. The default is `json`.
    threads : int, optional
        Cap on the sweep parallelism. The default is None. If None, it is
        read from the environment variable GENMOM_THREADS.

    Raises
    ------
    ValueError
        If the suite, the format or any parameter is invalid.

    Returns
    -------
    Report
        The report; `report.exit_code` is 1 when any check failed.
    """
    config = RunConfig(
        suite=suite, params=params or {}, output_path=output_path, format=format
    )
    with Runner(threads=threads) as runner:
        return runner.run(config)


def emit_curve(
    quantity: str,
    params: Optional[Dict[str, Number]] = None,
    output_path: Optional[str] = None,
    threads: Optional[int] = None,
) -> str:
    """
    Render a plot-ready curve as CSV.

    Parameters
    ----------
    quantity : str
        One of `density_a`, `density_b`, `psi_n_real`, `psi_n_imag`, `eta`,
        `sigma`, `residual_R`.
    params : dict, optional
        Overrides of the default parameters, plus `level`, `points`, `x_min`
        and `x_max` for the curve itself.
    output_path : str, optional
        Where to write the CSV. The default is None.
    threads : int, optional
        Cap on the parallelism, see `run`.

    Returns
    -------
    str
        The CSV text with a `x,value` (or `k,value`) header.
    """
    config = CurveConfig(quantity=quantity, params=params or {}, output_path=output_path)
    with Runner(threads=threads) as runner:
        return runner.emit_curve(config)
