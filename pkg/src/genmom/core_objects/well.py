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

"""genmom infinite square well objects."""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

from ..utils import _check_positive
from .grid import GridFunction
from .params import _check_real


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WellConfig:
    """Infinite square well of width L on [0, L] with b = 0 deformation `a`."""

    L: float
    m: float
    a: float
    n_max: int

    def __post_init__(self) -> None:
        """Post-init method."""
        for name in ("L", "m", "a"):
            _check_real(f"WellConfig.{name}", getattr(self, name))
        if not _check_positive(self.L):
            raise ValueError(f"WellConfig.L must be positive, not {self.L}")
        if not _check_positive(self.m):
            raise ValueError(f"WellConfig.m must be positive, not {self.m}")
        if not abs(self.a) < 1:
            raise ValueError(f"a out of domain |a| < 1, got {self.a}")
        if isinstance(self.n_max, bool) or not isinstance(self.n_max, int):
            raise TypeError(f"WellConfig.n_max must be an int, not {type(self.n_max)}")
        if self.n_max < 1:
            raise ValueError(f"WellConfig.n_max must be at least 1, not {self.n_max}")

    def k0(self, n: int) -> float:
        """Wavenumber n pi / L of level n."""
        return n * math.pi / self.L

    def energy(self, n: int) -> float:
        """Energy k0**2 / 2m of level n, hbar = 1."""
        return self.k0(n) ** 2 / (2.0 * self.m)


@dataclass(frozen=True)
class WellSolution:
    """One level of the well.

    `confirmed` records whether the boundary-condition residual at `k0`
    is below tolerance. `psi_n` is only attached when a grid was given.
    """

    n: int
    k0: float
    E: float
    boundary_residual: float
    confirmed: bool
    psi_n: Optional[GridFunction] = field(default=None)

    def __post_init__(self) -> None:
        """Post-init method."""
        if self.n < 1:
            raise ValueError(
                f"n = {self.n} is not allowed, the wavefunction vanishes identically"
            )
        if not self.k0 > 0 or not self.E > 0:
            raise ValueError(
                f"Level {self.n} needs k0 > 0 and E > 0, got k0 = {self.k0}, E = {self.E}"
            )
        if not self.confirmed:
            logger.warning(
                f"Level {self.n} not confirmed: boundary residual {self.boundary_residual:.3e}"
            )
