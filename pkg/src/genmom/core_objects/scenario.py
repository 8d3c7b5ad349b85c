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

"""genmom transform, Hermiticity and commutator objects."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy.integrate import simpson

from ..config import NORMALIZATION_TOL
from .grid import GridFunction
from .params import DeformParamsP, DeformParamsX


logger = logging.getLogger(__name__)


def _norm_squared(gf: GridFunction) -> float:
    return float(simpson(np.abs(gf.values) ** 2, dx=gf.grid.spacing))


@dataclass(frozen=True)
class FtPairResult:
    """A function and its transform on an explicit conjugate grid."""

    source: GridFunction
    target: GridFunction
    edge_magnitude: float
    edge_flagged: bool


@dataclass(frozen=True)
class HermiticityResult:
    """Adjoint defect |<phi, A psi> - <A phi, psi>| of one operator.

    `flagged` is set when the states do not vanish at the window edges, in
    which case boundary terms contribute and the defect is not meaningful.
    """

    operator: str
    defect: float
    edge_magnitude: float
    flagged: bool


@dataclass(frozen=True)
class CommutatorScenario:
    """One normalized state in both representations plus both deformations.

    `phi` must be the inverse transform of `psi`; use
    `genmom.commutator.make_scenario` to build one.
    """

    dp: DeformParamsP
    dx: DeformParamsX
    psi: GridFunction
    phi: GridFunction

    def __post_init__(self) -> None:
        """Post-init method."""
        if not isinstance(self.dp, DeformParamsP):
            raise TypeError(f"dp must be DeformParamsP, not {type(self.dp)}")
        if not isinstance(self.dx, DeformParamsX):
            raise TypeError(f"dx must be DeformParamsX, not {type(self.dx)}")
        for name in ("psi", "phi"):
            norm2 = _norm_squared(getattr(self, name))
            if abs(norm2 - 1.0) > NORMALIZATION_TOL:
                raise ValueError(
                    f"{name} must be normalized, integral of |{name}|**2 is {norm2}"
                )

    @property
    def is_standard(self) -> bool:
        """Whether all four deformation parameters vanish."""
        return self.dp.is_standard and self.dx.is_standard


@dataclass(frozen=True)
class IndependenceRoots:
    """Roots of the basis-independence residual along one axis.

    `scan` is `x` (k held at `fixed`) or `k` (x held at `fixed`). When every
    deformation parameter is zero the residual vanishes identically and
    `identically_zero` replaces the root list.
    """

    scan: str
    fixed: float
    lower: float
    upper: float
    roots: List[float] = field(default_factory=list)
    identically_zero: bool = field(default=False)
    residuals: Optional[List[float]] = field(default=None)

    def __post_init__(self) -> None:
        """Post-init method."""
        if self.scan not in ("x", "k"):
            raise ValueError(f"scan must be 'x' or 'k', not {self.scan!r}")
        if not self.upper > self.lower:
            raise ValueError(
                f"Empty scan range [{self.lower}, {self.upper}]"
            )
