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

"""genmom eigenfunction objects."""

import logging
from dataclasses import dataclass, field

from ..config import CASE_A, CASE_B, DEFAULT_NORMALIZATION, EIGEN_CASES
from ..utils import _check_unit_disk
from .grid import GridFunction
from .params import DeformParamsP, _check_real


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenfunctionSpec:
    """Which momentum eigenfunction to build.

    `case_a` is the b = 0 closed form, `case_b` the a = 0 closed form and
    `general` the numerical solution for any (a, b) in the unit disk.
    """

    case: str
    a: float
    b: float
    k: float
    normalization: complex = field(default=DEFAULT_NORMALIZATION)

    def __post_init__(self) -> None:
        """Post-init method."""
        if self.case not in EIGEN_CASES:
            raise ValueError(
                f"Case {self.case} is not a valid case. Valid cases are {EIGEN_CASES}."
            )
        for name in ("a", "b", "k"):
            _check_real(f"EigenfunctionSpec.{name}", getattr(self, name))
        object.__setattr__(self, "normalization", complex(self.normalization))
        if self.case == CASE_A and (self.b != 0 or abs(self.a) >= 1):
            raise ValueError(
                f"case_a needs b = 0 and |a| < 1, not (a, b) = ({self.a}, {self.b})"
            )
        if self.case == CASE_B and (self.a != 0 or abs(self.b) >= 1):
            raise ValueError(
                f"case_b needs a = 0 and |b| < 1, not (a, b) = ({self.a}, {self.b})"
            )
        if not _check_unit_disk(self.a, self.b):
            raise ValueError(
                f"(a, b) = ({self.a}, {self.b}) out of domain a**2 + b**2 < 1"
            )

    @property
    def deform(self) -> DeformParamsP:
        """The operator this function is an eigenfunction of."""
        return DeformParamsP(a=self.a, b=self.b, k=self.k)


@dataclass(frozen=True)
class NumericEigenfunction:
    """Numerical eigenfunction with its eigen-residual under p_H."""

    psi: GridFunction
    residual: float
    rtol: float
    converged: bool


@dataclass(frozen=True)
class OrthonormalityReport:
    """Overlap of two case-a eigenfunctions on a finite window."""

    a: float
    k: float
    kp: float
    window: float
    overlap: complex
    diagonal: complex
    phase_identity_defect: float

    @property
    def off_diagonal_ratio(self) -> float:
        """|overlap| relative to the diagonal value on the same window."""
        return abs(self.overlap) / abs(self.diagonal)
