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

"""genmom operator parameter objects."""

import logging
import math
import numbers
from dataclasses import dataclass

from ..utils import _check_unit_disk


logger = logging.getLogger(__name__)


def _check_real(name: str, value: float) -> None:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise TypeError(f"{name} must be a real number, not {type(value)}")
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, not {value}")


@dataclass(frozen=True)
class KernelParamsP:
    """Constants of the position-space kernel solution f(x) = C e^{ikx} - i."""

    C: complex
    k: float

    def __post_init__(self) -> None:
        """Post-init method."""
        object.__setattr__(self, "C", complex(self.C))
        _check_real("KernelParamsP.k", self.k)
        if self.C == 0:
            raise ValueError("KernelParamsP.C must be nonzero")


@dataclass(frozen=True)
class KernelParamsX:
    """Constants of the momentum-space kernel solution h(k) = D e^{-ikx} + i."""

    D: complex
    x: float

    def __post_init__(self) -> None:
        """Post-init method."""
        object.__setattr__(self, "D", complex(self.D))
        _check_real("KernelParamsX.x", self.x)
        if self.D == 0:
            raise ValueError("KernelParamsX.D must be nonzero")


@dataclass(frozen=True)
class DeformParamsP:
    """Deformation of the Hermitian momentum operator.

    `a` and `b` are the real and imaginary parts of C and must lie in the
    open unit disk. `(0, 0)` is the standard momentum operator. `k` is the
    Fourier parameter inside the operator and the eigenvalue it is tested
    against.
    """

    a: float
    b: float
    k: float

    def __post_init__(self) -> None:
        """Post-init method."""
        for name in ("a", "b", "k"):
            _check_real(f"DeformParamsP.{name}", getattr(self, name))
        if not _check_unit_disk(self.a, self.b):
            raise ValueError(
                f"(a, b) = ({self.a}, {self.b}) out of domain a**2 + b**2 < 1"
            )

    @property
    def C(self) -> complex:
        """C = a + ib."""
        return complex(self.a, self.b)

    @property
    def is_standard(self) -> bool:
        """Whether the deformation vanishes."""
        return self.a == 0 and self.b == 0

    def kernel(self) -> KernelParamsP:
        """The non-Hermitian operator constants with the same C and k."""
        return KernelParamsP(C=self.C, k=self.k)


@dataclass(frozen=True)
class DeformParamsX:
    """Deformation of the Hermitian position operator, D = c + id."""

    c: float
    d: float
    x: float

    def __post_init__(self) -> None:
        """Post-init method."""
        for name in ("c", "d", "x"):
            _check_real(f"DeformParamsX.{name}", getattr(self, name))
        if not _check_unit_disk(self.c, self.d):
            raise ValueError(
                f"(c, d) = ({self.c}, {self.d}) out of domain c**2 + d**2 < 1"
            )

    @property
    def D(self) -> complex:
        """D = c + id."""
        return complex(self.c, self.d)

    @property
    def is_standard(self) -> bool:
        """Whether the deformation vanishes."""
        return self.c == 0 and self.d == 0

    def kernel(self) -> KernelParamsX:
        """The non-Hermitian operator constants with the same D and x."""
        return KernelParamsX(D=self.D, x=self.x)
