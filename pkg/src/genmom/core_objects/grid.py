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

"""genmom Grid and GridFunction objects."""

import logging
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from ..config import MIN_GRID_POINTS


logger = logging.getLogger(__name__)

Scalar = Union[int, float, complex]


@dataclass(frozen=True)
class Grid:
    """Uniform 1-D sample domain.

    Parameters
    ----------
    x_min : float
        Left end of the window.
    x_max : float
        Right end of the window, strictly greater than `x_min`.
    n : int
        Number of samples. Must be odd and at least 9 so that composite
        Simpson quadrature sees an even number of intervals.

    Raises
    ------
    TypeError
        If `n` is not an integer.
    ValueError
        If `n` is even or smaller than 9, or if `x_max <= x_min`.

    Attributes
    ----------
    spacing : float
        The sample spacing `(x_max - x_min) / (n - 1)`.
    """

    x_min: float
    x_max: float
    n: int
    spacing: float = field(init=False)

    def __post_init__(self) -> None:
        """Post-init method."""
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise TypeError(f"Grid.n must be an integer, not {type(self.n)}")
        if self.n < MIN_GRID_POINTS or self.n % 2 == 0:
            raise ValueError(
                f"Grid.n must be odd and at least {MIN_GRID_POINTS}, not {self.n}"
            )
        if not np.isfinite(self.x_min) or not np.isfinite(self.x_max):
            raise ValueError(
                f"Grid bounds must be finite, not [{self.x_min}, {self.x_max}]"
            )
        if not self.x_max > self.x_min:
            raise ValueError(
                f"Grid.x_max must be greater than Grid.x_min, not {self.x_max} <= {self.x_min}"
            )
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "spacing", (self.x_max - self.x_min) / (self.n - 1))

    @property
    def points(self) -> np.ndarray:
        """Sample positions, `x_min + i * spacing`."""
        return self.x_min + np.arange(self.n) * self.spacing

    @property
    def is_symmetric(self) -> bool:
        """Whether the window is symmetric about zero."""
        return bool(np.isclose(self.x_min, -self.x_max, rtol=0.0, atol=1e-12))

    def index_of(self, value: float) -> Optional[int]:
        """Return the index of the sample at `value`, or None if there is none."""
        position = (value - self.x_min) / self.spacing
        index = int(round(position))
        if 0 <= index < self.n and abs(position - index) < 1e-9:
            return index
        return None


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Complex samples on a Grid.

    The values are copied to a read-only complex array on construction and
    must all be finite.
    """

    grid: Grid
    values: np.ndarray

    # numpy scalars and arrays on the left defer to the reflected operators
    __array_ufunc__ = None

    def __post_init__(self) -> None:
        """Post-init method."""
        if not isinstance(self.grid, Grid):
            raise TypeError(f"GridFunction.grid must be a Grid, not {type(self.grid)}")
        values = np.array(self.values, dtype=complex)
        if values.shape != (self.grid.n,):
            raise ValueError(
                f"GridFunction.values must have shape ({self.grid.n},), not {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("GridFunction.values must be finite everywhere")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def x(self) -> np.ndarray:
        """The sample positions of the underlying grid."""
        return self.grid.points

    def with_values(self, values: np.ndarray) -> "GridFunction":
        """Return a new GridFunction on the same grid."""
        return GridFunction(grid=self.grid, values=values)

    def conj(self) -> "GridFunction":
        """Complex conjugate."""
        return self.with_values(np.conj(self.values))

    def abs2(self) -> "GridFunction":
        """Pointwise squared modulus."""
        return self.with_values(np.abs(self.values) ** 2)

    def _operand(self, other: Union["GridFunction", np.ndarray, Scalar]) -> np.ndarray:
        if isinstance(other, GridFunction):
            if other.grid != self.grid:
                raise ValueError(
                    f"Grid mismatch: {other.grid} is not {self.grid}"
                )
            return other.values
        return np.asarray(other)

    def __add__(self, other: Union["GridFunction", np.ndarray, Scalar]) -> "GridFunction":
        """Pointwise sum."""
        return self.with_values(self.values + self._operand(other))

    __radd__ = __add__

    def __sub__(self, other: Union["GridFunction", np.ndarray, Scalar]) -> "GridFunction":
        """Pointwise difference."""
        return self.with_values(self.values - self._operand(other))

    def __rsub__(self, other: Union["GridFunction", np.ndarray, Scalar]) -> "GridFunction":
        """Reflected pointwise difference."""
        return self.with_values(self._operand(other) - self.values)

    def __mul__(self, other: Union["GridFunction", np.ndarray, Scalar]) -> "GridFunction":
        """Pointwise product."""
        return self.with_values(self.values * self._operand(other))

    __rmul__ = __mul__

    def __neg__(self) -> "GridFunction":
        """Pointwise negation."""
        return self.with_values(-self.values)

    def __repr__(self) -> str:
        """Return a short representation without the sample values."""
        return f"{self.__class__.__name__}(grid={self.grid!r})"
