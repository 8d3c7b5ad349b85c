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

"""genmom utils functions."""

import math
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from .config import (
    AVAILABLE_FORMATS,
    AVAILABLE_SUITES,
    CURVE_QUANTITIES,
    CURVE_SIGNIFICANT_DIGITS,
    MIN_GRID_POINTS,
    SUITE_ALL,
)


def _check_unit_disk(first: float, second: float) -> bool:
    """
    Check that a pair of deformation parameters lies in the open unit disk.

    Parameters
    ----------
    first : float
        The first parameter (a or c).
    second : float
        The second parameter (b or d).

    Returns
    -------
    bool
        True if `first**2 + second**2 < 1`, False otherwise.
    """
    if not (math.isfinite(first) and math.isfinite(second)):
        return False
    return first * first + second * second < 1.0


def _check_positive(value: float) -> bool:
    """
    Check that a value is finite and strictly positive.

    Parameters
    ----------
    value : float
        The value to check.

    Returns
    -------
    bool
        True if the value is finite and positive, False otherwise.
    """
    return math.isfinite(value) and value > 0


def _check_grid_size(n: int) -> bool:
    """
    Check a grid sample count.

    Parameters
    ----------
    n : int
        The number of samples.

    Returns
    -------
    bool
        True if `n` is an odd integer of at least 9, False otherwise.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        return False
    return n >= MIN_GRID_POINTS and n % 2 == 1


def _check_suite(suite: str) -> bool:
    """
    Check a verification suite name.

    Parameters
    ----------
    suite : str
        The suite name.

    Returns
    -------
    bool
        True if the suite is available or is `all`, False otherwise.
    """
    return suite == SUITE_ALL or suite in AVAILABLE_SUITES


def _check_format(fmt: str) -> bool:
    """Check a report format."""
    return fmt in AVAILABLE_FORMATS


def _check_quantity(quantity: str) -> bool:
    """Check a curve quantity."""
    return quantity in CURVE_QUANTITIES


def _parse_assignment(assignment: str) -> Tuple[str, str]:
    """
    Split a `key=value` assignment.

    Parameters
    ----------
    assignment : str
        The assignment, as given to `--set`.

    Raises
    ------
    ValueError
        If the assignment has no `=` or an empty key.

    Returns
    -------
    Tuple[str, str]
        The stripped key and the raw value.
    """
    key, sep, value = assignment.partition("=")
    key = key.strip()
    if not sep or not key:
        raise ValueError(f"Expected key=value, got {assignment!r}")
    return key, value.strip()


def _parse_assignments(
    assignments: Union[List[str], Tuple[str, ...]], integer_keys: List[str]
) -> Dict[str, Union[int, float]]:
    """
    Parse repeated `key=value` assignments into numbers.

    Parameters
    ----------
    assignments : Union[List[str], Tuple[str, ...]]
        The assignments.
    integer_keys : List[str]
        Keys whose values must be integers.

    Raises
    ------
    ValueError
        If a value is not a number, or not an integer for an integer key.

    Returns
    -------
    Dict[str, Union[int, float]]
        The parsed parameters, later assignments winning.
    """
    params: Dict[str, Union[int, float]] = {}
    for assignment in assignments:
        key, raw = _parse_assignment(assignment)
        try:
            if key in integer_keys:
                params[key] = int(raw)
            else:
                params[key] = float(raw)
        except ValueError:
            kind = "an integer" if key in integer_keys else "a number"
            raise ValueError(f"{key} must be {kind}, not {raw!r}") from None
    return params


def _format_complex(value: complex) -> Dict[str, float]:
    """
    Format a complex number for a JSON report.

    Parameters
    ----------
    value : complex
        The value.

    Returns
    -------
    Dict[str, float]
        The real and imaginary parts under `re` and `im`.
    """
    value = complex(value)
    return {"re": float(value.real), "im": float(value.imag)}


def _format_number(value: float) -> str:
    """Format a real number with enough digits to round-trip."""
    return f"{float(value):.{CURVE_SIGNIFICANT_DIGITS}g}"


def _jsonable(value: Any) -> Any:  # noqa: C901
    """
    Convert report values to plain JSON types.

    Complex numbers become `{"re", "im"}` objects, numpy scalars and arrays
    become Python numbers and lists. Non-finite floats become strings so the
    output stays valid JSON.

    Parameters
    ----------
    value : Any
        The value to convert.

    Returns
    -------
    Any
        The converted value.
    """
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return _jsonable(_format_complex(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return str(value)
        return value
    return value
