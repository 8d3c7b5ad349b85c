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

"""genmom run configuration and report objects."""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from ..config import (
    AVAILABLE_FORMATS,
    AVAILABLE_SUITES,
    CHECK_STATUSES,
    CURVE_EXTRA_PARAMS,
    CURVE_QUANTITIES,
    DEFAULT_PARAMS,
    INTEGER_PARAMS,
    REPORT_SCHEMA,
    SUITE_ALL,
)
from ..utils import (
    _check_format,
    _check_grid_size,
    _check_positive,
    _check_quantity,
    _check_suite,
    _check_unit_disk,
    _jsonable,
)


logger = logging.getLogger(__name__)

Number = Union[int, float]


def _check_pair(names: str, first: float, second: float) -> None:
    """Raise if a deformation pair leaves the unit disk, naming the culprit."""
    one, two = names
    if not abs(first) < 1:
        raise ValueError(f"{one} out of domain |{one}| < 1, got {first}")
    if not abs(second) < 1:
        raise ValueError(f"{two} out of domain |{two}| < 1, got {second}")
    if not _check_unit_disk(first, second):
        raise ValueError(
            f"({one}, {two}) = ({first}, {second}) out of domain {one}**2 + {two}**2 < 1"
        )


def _resolve_params(
    params: Dict[str, Number], allowed: List[str]
) -> Dict[str, Number]:
    """Merge user parameters over the defaults and validate every value."""
    unknown = sorted(set(params) - set(allowed))
    if unknown:
        raise ValueError(
            f"Unknown parameter {unknown[0]}. Valid parameters are {sorted(allowed)}."
        )
    resolved: Dict[str, Number] = {**DEFAULT_PARAMS, **params}
    for key, value in resolved.items():
        if key in INTEGER_PARAMS:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{key} must be an integer, not {value!r}")
        elif isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"{key} must be a number, not {value!r}")

    _check_pair("ab", float(resolved["a"]), float(resolved["b"]))
    _check_pair("cd", float(resolved["c"]), float(resolved["d"]))
    for key in ("L", "m", "window", "k_window"):
        if not _check_positive(float(resolved[key])):
            raise ValueError(f"{key} must be positive, got {resolved[key]}")
    if not _check_grid_size(int(resolved["n"])):
        raise ValueError(f"n must be an odd integer of at least 9, got {resolved['n']}")
    if int(resolved["n_max"]) < 1:
        raise ValueError(f"n_max must be at least 1, got {resolved['n_max']}")
    if int(resolved["seed"]) < 0:
        raise ValueError(f"seed must be non-negative, got {resolved['seed']}")
    return resolved


@dataclass
class RunConfig:
    """Configuration of one `genmom run` invocation.

    Parameters are given as overrides of `DEFAULT_PARAMS`; unknown keys and
    out-of-domain values are rejected with a ValueError.
    """

    suite: str
    params: Dict[str, Number] = field(default_factory=dict)
    output_path: Optional[str] = field(default=None)
    format: str = field(default="json")
    resolved: Dict[str, Number] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Post-init method."""
        if not _check_suite(self.suite):
            raise ValueError(
                f"Suite {self.suite} is not a valid suite. Valid suites are {AVAILABLE_SUITES + [SUITE_ALL]}."
            )
        if not _check_format(self.format):
            raise ValueError(
                f"Format {self.format} is not a valid format. Valid formats are {AVAILABLE_FORMATS}."
            )
        self.resolved = _resolve_params(self.params, list(DEFAULT_PARAMS))

    @property
    def suites(self) -> List[str]:
        """The suites to run, in report order."""
        if self.suite == SUITE_ALL:
            return list(AVAILABLE_SUITES)
        return [self.suite]


@dataclass
class CurveConfig:
    """Configuration of one `genmom curve` invocation."""

    quantity: str
    params: Dict[str, Number] = field(default_factory=dict)
    output_path: Optional[str] = field(default=None)
    resolved: Dict[str, Number] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Post-init method."""
        if not _check_quantity(self.quantity):
            raise ValueError(
                f"Quantity {self.quantity} is not a valid quantity. Valid quantities are {CURVE_QUANTITIES}."
            )
        base = {k: v for k, v in self.params.items() if k not in CURVE_EXTRA_PARAMS}
        extra = {k: v for k, v in self.params.items() if k in CURVE_EXTRA_PARAMS}
        resolved = _resolve_params(base, list(DEFAULT_PARAMS))
        for key in ("level", "points"):
            if key in extra:
                value = extra[key]
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ValueError(f"{key} must be an integer, not {value!r}")
        if int(extra.get("level", 1)) < 1:
            raise ValueError(f"level must be at least 1, got {extra['level']}")
        if int(extra.get("points", 2)) < 2:
            raise ValueError(f"points must be at least 2, got {extra['points']}")
        if "x_min" in extra and "x_max" in extra and not extra["x_max"] > extra["x_min"]:
            raise ValueError(
                f"x_max must be greater than x_min, got [{extra['x_min']}, {extra['x_max']}]"
            )
        self.resolved = {**resolved, **extra}


@dataclass(frozen=True)
class CheckRecord:
    """One verified claim: what was measured, against which tolerance."""

    check_id: str
    inputs: Dict[str, Any]
    measured: Dict[str, Any]
    tolerance: Optional[float]
    status: str

    def __post_init__(self) -> None:
        """Post-init method."""
        if self.status not in CHECK_STATUSES:
            raise ValueError(
                f"Status {self.status} is not a valid status. Valid statuses are {CHECK_STATUSES}."
            )

    def to_dict(self) -> Dict[str, Any]:
        """Plain-JSON representation."""
        return {
            "check_id": self.check_id,
            "inputs": _jsonable(self.inputs),
            "measured": _jsonable(self.measured),
            "tolerance": _jsonable(self.tolerance),
            "status": self.status,
        }


@dataclass
class Report:
    """Records of every check run, in a deterministic order."""

    suite: str
    records: List[CheckRecord]
    environment: Dict[str, Any]
    schema: int = field(default=REPORT_SCHEMA)

    @property
    def failed(self) -> List[CheckRecord]:
        """Records with status `fail`."""
        return [record for record in self.records if record.status == "fail"]

    @property
    def flagged(self) -> List[CheckRecord]:
        """Records with status `flag`."""
        return [record for record in self.records if record.status == "flag"]

    @property
    def exit_code(self) -> int:
        """0 when nothing failed, 1 otherwise."""
        return 1 if self.failed else 0

    def to_dict(self) -> Dict[str, Any]:
        """Plain-JSON representation."""
        return {
            "schema": self.schema,
            "suite": self.suite,
            "environment": _jsonable(self.environment),
            "summary": {
                "checks": len(self.records),
                "fail": len(self.failed),
                "flag": len(self.flagged),
            },
            "records": [record.to_dict() for record in self.records],
        }

    def to_json(self) -> str:
        """Deterministic JSON text."""
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        """One row per record; measured values are JSON-encoded."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["check_id", "status", "tolerance", "measured"])
        for record in self.records:
            row = record.to_dict()
            writer.writerow(
                [
                    row["check_id"],
                    row["status"],
                    "" if row["tolerance"] is None else repr(row["tolerance"]),
                    json.dumps(row["measured"], sort_keys=True),
                ]
            )
        return buffer.getvalue()

    def render(self, fmt: str) -> str:
        """Render in one of the available formats."""
        if fmt == "csv":
            return self.to_csv()
        return self.to_json()
