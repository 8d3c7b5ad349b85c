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

"""genmom Core Objects."""

from .eigen import EigenfunctionSpec, NumericEigenfunction, OrthonormalityReport
from .grid import Grid, GridFunction
from .params import DeformParamsP, DeformParamsX, KernelParamsP, KernelParamsX
from .report import CheckRecord, CurveConfig, Report, RunConfig
from .scenario import (
    CommutatorScenario,
    FtPairResult,
    HermiticityResult,
    IndependenceRoots,
)
from .well import WellConfig, WellSolution


__all__ = [
    "CheckRecord",
    "CommutatorScenario",
    "CurveConfig",
    "DeformParamsP",
    "DeformParamsX",
    "EigenfunctionSpec",
    "FtPairResult",
    "Grid",
    "GridFunction",
    "HermiticityResult",
    "IndependenceRoots",
    "KernelParamsP",
    "KernelParamsX",
    "NumericEigenfunction",
    "OrthonormalityReport",
    "Report",
    "RunConfig",
    "WellConfig",
    "WellSolution",
]
