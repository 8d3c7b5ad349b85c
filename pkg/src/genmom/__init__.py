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

"""Generalized momentum and position operators from the Fourier transform."""

from .api import emit_curve, run
from .config import GENMOM_VERSION
from .runner import Runner


__version__ = GENMOM_VERSION

__all__ = [
    "Runner",
    "__version__",
    "emit_curve",
    "run",
]
