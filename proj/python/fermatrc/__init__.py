# Copyright 2026 The fermat-rc Authors
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

"""Splitting types of rational curves on Fermat hypersurfaces of degree p^r + 1.

Curves are the JSON objects used by the ``fermat-rc`` command line, given
either as dicts or as JSON text. Results come back as dicts.
"""

import json

from . import _core
from ._core import FermatError

__all__ = [
    "FermatError",
    "balanced_model",
    "classify",
    "error_kind",
    "probe_vanishing",
    "splitting",
    "standard_lines",
    "survey",
    "tangent",
    "verify",
    "windows",
]


def _text(curve):
    return curve if isinstance(curve, str) else json.dumps(curve)


def verify(curve):
    return json.loads(_core.verify(_text(curve)))


def splitting(curve, bundle="tx"):
    """bundle is one of "tx", "f", "omega", "tp"."""
    return json.loads(_core.splitting(_text(curve), bundle))


def classify(curve):
    return json.loads(_core.classify(_text(curve)))


def tangent(curve):
    return json.loads(_core.tangent(_text(curve)))


def windows(pr, max_e):
    return json.loads(_core.windows(pr, max_e))


def balanced_model(e, N, pr):
    return json.loads(_core.balanced_model(e, N, pr))


def probe_vanishing(p, r, N, e, trials=100, seed=0):
    return json.loads(_core.probe_vanishing(p, r, N, e, trials, seed))


def standard_lines(p, r, N, field_degree=0):
    return [json.loads(c) for c in _core.standard_lines(p, r, N, field_degree)]


def survey(p, r, N, e_min, e_max, budget, seed=0, field_degree=0):
    rows = _core.survey(p, r, N, e_min, e_max, budget, seed, field_degree)
    return [json.loads(row) for row in rows]


def error_kind(err):
    """The library's error kind, e.g. "NotOnHypersurface"."""
    return err.args[0]
