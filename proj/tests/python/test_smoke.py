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

import json
import os
import pathlib

import pytest

import fermatrc

DATA = pathlib.Path(os.environ.get("FERMATRC_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def test_verify_line():
    out = fermatrc.verify(load("x44_line.json"))
    assert out["schema"] == "fermat-rc/1"
    assert out["valid"] is True
    assert out["e"] == 1


def test_line_splittings():
    line = load("x44_line.json")
    assert fermatrc.splitting(line, "tx")["summands"] == [2, 1, -2]
    assert fermatrc.splitting(line, "f")["summands"] == [1, 1, 1, -2]
    assert fermatrc.splitting(line, "omega")["summands"] == [-1, -1, -1, -2]


def test_classify_and_tangent():
    line = load("x44_line.json")
    report = fermatrc.classify(line)
    assert report["free"] is False
    assert report["very_free"] is False
    assert report["chi"] == 4
    tangent = fermatrc.tangent(line)
    assert tangent == {"schema": "fermat-rc/1", "h0_TX": 5, "cone_dim": 6, "expected": 4, "jump": True}


def test_rnc_cotangent():
    assert fermatrc.splitting(load("rnc4_gf9.json"), "omega")["summands"] == [-5] * 4


def test_windows_and_balanced():
    assert fermatrc.windows(4, 15)["allowed"] == [5, 9, 10, 13, 14, 15]
    model = fermatrc.balanced_model(9, 5, 4)
    assert (model["a"], model["l"], model["l_prime"], model["b1"], model["b2"]) == (10, 1, 4, 5, 1)


def test_errors_carry_kind():
    with pytest.raises(fermatrc.FermatError) as info:
        fermatrc.verify(load("x44_not_on_x.json"))
    assert fermatrc.error_kind(info.value) == "NotOnHypersurface"


def test_lines_and_survey():
    lines = fermatrc.standard_lines(3, 1, 4)
    assert lines and all(fermatrc.verify(c)["valid"] for c in lines)
    rows = fermatrc.survey(3, 1, 4, 1, 2, 20, seed=5)
    assert len(rows) == 20
    assert rows == fermatrc.survey(3, 1, 4, 1, 2, 20, seed=5)
    assert not any(r["report"]["very_free"] for r in rows)
