import io
import json

import pytest
from hypothesis import given
from strategies import graded, intervals

from hhcalc import jsonio as J
from hhcalc.errors import SchemaError
from hhcalc.equivariant import EquivariantSummand, SerreDescriptor, Z2Split
from hhcalc.gradedvec import GradedDims, GradedInterval
from hhcalc.hkr import ENRIQUES_POLYVECTORS
from hhcalc.hodge import double_cover, hodge_hypersurface
from hhcalc.orbifold import FixedLocusDatum
from hhcalc.scenarios import available, load_scenario
from hhcalc.sod import COHOMOLOGY, Component, SodSpec


def _roundtrip(to, frm, obj):
    return frm(json.loads(J.dumps(to(obj))))


@given(graded())
def test_graded_roundtrip(v):
    assert _roundtrip(J.graded_to_json, J.graded_from_json, v) == v


@given(intervals())
def test_interval_roundtrip(iv):
    assert _roundtrip(J.interval_to_json, J.interval_from_json, iv) == iv


def test_structured_roundtrips():
    spec = double_cover(5, 4)
    assert _roundtrip(J.spec_to_json, J.spec_from_json, spec) == spec
    dia = hodge_hypersurface(spec)
    assert _roundtrip(J.diamond_to_json, J.diamond_from_json, dia) == dia
    assert _roundtrip(J.polyvectors_to_json, J.polyvectors_from_json, ENRIQUES_POLYVECTORS) == ENRIQUES_POLYVECTORS
    sod = SodSpec(GradedDims({0: 5}), (Component("A", GradedDims({0: 1})),), 2)
    assert _roundtrip(J.sod_to_json, J.sod_from_json, sod) == sod
    serre = SerreDescriptor(3, 2)
    assert _roundtrip(J.serre_to_json, J.serre_from_json, serre) == serre
    summand = EquivariantSummand("sigma", GradedDims({0: 2, 3: 1}))
    assert _roundtrip(J.summand_to_json, J.summand_from_json, summand) == summand
    split = Z2Split(GradedInterval.upto(GradedDims({3: 2})), GradedInterval.exact(GradedDims({0: 1})))
    assert _roundtrip(J.split_to_json, J.split_from_json, split) == split
    data = [FixedLocusDatum("1", 0, {(0, 0): 1, (1, 1): 3}), FixedLocusDatum("g", 2, {(0, 0): 1})]
    assert _roundtrip(J.data_to_json, J.data_from_json, data) == data


def test_bare_map_accepted_and_kind_read():
    assert J.graded_from_json({"0": 1, "-2": 3}) == GradedDims({0: 1, -2: 3})
    assert J.kind_from_json({"dims": {}, "kind": COHOMOLOGY}) == COHOMOLOGY


@pytest.mark.parametrize("name", available())
def test_fixture_expected_values_parse(name):
    for step in load_scenario(name)["steps"]:
        expected = step["expected"]
        if isinstance(expected, dict) and "dims" in expected:
            assert J.graded_to_json(J.graded_from_json(expected)) == {"dims": expected["dims"]}
        if isinstance(expected, dict) and isinstance(expected.get("lo"), dict):
            assert J.interval_to_json(J.interval_from_json(expected)) == expected


@pytest.mark.parametrize(
    "raw, where",
    [
        ({"dims": {"x": 1}}, "$.dims['x']"),
        ({"dims": {"01": 1}}, "$.dims['01']"),
        ({"dims": {"0": -1}}, "$.dims['0']"),
        ({"dims": {"0": 1.5}}, "$.dims['0']"),
        ({"dims": {"0": True}}, "$.dims['0']"),
        ([1, 2], "$"),
    ],
)
def test_malformed_graded(raw, where):
    with pytest.raises(SchemaError) as err:
        J.graded_from_json(raw)
    assert err.value.path == where


def test_library_validation_becomes_schema_error():
    with pytest.raises(SchemaError):
        J.datum_from_json({"label": "g", "codim": 0, "table": {}, "invariant": {"lo": {"0": 1}, "hi": {"0": 1}}})
    with pytest.raises(SchemaError):
        J.sod_from_json({"total": {"dims": {}}, "components": [{"label": "A", "dims": {}}, {"label": "A", "dims": {}}]})


def test_load_from_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"0": 4}'))
    assert J.load("-") == {"0": 4}


def test_load_errors(tmp_path):
    with pytest.raises(SchemaError):
        J.load(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(SchemaError):
        J.load(bad)
