import json
from fractions import Fraction

import pytest

from src.core.io.formats import (
    instance_hash,
    parse_instance,
    parse_packing,
    parse_sequence,
    serialize_instance,
    serialize_packing,
    serialize_sequence,
)
from src.core.packing.errors import FormatError
from src.core.packing.geometry import Dims, Instance, Placement
from src.core.packing.sequencing import extract_sequence
from tests.conftest import make_instance, make_packing


def test_parse_instance():
    text = '{"container":{"w":"4","h":"3"},"rects":[{"id":1,"w":"2","h":"3"}]}'
    instance = parse_instance(text)
    assert instance.container == Dims(4, 3)
    assert instance.rects == ((1, Dims(2, 3)),)


def test_decimal_text_and_bare_numbers_are_exact():
    text = '{"container":{"w":1,"h":"0.3"},"rects":[{"id":5,"w":0.1,"h":"1/3"}]}'
    instance = parse_instance(text)
    assert instance.container.h == Fraction(3, 10)
    assert instance.dims_of(5) == Dims(Fraction(1, 10), Fraction(1, 3))


def test_zero_dimension_rejected():
    text = '{"container":{"w":"4","h":"3"},"rects":[{"id":1,"w":"0","h":"3"}]}'
    with pytest.raises(FormatError) as excinfo:
        parse_instance(text)
    assert "non-positive" in str(excinfo.value)
    assert excinfo.value.field == "rects.0.w"


def test_duplicate_ids_rejected():
    text = ('{"container":{"w":"4","h":"3"},'
            '"rects":[{"id":1,"w":"1","h":"1"},{"id":1,"w":"2","h":"2"}]}')
    with pytest.raises(FormatError) as excinfo:
        parse_instance(text)
    assert "duplicate" in str(excinfo.value)


def test_unknown_field_rejected():
    text = '{"container":{"w":"4","h":"3"},"rects":[],"colour":"red"}'
    with pytest.raises(FormatError) as excinfo:
        parse_instance(text)
    assert excinfo.value.field == "colour"


def test_malformed_json_reports_line():
    with pytest.raises(FormatError) as excinfo:
        parse_instance('{\n"container": {"w": "4", "h": "3"},\n"rects": [\n')
    assert excinfo.value.line is not None
    assert str(excinfo.value).startswith(f"line {excinfo.value.line}")


def test_demo_instance_canonical_round_trip(demo_instance):
    text = serialize_instance(demo_instance)
    assert parse_instance(text) == demo_instance
    assert serialize_instance(parse_instance(text)) == text
    data = json.loads(text)
    assert data["container"] == {"w": "4", "h": "3"}
    assert [r["id"] for r in data["rects"]] == [1, 2, 3]


def test_serialization_does_not_depend_on_rect_order():
    first = Instance(Dims(4, 3), ((2, Dims(2, 2)), (1, Dims(2, 3))))
    second = Instance(Dims(4, 3), ((1, Dims(2, 3)), (2, Dims(2, 2))))
    assert serialize_instance(first) == serialize_instance(second)
    assert instance_hash(first) == instance_hash(second)


def test_rationals_round_trip_exactly():
    instance = make_instance((Fraction(4, 3), 1), (Fraction(2, 7), Fraction(1, 10)))
    packing = make_packing(instance, {1: (Fraction(1, 3), Fraction(1, 2), "v")})
    text = serialize_packing(packing)
    assert '"1/3"' in text
    assert parse_packing(text, parse_instance(serialize_instance(instance))) == packing


def test_packing_round_trip(demo_packing):
    text = serialize_packing(demo_packing)
    assert parse_packing(text, demo_packing.instance) == demo_packing
    assert json.loads(text)["instance-hash"] == instance_hash(demo_packing.instance)


def test_packing_for_other_instance_rejected(demo_packing):
    other = make_instance((5, 3), (2, 3), (2, 2), (2, 1))
    with pytest.raises(FormatError) as excinfo:
        parse_packing(serialize_packing(demo_packing), other)
    assert excinfo.value.field == "instance-hash"


def test_packing_unknown_and_repeated_ids_rejected(demo_instance):
    digest = instance_hash(demo_instance)
    unknown = {"instance-hash": digest, "placements": [{"id": 9, "x": "0", "y": "0", "v": "h"}]}
    with pytest.raises(FormatError):
        parse_packing(json.dumps(unknown), demo_instance)
    repeated = {"instance-hash": digest, "placements": [
        {"id": 1, "x": "0", "y": "0", "v": "h"}, {"id": 1, "x": "2", "y": "0", "v": "h"}]}
    with pytest.raises(FormatError):
        parse_packing(json.dumps(repeated), demo_instance)


def test_bad_orientation_rejected(demo_instance):
    bad = {"instance-hash": instance_hash(demo_instance),
           "placements": [{"id": 1, "x": "0", "y": "0", "v": "x"}]}
    with pytest.raises(FormatError):
        parse_packing(json.dumps(bad), demo_instance)


def test_sequence_round_trip_keeps_action_order(demo_packing):
    sequence = extract_sequence(demo_packing)
    text = serialize_sequence(sequence)
    assert [a["id"] for a in json.loads(text)["actions"]] == [1, 2, 3]
    assert parse_sequence(text, demo_packing.instance) == sequence
