"""
File Formats Module for the packing toolkit.

JSON documents for instances, packings and placement sequences. Numbers are
written as strings so rationals survive exactly; integers may be bare.
Unknown fields are rejected. Serialization is canonical (sorted keys,
records sorted by id) so identical values produce identical bytes.

    instance  {"container": {"w", "h"}, "rects": [{"id", "w", "h"}]}
    packing   {"instance-hash", "placements": [{"id", "x", "y", "v"}]}
    sequence  {"instance-hash", "actions": [{"id", "v", "x", "y"}]}
"""

import hashlib
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..packing.errors import FormatError, PackingError
from ..packing.geometry import Dims, Instance, Orientation, Packing, Placement
from ..packing.sequencing import PlacementAction, PlacementSequence
from ..packing.utils import format_scalar, to_scalar

# Set up logging
logger = logging.getLogger(__name__)

NumberText = Union[int, str]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


def _exact(value: Any) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError("numbers must be integers or numeric strings")
    return to_scalar(value)


class DimsModel(_Strict):
    w: NumberText
    h: NumberText

    @field_validator("w", "h")
    @classmethod
    def _positive(cls, value):
        if _exact(value) <= 0:
            raise ValueError("non-positive dimension")
        return value


class RectModel(DimsModel):
    id: int


class InstanceModel(_Strict):
    container: DimsModel
    rects: List[RectModel] = Field(default_factory=list)

    @field_validator("rects")
    @classmethod
    def _unique_ids(cls, rects):
        seen = set()
        for rect in rects:
            if rect.id in seen:
                raise ValueError(f"duplicate rectangle id {rect.id}")
            seen.add(rect.id)
        return rects


class PlacementModel(_Strict):
    id: int
    x: NumberText
    y: NumberText
    v: Literal["h", "v"] = "h"

    @field_validator("x", "y")
    @classmethod
    def _number(cls, value):
        _exact(value)
        return value


class PackingModel(_Strict):
    instance_hash: str = Field(alias="instance-hash")
    placements: List[PlacementModel] = Field(default_factory=list)


class SequenceModel(_Strict):
    instance_hash: str = Field(alias="instance-hash")
    actions: List[PlacementModel] = Field(default_factory=list)


def _load_json(text: str) -> Any:
    try:
        # float literals stay text so "0.1" and 0.1 both read as 1/10
        return json.loads(text, parse_float=str)
    except json.JSONDecodeError as e:
        raise FormatError(f"malformed JSON: {e.msg}", line=e.lineno) from e


def _validate(model, data: Any):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        message = first["msg"]
        if message.startswith("Value error, "):
            message = message[len("Value error, "):]
        raise FormatError(message, field=field) from e


def _dump(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def instance_to_dict(instance: Instance) -> Dict[str, Any]:
    return {
        "container": {"w": format_scalar(instance.container.w),
                      "h": format_scalar(instance.container.h)},
        "rects": [{"id": rid, "w": format_scalar(d.w), "h": format_scalar(d.h)}
                  for rid, d in sorted(instance.rects)],
    }


def instance_hash(instance: Instance) -> str:
    """SHA-256 of the canonical instance document."""
    return hashlib.sha256(_dump(instance_to_dict(instance)).encode("utf-8")).hexdigest()


def parse_instance(text: str) -> Instance:
    """
    Parse an instance document.

    Raises:
        FormatError: On malformed JSON, unknown fields, non-positive dims or duplicate ids
    """
    model = _validate(InstanceModel, _load_json(text))
    try:
        container = Dims(_exact(model.container.w), _exact(model.container.h))
        rects = tuple((r.id, Dims(_exact(r.w), _exact(r.h))) for r in model.rects)
        return Instance(container, rects)
    except PackingError as e:
        raise FormatError(str(e)) from e


def serialize_instance(instance: Instance) -> str:
    return _dump(instance_to_dict(instance))


def _check_hash(found: str, instance: Instance) -> None:
    expected = instance_hash(instance)
    if found != expected:
        raise FormatError(f"document belongs to instance {found[:12]}..., "
                          f"not to this instance ({expected[:12]}...)", field="instance-hash")


def parse_packing(text: str, instance: Instance) -> Packing:
    """
    Parse a packing document bound to `instance`.

    Raises:
        FormatError: On malformed documents, a foreign instance-hash, or ids the instance lacks
    """
    model = _validate(PackingModel, _load_json(text))
    _check_hash(model.instance_hash, instance)
    placements = {}
    for index, p in enumerate(model.placements):
        if p.id in placements:
            raise FormatError(f"rectangle {p.id} placed twice", field=f"placements.{index}.id")
        if not instance.has_id(p.id):
            raise FormatError(f"unknown rectangle id {p.id}", field=f"placements.{index}.id")
        placements[p.id] = Placement(_exact(p.x), _exact(p.y), Orientation(p.v))
    return Packing.from_placements(instance, placements)


def serialize_packing(packing: Packing) -> str:
    return _dump({
        "instance-hash": instance_hash(packing.instance),
        "placements": [{"id": r.id, "x": format_scalar(r.left), "y": format_scalar(r.bottom),
                        "v": r.placement.v.value} for r in packing.rects],
    })


def parse_sequence(text: str, instance: Instance) -> PlacementSequence:
    """
    Parse a sequence document bound to `instance`. Ids are not checked here;
    replay reports unknown and duplicate ids with the action index.
    """
    model = _validate(SequenceModel, _load_json(text))
    _check_hash(model.instance_hash, instance)
    actions = tuple(PlacementAction(a.id, Orientation(a.v), _exact(a.x), _exact(a.y))
                    for a in model.actions)
    return PlacementSequence(instance, actions)


def serialize_sequence(sequence: PlacementSequence) -> str:
    # action order is the sequence itself, so only keys are sorted
    return _dump({
        "instance-hash": instance_hash(sequence.instance),
        "actions": [{"id": a.rect_id, "v": a.v.value, "x": format_scalar(a.x),
                     "y": format_scalar(a.y)} for a in sequence.actions],
    })
