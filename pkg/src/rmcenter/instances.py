"""Reading and writing instance files (JSON, ``"format": 1``)."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .matroid import Matroid, MatroidError, matroid_from_dict
from .metric import MetricInstance

FORMAT_VERSION = 1

_int_list = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_number_rows = {"type": "array", "items": {"type": "array", "items": {"type": "number"}}}

_MATROID_SCHEMA = {
    "type": "object",
    "required": ["type"],
    "properties": {"type": {"enum": ["uniform", "partition", "graphic", "transversal", "explicit"]}},
    "allOf": [
        {
            "if": {"properties": {"type": {"const": "uniform"}}},
            "then": {"required": ["k"], "properties": {"k": {"type": "integer", "minimum": 0}}},
        },
        {
            "if": {"properties": {"type": {"const": "partition"}}},
            "then": {"required": ["classes", "capacities"], "properties": {"classes": _int_list, "capacities": _int_list}},
        },
        {
            "if": {"properties": {"type": {"const": "graphic"}}},
            "then": {
                "required": ["vertices", "edges"],
                "properties": {
                    "vertices": {"type": "integer", "minimum": 0},
                    "edges": {"type": "array", "items": {**_int_list, "minItems": 2, "maxItems": 2}},
                },
            },
        },
        {
            "if": {"properties": {"type": {"const": "transversal"}}},
            "then": {"required": ["family"], "properties": {"family": {"type": "array", "items": _int_list}}},
        },
        {
            "if": {"properties": {"type": {"const": "explicit"}}},
            "then": {
                "required": ["independent_sets"],
                "properties": {
                    "ground_size": {"type": "integer", "minimum": 0},
                    "independent_sets": {"type": "array", "items": _int_list},
                },
            },
        },
    ],
}

INSTANCE_SCHEMA = {
    "type": "object",
    "required": ["points", "weights", "m", "matroid"],
    "properties": {
        "format": {"const": FORMAT_VERSION},
        "points": {
            "type": "object",
            "properties": {"matrix": _number_rows, "euclidean": _number_rows},
            "minProperties": 1,
            "maxProperties": 1,
            "additionalProperties": False,
        },
        "weights": {"type": "array", "items": {"type": "number", "minimum": 0}},
        "m": {"type": "number", "minimum": 0},
        "matroid": _MATROID_SCHEMA,
    },
}


class InstanceFormatError(ValueError):
    """Malformed instance file; the message names the offending line or field."""


def _field(path) -> str:
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in path)


def parse_instance(data: dict) -> tuple[MetricInstance, Matroid]:
    errors = sorted(jsonschema.Draft202012Validator(INSTANCE_SCHEMA).iter_errors(data), key=lambda e: e.json_path)
    if errors:
        shown = "; ".join(f"field {_field(e.absolute_path)}: {e.message}" for e in errors[:5])
        more = f" (and {len(errors) - 5} more)" if len(errors) > 5 else ""
        raise InstanceFormatError(shown + more)
    weights = data["weights"]
    n = len(weights)
    points = data["points"]
    try:
        if "matrix" in points:
            matrix = points["matrix"]
            if len(matrix) != n:
                raise InstanceFormatError(f"field $.points.matrix: {len(matrix)} rows for {n} weights")
            for i, row in enumerate(matrix):
                if len(row) != n:
                    raise InstanceFormatError(f"field $.points.matrix[{i}]: {len(row)} entries, expected {n}")
            inst = MetricInstance(matrix, weights, data["m"])
        else:
            coords = points["euclidean"]
            if len(coords) != n:
                raise InstanceFormatError(f"field $.points.euclidean: {len(coords)} points for {n} weights")
            if len({len(c) for c in coords}) > 1:
                raise InstanceFormatError("field $.points.euclidean: points have different dimensions")
            inst = MetricInstance.from_euclidean(coords, weights, data["m"]) if n else MetricInstance([], [], data["m"])
    except InstanceFormatError:
        raise
    except ValueError as exc:
        raise InstanceFormatError(f"field $.points: {exc}") from None
    try:
        base = matroid_from_dict(data["matroid"], n)
    except MatroidError as exc:
        raise InstanceFormatError(f"field $.matroid: {exc}") from None
    return inst, base


def load_instance(path: str | Path) -> tuple[MetricInstance, Matroid]:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InstanceFormatError("line 1: top level must be a JSON object")
    return parse_instance(data)


def instance_to_dict(inst: MetricInstance, base: Matroid) -> dict:
    return {
        "format": FORMAT_VERSION,
        "points": {"matrix": [list(row) for row in inst.dist]},
        "weights": list(inst.weights),
        "m": inst.coverage_target,
        "matroid": base.to_dict(),
    }


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
