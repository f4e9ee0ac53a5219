"""Published wire-format schemas and a validation helper."""

from __future__ import annotations

import functools
import json
from importlib import resources

import jsonschema


@functools.lru_cache(maxsize=1)
def wire_schema() -> dict:
    path = resources.files(__package__) / "schemas" / "wire.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


def validate(kind: str, doc) -> None:
    """Raise jsonschema.ValidationError unless doc matches the named format."""
    defs = wire_schema()["$defs"]
    if kind not in defs:
        raise KeyError(f"no published schema named {kind!r}")
    jsonschema.validate(doc, {"$ref": f"#/$defs/{kind}", "$defs": defs})


def is_valid(kind: str, doc) -> bool:
    try:
        validate(kind, doc)
        return True
    except jsonschema.ValidationError:
        return False
