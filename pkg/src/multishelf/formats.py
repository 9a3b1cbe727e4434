"""JSON file formats for tables, sets, and groups.

Documents are canonical: fixed field order, decimal integers, trailing
newline, so save/load round trips are byte-stable.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .groups import FiniteGroup, group_from_table
from .shelves import DistributiveSet, make_distributive_set
from .tables import OpTable, make_table

PathLike = Union[str, Path]


class SchemaError(ValueError):
    """A document does not match the expected schema."""

    def __init__(self, path: str, field: str, message: str):
        self.path = path
        self.field = field
        super().__init__(f"{path}: field '{field}': {message}")


def _read_json(path: PathLike) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise SchemaError(str(path), "<document>", f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise SchemaError(str(path), "<document>", "top level must be an object")
    return doc


def _require(doc: dict, path: PathLike, field: str, kind: type):
    if field not in doc:
        raise SchemaError(str(path), field, "missing")
    v = doc[field]
    if not isinstance(v, kind) or isinstance(v, bool):
        raise SchemaError(str(path), field, f"expected {kind.__name__}")
    return v


def _dump(doc: dict, path: PathLike) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def table_document(op: OpTable) -> dict:
    return {"n": op.n, "table": [list(row) for row in op.entries]}


def save_table(op: OpTable, path: PathLike) -> None:
    _dump(table_document(op), path)


def load_table(path: PathLike) -> OpTable:
    doc = _read_json(path)
    n = _require(doc, path, "n", int)
    table = _require(doc, path, "table", list)
    try:
        return make_table(n, table)
    except (ValueError, TypeError) as e:
        raise SchemaError(str(path), "table", str(e)) from e


def set_document(S: DistributiveSet) -> dict:
    return {"n": S.n, "ops": [[list(row) for row in op.entries] for op in S.ops]}


def save_set(S: DistributiveSet, path: PathLike) -> None:
    _dump(set_document(S), path)


def load_set(path: PathLike, validate: bool = True) -> DistributiveSet:
    """Load a family of tables; validates distributivity unless disabled."""
    doc = _read_json(path)
    n = _require(doc, path, "n", int)
    raw_ops = _require(doc, path, "ops", list)
    ops = []
    for k, raw in enumerate(raw_ops):
        try:
            ops.append(make_table(n, raw))
        except (ValueError, TypeError) as e:
            raise SchemaError(str(path), f"ops[{k}]", str(e)) from e
    if validate:
        return make_distributive_set(ops, n=n)
    return DistributiveSet(n, tuple(ops))


def group_document(G: FiniteGroup) -> dict:
    return {"m": G.m, "mul": [list(row) for row in G.mul], "identity": G.identity}


def save_group(G: FiniteGroup, path: PathLike) -> None:
    _dump(group_document(G), path)


def load_group(path: PathLike) -> FiniteGroup:
    doc = _read_json(path)
    m = _require(doc, path, "m", int)
    mul = _require(doc, path, "mul", list)
    identity = _require(doc, path, "identity", int)
    try:
        return group_from_table(m, mul, identity)
    except (ValueError, TypeError) as e:
        raise SchemaError(str(path), "mul", str(e)) from e
