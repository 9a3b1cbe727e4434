"""Bundled example tables.

``berman-d6``: the pair of 6x6 tables (a reflection and a 3-cycle) that
generate a non-abelian distributive group of order 6 on a six-element
carrier — the smallest carrier where that is possible.

``xor``: XOR on {0,1}; invertible but not self-distributive, useful as a
negative fixture.

Each fixture carries the sha256 of its canonical set document; loaders
verify the checksum so in-package data and files on disk cannot drift.
"""
from __future__ import annotations

import hashlib
import json

from .shelves import DistributiveSet
from .tables import OpTable

BERMAN_TAU = OpTable(
    6,
    (
        (1, 1, 3, 5, 5, 3),
        (0, 0, 4, 2, 2, 4),
        (3, 3, 5, 1, 1, 5),
        (2, 2, 0, 4, 4, 0),
        (5, 5, 1, 3, 3, 1),
        (4, 4, 2, 0, 0, 2),
    ),
)

BERMAN_SIGMA = OpTable(
    6,
    (
        (2, 4, 2, 4, 2, 4),
        (5, 3, 5, 3, 5, 3),
        (4, 0, 4, 0, 4, 0),
        (1, 5, 1, 5, 1, 5),
        (0, 2, 0, 2, 0, 2),
        (3, 1, 3, 1, 3, 1),
    ),
)

XOR = OpTable(2, ((0, 1), (1, 0)))

_FIXTURE_OPS: dict[str, tuple[OpTable, ...]] = {
    "berman-d6": (BERMAN_TAU, BERMAN_SIGMA),
    "xor": (XOR,),
}


def fixture_names() -> list[str]:
    return sorted(_FIXTURE_OPS)


def fixture_ops(name: str) -> tuple[OpTable, ...]:
    if name not in _FIXTURE_OPS:
        raise KeyError(f"unknown fixture '{name}', have {fixture_names()}")
    return _FIXTURE_OPS[name]


def fixture_set_document(name: str) -> dict:
    ops = fixture_ops(name)
    return {
        "n": ops[0].n,
        "ops": [[list(row) for row in op.entries] for op in ops],
    }


def fixture_checksum(name: str) -> str:
    doc = fixture_set_document(name)
    return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()


def get_fixture(name: str, validate: bool = True) -> DistributiveSet:
    """Fixture as a family of tables; distributivity revalidated on load
    (skipped for deliberately non-distributive fixtures when validate=False)."""
    from .shelves import make_distributive_set

    ops = fixture_ops(name)
    if validate:
        return make_distributive_set(ops)
    return DistributiveSet(ops[0].n, ops)
