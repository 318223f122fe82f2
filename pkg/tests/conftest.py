"""Shared fixtures: reference families and schema-validation helpers."""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path

import pytest

from linhyp.core import Family

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"

FANO_LINES = [
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
]


@pytest.fixture
def fano() -> Family:
    return Family.of(FANO_LINES, n=7, k=3)


@pytest.fixture
def four_edge_tight() -> Family:
    # six vertices, every vertex of degree two, every two edges meet
    return Family.of([(0, 1, 2), (0, 3, 4), (1, 4, 5), (2, 3, 5)])


@pytest.fixture
def square_with_chords() -> Family:
    # the 4-vertex graph w,x,y,z -> 0,1,2,3 with edges wx, xy, yz, xz;
    # its unique maximum matching is {wx, yz}
    return Family.of([(0, 1), (1, 2), (2, 3), (1, 3)], n=4, k=2)


def edge_pairs_all_meet(f: Family) -> bool:
    """Direct pairwise scan (kept independent of the library helpers)."""
    return all(
        set(a) & set(b) for a, b in combinations(f.edges, 2)
    )


def load_schema(name: str) -> dict:
    with open(SCHEMA_DIR / name) as handle:
        return json.load(handle)


def validate_against(name: str, payload: dict) -> None:
    jsonschema = pytest.importorskip("jsonschema")
    schema = load_schema(name)
    resolver = jsonschema.validators.RefResolver(
        base_uri=f"{(SCHEMA_DIR / name).as_uri()}", referrer=schema
    )
    jsonschema.validate(payload, schema, resolver=resolver)
