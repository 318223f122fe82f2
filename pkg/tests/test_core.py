"""Family/graph values, elementary statistics, and the JSON wire format."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from linhyp.core import (
    Family,
    FamilyFormatError,
    SimpleGraph,
    degree,
    edges_meeting,
    family_from_json,
    family_to_json,
    is_linear,
    is_uniform,
    max_degree,
    relabel,
    remove_vertex_star,
)
from linhyp.generators import sunflower_family

from conftest import FANO_LINES


# --- canonical construction -------------------------------------------------


def test_of_sorts_and_dedups():
    f = Family.of([(2, 1, 0), (0, 1, 2), (5, 3, 4)])
    assert f.edges == ((0, 1, 2), (3, 4, 5))
    assert f.n == 6 and f.k == 3


def test_of_infers_mixed_k():
    assert Family.of([(0, 1), (0, 1, 2)]).k is None
    assert Family.of([(0, 1, 2)]).k == 3


def test_constructor_rejects_non_canonical():
    with pytest.raises(ValueError):
        Family(n=3, edges=((2, 1, 0),))
    with pytest.raises(ValueError):
        Family(n=3, edges=((0, 1, 2), (0, 1, 2)))
    with pytest.raises(ValueError):
        Family(n=2, edges=((0, 1, 2),))
    with pytest.raises(ValueError):
        Family(n=3, edges=((0, 1),), k=3)
    with pytest.raises(ValueError):
        Family.of([(0, 0, 1)])


def test_simple_graph_validation():
    g = SimpleGraph.of([(1, 0), (1, 2)])
    assert g.edges == ((0, 1), (1, 2)) and g.n == 3
    assert g.max_degree() == 2
    with pytest.raises(ValueError):
        SimpleGraph.of([(1, 1)])


# --- linearity / uniformity -------------------------------------------------


def test_is_linear_examples(fano):
    assert is_linear(fano)
    assert is_linear(Family.of([(0, 1, 2)]))
    assert not is_linear(Family.of([(0, 1, 2), (0, 1, 3)]))


def test_is_uniform_examples():
    assert is_uniform(Family.of([(0, 1, 2), (3, 4, 5)]), 3)
    assert is_uniform(Family.of([], n=0), 3)  # vacuous
    assert not is_uniform(Family.of([(0, 1), (0, 1, 2)]), 3)


# --- degrees ------------------------------------------------------------------


def test_degree_examples(fano):
    for v in range(7):
        assert degree(fano, v) == 3
    assert degree(Family.of([(0, 1, 2)]), 0) == 1
    assert degree(Family.of([(0, 1, 2), (0, 3, 4), (0, 5, 6)]), 0) == 3
    with pytest.raises(ValueError):
        degree(fano, 7)


def test_max_degree_examples(fano):
    assert max_degree(fano) == 3
    assert max_degree(Family.of([], n=0)) == 0
    assert max_degree(sunflower_family(5, 2)) == 5


# --- star removal / star queries ---------------------------------------------


def test_remove_vertex_star_examples(fano):
    f = Family.of([(0, 1, 2), (3, 4, 5)])
    assert remove_vertex_star(f, 0).edges == ((3, 4, 5),)
    assert remove_vertex_star(f, 0).n == f.n

    isolated = Family.of([(0, 1, 2)], n=6)
    assert remove_vertex_star(isolated, 5) == isolated

    # one Fano point lies on three lines, so four lines survive
    assert len(remove_vertex_star(fano, 0).edges) == 7 - degree(fano, 0) == 4


def test_edges_meeting_examples():
    f = Family.of([(0, 1, 2), (3, 4, 5)])
    assert edges_meeting(f, {0}) == ((0, 1, 2),)
    assert edges_meeting(f, set()) == ()
    flower = sunflower_family(3, 1)
    core = 0
    assert edges_meeting(flower, {core}) == flower.edges


# --- property tests -----------------------------------------------------------

edge_lists = st.lists(
    st.lists(st.integers(min_value=0, max_value=8), min_size=1, max_size=4, unique=True),
    max_size=8,
)


@given(edge_lists)
def test_canonicalization_idempotent(edges):
    once = Family.of(edges)
    twice = Family.of(once.edges, n=once.n, k=once.k)
    assert once == twice


triple_lists = st.lists(
    st.sets(st.integers(min_value=0, max_value=8), min_size=3, max_size=3),
    max_size=8,
)


@given(triple_lists)
def test_degree_sum_is_k_times_edges(edges):
    f = Family.of(edges)
    assert sum(f.degrees) == 3 * len(f.edges)


@given(triple_lists, st.randoms(use_true_random=False))
def test_is_linear_relabel_invariant(edges, rng):
    f = Family.of(edges, n=9)
    perm = list(range(9))
    rng.shuffle(perm)
    assert is_linear(f) == is_linear(relabel(f, perm))


@given(triple_lists, st.integers(min_value=0, max_value=8))
def test_remove_vertex_star_properties(edges, x):
    f = Family.of(edges, n=9)
    out = remove_vertex_star(f, x)
    assert all(x not in e for e in out.edges)
    assert len(f.edges) - len(out.edges) == degree(f, x)


# --- JSON wire format -----------------------------------------------------------


def test_json_round_trip(fano):
    text = family_to_json(fano)
    assert family_from_json(text) == fano
    assert family_to_json(family_from_json(text)) == text


def test_json_canonical_bytes():
    f = Family.of([(0, 1, 2)], n=4)
    assert family_to_json(f) == '{"k":3,"n":4,"edges":[[0,1,2]]}'


@pytest.mark.parametrize(
    "text",
    [
        '{"k":3,"n":3,"edges":[[0,1,2],[0,1,2]]}',  # duplicate edge
        '{"k":3,"n":3,"edges":[[2,1,0]]}',  # unsorted members
        '{"k":3,"n":6,"edges":[[3,4,5],[0,1,2]]}',  # unsorted edge list
        '{"k":3,"n":3,"edges":[[0,1,3]]}',  # out of range
        '{"k":3,"n":3,"edges":[[0,1,1]]}',  # repeated vertex
        '{"k":3,"n":3,"edges":[[0,1]]}',  # size vs declared k
        '{"n":3}',  # missing edges
        '{"k":3,"n":3,"edges":[[0,1,2]],"extra":1}',  # unknown key
        '{"k":3,"n":3,"edges":[[0,1,2]]',  # truncated
    ],
)
def test_json_strict_rejections(text):
    with pytest.raises(FamilyFormatError):
        family_from_json(text)


def test_json_lenient_sorts_and_dedups():
    text = '{"k":3,"n":6,"edges":[[5,4,3],[0,1,2],[3,4,5]]}'
    f = family_from_json(text, lenient=True)
    assert f.edges == ((0, 1, 2), (3, 4, 5))
    with pytest.raises(ValueError):
        family_from_json('{"k":3,"n":3,"edges":[[0,1,5]]}', lenient=True)


def test_json_family_schema(fano):
    import json

    from conftest import validate_against

    validate_against("family.schema.json", json.loads(family_to_json(fano)))


def test_fano_fixture_shape():
    f = Family.of(FANO_LINES)
    assert len(f.edges) == 7 and f.n == 7
    assert is_linear(f) and is_uniform(f, 3)
