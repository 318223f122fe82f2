"""Solver, certificates, and the swap operation.

Expected values marked "oracle" below were computed with the exhaustive
packing / enumeration oracles and then frozen.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from linhyp.core import Family, SimpleGraph, graph_as_family, relabel, remove_vertex_star
from linhyp.matching import (
    augment,
    find_augmenting_set,
    is_augmenting_set,
    is_matching,
    maximum_matching,
    nu,
)
from linhyp.generators import (
    enumerate_families,
    random_linear_family,
    steiner_triple_system,
    sunflower_family,
)
from linhyp.verdict import iter_matchings, packing_nu

from conftest import edge_pairs_all_meet


# --- is_matching ---------------------------------------------------------------


def test_is_matching_examples(fano):
    assert is_matching(fano, [fano.edges[0]])
    # every two Fano lines meet (pairwise scan), so no two-line matching
    assert edge_pairs_all_meet(fano)
    assert not is_matching(fano, [fano.edges[0], fano.edges[1]])
    pair = Family.of([(0, 1, 2), (3, 4, 5)])
    assert is_matching(pair, pair.edges)
    assert not is_matching(pair, [(0, 1, 2), (6, 7, 8)])  # not in family


# --- is_augmenting_set -----------------------------------------------------------


def test_is_augmenting_set_trivial_cases():
    f = Family.of([(0, 1, 2)])
    assert is_augmenting_set(f, [], [(0, 1, 2)])
    assert not is_augmenting_set(f, [(0, 1, 2)], [(0, 1, 2)])


def test_is_augmenting_set_two_anchor_example():
    # around the matching {A, B} three pairwise disjoint cross edges with
    # fresh third vertices certify that the matching is not maximum
    a, b = (0, 1, 2), (3, 4, 5)
    cross = [(0, 3, 6), (1, 4, 7), (2, 5, 8)]
    f = Family.of([a, b, *cross])
    assert is_augmenting_set(f, [a, b], [a, b, *cross])
    # sharing one third vertex breaks pairwise disjointness
    bad = Family.of([a, b, (0, 3, 6), (1, 4, 6)])
    assert not is_augmenting_set(bad, [a, b], [a, b, (0, 3, 6), (1, 4, 6)])


def test_is_augmenting_set_requires_matching():
    f = Family.of([(0, 1, 2), (0, 3, 4)])
    with pytest.raises(ValueError):
        is_augmenting_set(f, [(0, 1, 2), (0, 3, 4)], [(0, 1, 2)])


# --- augment ----------------------------------------------------------------------


def test_augment_from_empty():
    f = Family.of([(0, 1, 2)])
    assert augment(f, [], [(0, 1, 2)]) == ((0, 1, 2),)


def test_augment_two_anchor_example():
    a, b = (0, 1, 2), (3, 4, 5)
    cross = [(0, 3, 6), (1, 4, 7), (2, 5, 8)]
    f = Family.of([a, b, *cross])
    bigger = augment(f, [a, b], [a, b, *cross])
    assert bigger == tuple(sorted(cross))
    assert is_matching(f, bigger) and len(bigger) == 3


def test_augment_rejects_non_certificate():
    f = Family.of([(0, 1, 2)])
    with pytest.raises(ValueError):
        augment(f, [(0, 1, 2)], [(0, 1, 2)])


def test_augment_size_arithmetic():
    # |m'| = |m| + |c \ m| - |c & m| >= |m| + 1, forced by condition (1)
    a, b = (0, 1, 2), (3, 4, 5)
    cross = [(0, 3, 6), (1, 4, 7), (2, 5, 8)]
    f = Family.of([a, b, *cross])
    m = [a, b]
    c = [a, b, *cross]
    out = augment(f, m, c)
    assert len(out) == len(m) + len(cross) - 2 == len(m) + 1


# --- find_augmenting_set -------------------------------------------------------------


def test_find_augmenting_set_simple():
    f = Family.of([(0, 1, 2)])
    cert = find_augmenting_set(f, [])
    assert cert == ((0, 1, 2),)


def test_find_augmenting_set_none_on_maximum(fano):
    assert find_augmenting_set(fano, [fano.edges[0]]) is None


def test_find_augmenting_set_symmetric_difference_component():
    f = Family.of([(0, 1, 2), (2, 3, 6), (3, 4, 5)])
    cert = find_augmenting_set(f, [(2, 3, 6)])
    assert cert == ((0, 1, 2), (2, 3, 6), (3, 4, 5))
    assert augment(f, [(2, 3, 6)], cert) == ((0, 1, 2), (3, 4, 5))


def test_find_augmenting_set_validates_input():
    f = Family.of([(0, 1, 2), (0, 3, 4)])
    with pytest.raises(ValueError):
        find_augmenting_set(f, [(0, 1, 2), (0, 3, 4)])


# --- maximum_matching / nu -------------------------------------------------------------


def test_maximum_matching_examples(fano):
    assert maximum_matching(Family.of([], n=0)) == ()
    assert len(maximum_matching(fano)) == 1
    for delta, target in ((3, 2), (5, 4)):
        f = sunflower_family(delta, target)
        assert len(maximum_matching(f)) == target


def test_maximum_matching_is_lexicographically_least():
    # both {(0,1,2),(3,4,5)} and {(0,1,2),(3,4,6)} are maximum; ties break low
    f = Family.of([(0, 1, 2), (3, 4, 6), (3, 4, 5)])
    assert maximum_matching(f) == ((0, 1, 2), (3, 4, 5))


def test_nu_examples(square_with_chords):
    s13 = steiner_triple_system(13)
    assert nu(s13) <= 13 // 3 == 4
    assert nu(s13) == 4  # oracle: exhaustive packing agrees
    assert nu(square_with_chords) == 2
    assert nu(Family.of([(0, 1, 2), (0, 3, 4)])) == 1


def test_mixed_uniformity_supported():
    f = Family.of([(0, 1), (0, 1, 2), (2, 3, 4, 5), (6, 7)])
    assert nu(f) == 3
    assert maximum_matching(f) == ((0, 1), (2, 3, 4, 5), (6, 7))


# --- certificate soundness & completeness on exhaustive small families ---------------


@pytest.mark.parametrize("n,max_edges", [(6, 4), (7, 3)])
def test_certificate_iff_not_maximum(n, max_edges):
    for f in enumerate_families(n, max_edges, up_to_iso=True):
        best = maximum_matching(f)
        assert len(best) == packing_nu(f)
        for m in iter_matchings(f):
            cert = find_augmenting_set(f, m, _maximum=best)
            if len(m) == len(best):
                assert cert is None
            else:
                assert cert is not None
                bigger = augment(f, m, cert)
                assert len(bigger) > len(m)
                assert is_matching(f, bigger)


# --- properties -----------------------------------------------------------------------


@given(st.integers(min_value=0, max_value=500))
@settings(max_examples=25, deadline=None)
def test_nu_matches_oracle_on_random_families(seed):
    f = random_linear_family(10, 7, seed)
    assert nu(f) == packing_nu(f)


@given(st.integers(min_value=0, max_value=500), st.randoms(use_true_random=False))
@settings(max_examples=25, deadline=None)
def test_nu_relabel_invariant(seed, rng):
    f = random_linear_family(9, 6, seed)
    perm = list(range(f.n))
    rng.shuffle(perm)
    assert nu(f) == nu(relabel(f, perm))


@given(st.integers(min_value=0, max_value=500))
@settings(max_examples=25, deadline=None)
def test_nu_monotone_under_edge_and_star_removal(seed):
    f = random_linear_family(9, 6, seed)
    base = nu(f)
    for e in f.edges:
        sub = f.replace_edges([x for x in f.edges if x != e])
        assert nu(sub) <= base
    for x in range(f.n):
        assert nu(remove_vertex_star(f, x)) in (base - 1, base)


@given(st.integers(min_value=0, max_value=500))
@settings(max_examples=25, deadline=None)
def test_maximum_matching_cover_touches_every_edge(seed):
    # an edge disjoint from the cover would itself be an augmenting set
    f = random_linear_family(10, 6, seed)
    m = maximum_matching(f)
    covered = set(v for e in m for v in e)
    assert all(covered & set(e) for e in f.edges)


def test_graph_matching_through_family_view(square_with_chords):
    g = graph_as_family(SimpleGraph.of([(0, 1), (1, 2), (2, 3), (1, 3)]))
    assert g == square_with_chords
    assert maximum_matching(g) == ((0, 1), (2, 3))
