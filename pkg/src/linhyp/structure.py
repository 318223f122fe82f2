"""Structural decompositions of a family relative to a maximum matching.

Pieces provided here:

  - S_F: the vertices covered by every maximum matching, computed through
    the peel criterion  x in S_F  <=>  nu(F \\ F_x) = nu(F) - 1.
  - Nested decompositions: greedily peel S-vertices (star removal) until
    no vertex lies in all maximum matchings; the number of peels is k1.
  - D-partition: classify edges by how many of their vertices the fixed
    matching covers (D_i = edges with exactly i covered vertices).
  - D_2 pair/triple sets and the bipartite trace graph G(D_2, A, B).
  - M_1/M_2: matching edges that meet at least APEX_D1_THRESHOLD
    singly-covered edges versus the rest.  For a maximum matching all
    singly-covered edges around such an edge pass through one shared
    vertex (the apex); anything else is a reportable inconsistency.
  - E_1..E_4: the induced partition of the family used by the size bounds.

S_F and nested decompositions make sense for any set system (the peel
criterion is uniformity-free) and in particular for 2-uniform graph
families.  The D/M/E decompositions require a 3-uniform linear family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import (
    Edge,
    Family,
    SimpleGraph,
    degree,
    edge_mask,
    is_linear,
    is_uniform,
    remove_vertex_star,
)
from .matching import (
    Matching,
    canonical_matching,
    find_augmenting_set,
    is_matching,
    maximum_matching,
    nu,
)

# An edge of a maximum matching whose count of singly-covered neighbours
# reaches this threshold has them all concentrated at one apex vertex.
APEX_D1_THRESHOLD = 7


class StructureViolation(Exception):
    """A decomposition postcondition failed on concrete data.

    This is a reportable finding (either a solver bug or a genuine
    counterexample witness), not a usage error; the offending data rides
    along in `payload`.
    """

    def __init__(self, kind: str, message: str, payload: dict):
        super().__init__(message)
        self.kind = kind
        self.payload = payload


def _require_3uniform_linear(f: Family) -> None:
    if not is_uniform(f, 3):
        raise ValueError("operation requires a 3-uniform family")
    if not is_linear(f):
        raise ValueError("operation requires a linear family")


def _validated_matching(f: Family, m: Iterable[Iterable[int]]) -> Matching:
    edges = canonical_matching(m)
    if not is_matching(f, edges):
        raise ValueError("m is not a matching of f")
    return edges


# ---------------------------------------------------------------------------
# Vertices forced into every maximum matching
# ---------------------------------------------------------------------------


def s_f(f: Family) -> tuple[int, ...]:
    """Vertices covered by every maximum matching of f.

    Uses the peel criterion (one solver call per vertex) rather than
    enumerating all maximum matchings; the enumeration oracle lives in
    the verdict module for cross-checking.
    """
    base = nu(f)
    if base == 0:
        return ()
    return tuple(
        x for x in range(f.n) if f.degrees[x] and nu(remove_vertex_star(f, x)) == base - 1
    )


@dataclass(frozen=True)
class NestedDecomposition:
    """A maximal peel sequence: subfamilies[i] has vertices[:i] peeled."""

    vertices: tuple[int, ...]
    subfamilies: tuple[Family, ...]

    @property
    def k1(self) -> int:
        return len(self.vertices)

    @property
    def final(self) -> Family:
        return self.subfamilies[-1]


def nested_decomposition(
    f: Family, sequence: Optional[Sequence[int]] = None
) -> NestedDecomposition:
    """Peel forced vertices until none remain.

    The default policy picks the maximum-degree vertex of the current
    S-set (ties to the smallest id).  An explicit `sequence` overrides the
    leading picks — each entry must lie in the S-set of the family it is
    removed from — after which the default policy resumes.  The resulting
    k1 genuinely depends on the picks, which is why the override exists.
    """
    chain = [f]
    picks: list[int] = []
    pending = list(sequence) if sequence is not None else []
    current = f
    while True:
        s = s_f(current)
        if pending:
            x = pending.pop(0)
            if x not in s:
                raise ValueError(f"vertex {x} is not forced in step {len(picks)}")
        else:
            if not s:
                break
            x = max(s, key=lambda v: (current.degrees[v], -v))
        picks.append(x)
        current = remove_vertex_star(current, x)
        chain.append(current)
    return NestedDecomposition(vertices=tuple(picks), subfamilies=tuple(chain))


# ---------------------------------------------------------------------------
# D-partition and the pairwise / triple window sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DPartition:
    """Edges grouped by the number of matching-covered vertices they hold."""

    d0: tuple[Edge, ...]
    d1: tuple[Edge, ...]
    d2: tuple[Edge, ...]
    d3: tuple[Edge, ...]

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return (len(self.d0), len(self.d1), len(self.d2), len(self.d3))


def d_partition(
    f: Family, m: Iterable[Iterable[int]], expect_maximum: bool = False
) -> DPartition:
    """Split f by |A & X_m| (edge sizes of at most 3 are required).

    With `expect_maximum` set, a nonempty D_0 class is reported as a
    StructureViolation: an edge untouched by the matching is by itself an
    augmenting set, contradicting maximality.
    """
    if any(len(e) > 3 for e in f.edges):
        raise ValueError("d_partition requires edges of size at most 3")
    matching = _validated_matching(f, m)
    xm = edge_mask(v for e in matching for v in e)
    buckets: list[list[Edge]] = [[], [], [], []]
    for e, em in zip(f.edges, f.masks):
        buckets[(em & xm).bit_count()].append(e)
    part = DPartition(*(tuple(b) for b in buckets))
    if expect_maximum and part.d0:
        raise StructureViolation(
            "d0-nonempty",
            "matching claimed maximum but an edge avoids its cover",
            {"matching": matching, "d0": part.d0},
        )
    return part


def _covered_window(
    f: Family, matching: Matching, anchors: Sequence[Edge], exact: int
) -> tuple[Edge, ...]:
    """Edges with exactly `exact` covered vertices, all inside the anchors."""
    xm = edge_mask(v for e in matching for v in e)
    anchor_mask = edge_mask(v for e in anchors for v in e)
    out = []
    for e, em in zip(f.edges, f.masks):
        if (em & xm).bit_count() == exact and (em & xm) == (em & anchor_mask):
            out.append(e)
    return tuple(out)


def d2_pair(f: Family, m: Iterable[Iterable[int]], a: Edge, b: Edge) -> tuple[Edge, ...]:
    """Doubly-covered edges meeting both matching edges a and b."""
    _require_3uniform_linear(f)
    matching = _validated_matching(f, m)
    a, b = tuple(sorted(a)), tuple(sorted(b))
    if a not in matching or b not in matching or a == b:
        raise ValueError("a and b must be distinct edges of m")
    xm = edge_mask(v for e in matching for v in e)
    ma, mb = edge_mask(a), edge_mask(b)
    return tuple(
        e
        for e, em in zip(f.edges, f.masks)
        if (em & xm).bit_count() == 2 and em & ma and em & mb
    )


def d2_triple(
    f: Family, m: Iterable[Iterable[int]], a: Edge, b: Edge, c: Edge
) -> tuple[Edge, ...]:
    """Doubly-covered edges with both covered vertices inside a | b | c."""
    _require_3uniform_linear(f)
    matching = _validated_matching(f, m)
    trio = tuple(tuple(sorted(e)) for e in (a, b, c))
    if len(set(trio)) != 3 or any(e not in matching for e in trio):
        raise ValueError("a, b, c must be distinct edges of m")
    return _covered_window(f, matching, trio, exact=2)


def d3_triple(
    f: Family, m: Iterable[Iterable[int]], a: Edge, b: Edge, c: Edge
) -> tuple[Edge, ...]:
    """Fully-covered edges (other than a, b, c) meeting a | b | c twice or more."""
    _require_3uniform_linear(f)
    matching = _validated_matching(f, m)
    trio = tuple(tuple(sorted(e)) for e in (a, b, c))
    if len(set(trio)) != 3 or any(e not in matching for e in trio):
        raise ValueError("a, b, c must be distinct edges of m")
    xm = edge_mask(v for e in matching for v in e)
    window = edge_mask(v for e in trio for v in e)
    out = []
    for e, em in zip(f.edges, f.masks):
        if e in trio:
            continue
        if (em & xm).bit_count() == 3 and (em & window).bit_count() >= 2:
            out.append(e)
    return tuple(out)


def g_d2(f: Family, m: Iterable[Iterable[int]], a: Edge, b: Edge) -> SimpleGraph:
    """The trace graph of D_2(a, b) on the six anchor vertices.

    Vertices are sorted(a | b) relabelled to 0..5; each doubly-covered
    edge contributes its covered pair.  Linearity makes the trace
    injective, so the graph has exactly |D_2(a, b)| edges.
    """
    window = d2_pair(f, m, a, b)
    anchor = sorted(set(a) | set(b))
    index = {v: i for i, v in enumerate(anchor)}
    pairs = []
    for e in window:
        trace = tuple(sorted(index[v] for v in e if v in index))
        pairs.append(trace)
    return SimpleGraph.of(pairs, n=6)


# ---------------------------------------------------------------------------
# M_1 / M_2 and the induced family partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchingPartition:
    """Matching edges with a concentrated fan of singly-covered edges (m1,
    with their apex vertices) versus the rest (m2)."""

    m1: tuple[Edge, ...]
    m2: tuple[Edge, ...]
    apex: dict[Edge, int]


@dataclass(frozen=True)
class FamilyPartition:
    """E_1..E_4 together with m2 partition the whole family."""

    e1: tuple[Edge, ...]
    e2: tuple[Edge, ...]
    e3: tuple[Edge, ...]
    e4: tuple[Edge, ...]
    matching_partition: MatchingPartition

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return (len(self.e1), len(self.e2), len(self.e3), len(self.e4))


def matching_partition(f: Family, m: Iterable[Iterable[int]]) -> MatchingPartition:
    """Split a maximum matching at the singly-covered-fan threshold.

    Requires m maximum (verified through the certificate machinery).  For
    each matching edge with at least APEX_D1_THRESHOLD singly-covered
    neighbours, all of those neighbours must share one vertex; if the data
    says otherwise a StructureViolation carries the witness out.
    """
    _require_3uniform_linear(f)
    matching = _validated_matching(f, m)
    if find_augmenting_set(f, matching) is not None:
        raise ValueError("m is not a maximum matching")
    xm = edge_mask(v for e in matching for v in e)
    d1_edges = [
        (e, em) for e, em in zip(f.edges, f.masks) if (em & xm).bit_count() == 1
    ]
    m1: list[Edge] = []
    m2: list[Edge] = []
    apex: dict[Edge, int] = {}
    for a in matching:
        am = edge_mask(a)
        fan = [(e, em) for e, em in d1_edges if em & am]
        if len(fan) >= APEX_D1_THRESHOLD:
            anchors = {(em & am).bit_length() - 1 for _, em in fan}
            if len(anchors) != 1:
                raise StructureViolation(
                    "apex-split",
                    "singly-covered fan touches several vertices of one matching edge",
                    {"edge": a, "fan": tuple(e for e, _ in fan)},
                )
            m1.append(a)
            apex[a] = anchors.pop()
        else:
            m2.append(a)
    return MatchingPartition(m1=tuple(m1), m2=tuple(m2), apex=apex)


def family_partition(
    f: Family,
    m: Iterable[Iterable[int]],
    mp: Optional[MatchingPartition] = None,
) -> FamilyPartition:
    """Partition f into E_1..E_4 and m2 relative to a maximum matching.

    E_1 collects the full stars of the apex vertices; the remaining edges
    are classed by how many vertices they share with the m2 cover: none
    (E_2), one (E_3), two or more (E_4, the m2 edges themselves excluded).
    """
    matching = _validated_matching(f, m)
    if mp is None:
        mp = matching_partition(f, matching)
    apex_mask = edge_mask(mp.apex.values()) if mp.apex else 0
    xm2 = edge_mask(v for e in mp.m2 for v in e)
    m2_set = set(mp.m2)
    e1, e2, e3, e4 = [], [], [], []
    for e, em in zip(f.edges, f.masks):
        if em & apex_mask:
            e1.append(e)
            continue
        t = (em & xm2).bit_count()
        if t == 0:
            e2.append(e)
        elif t == 1:
            e3.append(e)
        elif e not in m2_set:
            e4.append(e)
    part = FamilyPartition(
        e1=tuple(e1), e2=tuple(e2), e3=tuple(e3), e4=tuple(e4), matching_partition=mp
    )
    total = sum(part.sizes) + len(mp.m2)
    if total != len(f.edges):
        raise StructureViolation(
            "partition-sum",
            "E_1..E_4 and m2 failed to partition the family",
            {"sizes": part.sizes, "m2": len(mp.m2), "family": len(f.edges)},
        )
    return part


# ---------------------------------------------------------------------------
# Serialization helpers (consumed by the CLI)
# ---------------------------------------------------------------------------


def structure_summary(f: Family, matching: Optional[Matching] = None) -> dict:
    """All decomposition data for one family as a JSON-ready dict.

    Sections needing 3-uniformity or linearity are null when they do not
    apply; S_F and the nested peel are always present.
    """
    if matching is None:
        matching = maximum_matching(f)
    nested = nested_decomposition(f)
    out: dict = {
        "n": f.n,
        "size": len(f.edges),
        "max_degree": max(f.degrees, default=0),
        "nu": len(matching),
        "maximum_matching": [list(e) for e in matching],
        "s_f": list(s_f(f)),
        "k1": nested.k1,
        "nested_sequence": list(nested.vertices),
        "d_partition": None,
        "m_partition": None,
        "e_partition": None,
    }
    if all(len(e) <= 3 for e in f.edges):
        part = d_partition(f, matching)
        out["d_partition"] = {
            "d0": [list(e) for e in part.d0],
            "d1": [list(e) for e in part.d1],
            "d2": [list(e) for e in part.d2],
            "d3": [list(e) for e in part.d3],
        }
    if is_uniform(f, 3) and is_linear(f):
        mp = matching_partition(f, matching)
        fp = family_partition(f, matching, mp)
        out["m_partition"] = {
            "m1": [list(e) for e in mp.m1],
            "m2": [list(e) for e in mp.m2],
            "apex": [[list(e), v] for e, v in sorted(mp.apex.items())],
        }
        out["e_partition"] = {
            "e1": [list(e) for e in fp.e1],
            "e2": [list(e) for e in fp.e2],
            "e3": [list(e) for e in fp.e3],
            "e4": [list(e) for e in fp.e4],
        }
    return out
