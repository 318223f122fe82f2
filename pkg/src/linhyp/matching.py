"""Exact maximum matching for hypergraphs, with augmenting-set certificates.

A matching is a set of pairwise disjoint edges of the host family.  A
subset C of the family certifies that a matching M is *not* maximum when

  (1) C has strictly more non-matching edges than matching edges,
  (2) every matching edge that meets an edge of C belongs to C, and
  (3) the non-matching edges of C are pairwise disjoint.

Swapping C's matching edges for its non-matching edges then yields a
strictly larger matching; conversely a maximum matching admits no such
set.  This holds for arbitrary hypergraphs (no uniformity needed), so the
whole module accepts mixed edge sizes.

Solver: depth-first branch and bound over edges in canonical order.  At
each node the lowest vertex still coverable is selected and the search
branches on every candidate edge covering it, then on leaving it
uncovered.  With include-branches explored in edge order before the skip
branch, the first maximum matching encountered is the lexicographically
least one, so results are deterministic and reproducible byte-for-byte.
Disconnected families are solved per component; the per-component
lexicographic minima merge into the global minimum.

The prune bound for a candidate pool is min(#candidates, floor(#coverable
vertices / smallest edge size), largest edge size * greedy packing size);
the greedy term is valid because every candidate edge meets the vertex
set of a maximal greedy packing.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .core import Edge, Family, edge_mask

Matching = tuple[Edge, ...]
AugmentingSet = tuple[Edge, ...]


def is_matching(f: Family, m: Iterable[Iterable[int]]) -> bool:
    """True iff all members belong to f and are pairwise disjoint."""
    edges = [tuple(sorted(e)) for e in m]
    if len(set(edges)) != len(edges):
        return False
    if any(e not in f.edge_set for e in edges):
        return False
    used = 0
    for e in edges:
        em = edge_mask(e)
        if em & used:
            return False
        used |= em
    return True


def canonical_matching(m: Iterable[Iterable[int]]) -> Matching:
    return tuple(sorted(tuple(sorted(e)) for e in m))


def is_augmenting_set(f: Family, m: Iterable[Iterable[int]], c: Iterable[Iterable[int]]) -> bool:
    """Check the three certificate conditions for c relative to (f, m)."""
    m_edges = canonical_matching(m)
    if not is_matching(f, m_edges):
        raise ValueError("m is not a matching of f")
    c_edges = canonical_matching(c)
    if any(e not in f.edge_set for e in c_edges):
        return False
    m_set = set(m_edges)
    c_set = set(c_edges)
    non_matching = [e for e in c_edges if e not in m_set]
    # (1) strictly more non-matching edges than matching edges
    if len(c_set & m_set) >= len(non_matching):
        return False
    # (3) non-matching edges pairwise disjoint
    used = 0
    for e in non_matching:
        em = edge_mask(e)
        if em & used:
            return False
        used |= em
    # (2) any matching edge meeting an edge of c is itself in c; matching
    # edges outside c are disjoint from c's matching edges already, so only
    # the non-matching part needs scanning.
    for b in m_edges:
        if b in c_set:
            continue
        if edge_mask(b) & used:
            return False
    return True


def augment(f: Family, m: Iterable[Iterable[int]], c: Iterable[Iterable[int]]) -> Matching:
    """Swap c's matching edges for its non-matching edges: (m \\ c) | (c \\ m).

    Rejects c unless it satisfies the certificate conditions; the result is
    a matching strictly larger than m.
    """
    if not is_augmenting_set(f, m, c):
        raise ValueError("c is not an augmenting set for (f, m)")
    m_set = set(canonical_matching(m))
    c_set = set(canonical_matching(c))
    return tuple(sorted((m_set - c_set) | (c_set - m_set)))


# ---------------------------------------------------------------------------
# Exact solver
# ---------------------------------------------------------------------------


def _components(edges: Sequence[Edge], masks: Sequence[int]) -> list[list[int]]:
    """Connected components of the edge-intersection graph (index lists)."""
    m = len(edges)
    parent = list(range(m))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    # group edges by vertex to avoid the quadratic all-pairs scan
    by_vertex: dict[int, int] = {}
    for i, e in enumerate(edges):
        for v in e:
            j = by_vertex.setdefault(v, i)
            if j != i:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda idxs: idxs[0])


def _solve_component(edges: Sequence[Edge], masks: Sequence[int]) -> list[Edge]:
    """Lexicographically least maximum matching of one component."""
    k_min = min(len(e) for e in edges)
    k_max = max(len(e) for e in edges)
    best_size = -1
    best: list[Edge] = []

    def upper_bound(cand: list[int]) -> int:
        used = 0
        greedy = 0
        union = 0
        for i in cand:
            mi = masks[i]
            union |= mi
            if not mi & used:
                used |= mi
                greedy += 1
        return min(len(cand), union.bit_count() // k_min, k_max * greedy)

    def search(cand: list[int], chosen: list[Edge]) -> None:
        nonlocal best_size, best
        if not cand:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best = chosen.copy()
            return
        if len(chosen) + upper_bound(cand) <= best_size:
            return
        # candidates are in canonical edge order, so the first one starts
        # with the lowest coverable vertex; edges covering it form a prefix
        v = edges[cand[0]][0]
        head_end = 0
        while head_end < len(cand) and edges[cand[head_end]][0] == v:
            head_end += 1
        for pos in range(head_end):
            i = cand[pos]
            mi = masks[i]
            rest = [j for j in cand[head_end:] if not masks[j] & mi]
            chosen.append(edges[i])
            search(rest, chosen)
            chosen.pop()
        search(cand[head_end:], chosen)  # leave v uncovered

    search(list(range(len(edges))), [])
    return best


def maximum_matching(f: Family) -> Matching:
    """A maximum matching; ties broken to the lexicographically least one."""
    if not f.edges:
        return ()
    out: list[Edge] = []
    for comp in _components(f.edges, f.masks):
        comp_edges = [f.edges[i] for i in comp]
        comp_masks = [f.masks[i] for i in comp]
        out.extend(_solve_component(comp_edges, comp_masks))
    return tuple(sorted(out))


def nu(f: Family) -> int:
    """Maximum matching size."""
    return len(maximum_matching(f))


def find_augmenting_set(
    f: Family,
    m: Iterable[Iterable[int]],
    _maximum: Optional[Matching] = None,
) -> Optional[AugmentingSet]:
    """An augmenting set for (f, m), or None iff m is already maximum.

    The certificate is derived from a maximum matching m1: take the
    symmetric difference S = (m1 \\ m) | (m \\ m1) and return the first
    connected component of S (in the edge-intersection graph) that holds
    more m1-edges than m-edges.  Such a component exists whenever
    |m1| > |m| and always satisfies the three certificate conditions.
    """
    m_edges = canonical_matching(m)
    if not is_matching(f, m_edges):
        raise ValueError("m is not a matching of f")
    m1 = _maximum if _maximum is not None else maximum_matching(f)
    if len(m1) <= len(m_edges):
        return None
    m_set = set(m_edges)
    m1_set = set(m1)
    sym = sorted((m1_set - m_set) | (m_set - m1_set))
    sym_masks = [edge_mask(e) for e in sym]
    for comp in _components(sym, sym_masks):
        comp_edges = [sym[i] for i in comp]
        gain = sum(1 for e in comp_edges if e not in m_set) - sum(
            1 for e in comp_edges if e in m_set
        )
        if gain > 0:
            cert = tuple(comp_edges)
            assert is_augmenting_set(f, m_edges, cert)
            return cert
    raise AssertionError("unreachable: |m1| > |m| guarantees a surplus component")
