"""Constructors for the families the size bounds are exercised on.

Contents:
  - sunflower_family: disjoint unions of one-core sunflowers, the extremal
    families with |F| = max_degree * matching_number exactly.
  - steiner_triple_system: S(n,3,2) via the Bose construction for
    n = 6m+3 and the Skolem construction for n = 6m+1.  The binding
    contract is the postcondition (every vertex pair covered exactly
    once), which the test-suite checks for every generated order.
  - chvatal_hanson_graph: a simple graph with prescribed maximum degree
    and matching number whose edge count meets
    nu*delta + floor(nu / ceil(delta/2)) * floor(delta/2).
  - graph_lift: replace each graph edge e_i by the triple e_i | {y_i}
    with a fresh vertex y_i, preserving matching number and max degree.
  - random_linear_family: seeded rejection sampling, always linear.
  - enumerate_families: every 3-uniform linear family on a fixed labelled
    universe, optionally reduced to one representative per isomorphism
    class via an orderly lex-minimality test.

Construction layout is deterministic everywhere; no randomness outside
random_linear_family, which is a pure function of its seed.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

from .core import Edge, Family, SimpleGraph, edge_mask


def sunflower_family(delta: int, nu: int) -> Family:
    """`nu` disjoint sunflowers, each with `delta` petals through one core.

    The result is linear and 3-uniform with matching number nu, maximum
    degree delta and exactly delta*nu edges.
    """
    if delta < 1 or nu < 1:
        raise ValueError("delta and nu must be positive")
    edges = []
    block = 1 + 2 * delta
    for comp in range(nu):
        core = comp * block
        for petal in range(delta):
            edges.append((core, core + 1 + 2 * petal, core + 2 + 2 * petal))
    return Family.of(edges, n=nu * block, k=3)


# ---------------------------------------------------------------------------
# Steiner triple systems
# ---------------------------------------------------------------------------


def _bose(m: int) -> list[Edge]:
    # order n = 6m+3; points (x, j) -> 3x+j over the odd-order cyclic
    # quasigroup x*y = (x+y)(m+1) mod (2m+1), which is idempotent.
    q = 2 * m + 1

    def op(x: int, y: int) -> int:
        return ((x + y) * (m + 1)) % q

    def pt(x: int, j: int) -> int:
        return 3 * x + j

    triples = [tuple(pt(x, j) for j in range(3)) for x in range(q)]
    for x in range(q):
        for y in range(x + 1, q):
            for j in range(3):
                triples.append(
                    tuple(sorted((pt(x, j), pt(y, j), pt(op(x, y), (j + 1) % 3))))
                )
    return triples


def _skolem(m: int) -> list[Edge]:
    # order n = 6m+1; points (x, j) -> 3x+j for x in Z_{2m} plus one hub
    # vertex 6m.  The half-idempotent quasigroup is plain addition on
    # Z_{2m} relabelled so that 2x -> x on the first half.
    q = 2 * m
    hub = 6 * m

    def relabel(z: int) -> int:
        return z // 2 if z % 2 == 0 else m + z // 2

    def op(x: int, y: int) -> int:
        return relabel((x + y) % q)

    def pt(x: int, j: int) -> int:
        return 3 * x + j

    triples: list[Edge] = []
    for i in range(m):
        triples.append(tuple(pt(i, j) for j in range(3)))
    for i in range(m):
        for j in range(3):
            triples.append(tuple(sorted((hub, pt(m + i, j), pt(i, (j + 1) % 3)))))
    for x in range(q):
        for y in range(x + 1, q):
            for j in range(3):
                triples.append(
                    tuple(sorted((pt(x, j), pt(y, j), pt(op(x, y), (j + 1) % 3))))
                )
    return triples


def steiner_triple_system(n: int) -> Family:
    """An S(n,3,2): every vertex pair lies in exactly one triple.

    Exists iff n >= 3 and n = 1 or 3 (mod 6); anything else is rejected.
    """
    if n < 3 or n % 6 not in (1, 3):
        raise ValueError("a triple system of order n needs n >= 3, n = 1 or 3 (mod 6)")
    triples = _bose((n - 3) // 6) if n % 6 == 3 else _skolem((n - 1) // 6)
    return Family.of(triples, n=n, k=3)


# ---------------------------------------------------------------------------
# Extremal graphs and their 3-uniform lifts
# ---------------------------------------------------------------------------


def _gadget(delta: int) -> tuple[int, list[tuple[int, int]]]:
    """A graph with max degree delta, matching number ceil(delta/2), and
    the locally extremal edge count; returns (vertex count, edges)."""
    if delta % 2 == 0:
        size = delta + 1
        return size, [(a, b) for a in range(size) for b in range(a + 1, size)]
    # odd delta = 2t+1: complete graph on 2t+3 vertices minus a
    # near-perfect matching minus one extra edge at the unmatched vertex
    size = delta + 2
    drop = {(i, i + 1) for i in range(0, size - 1, 2)}
    drop.add((0, size - 1))
    return size, [
        (a, b)
        for a in range(size)
        for b in range(a + 1, size)
        if (a, b) not in drop
    ]


def chvatal_hanson_graph(delta: int, nu: int) -> SimpleGraph:
    """A simple graph with the prescribed max degree and matching number
    and with nu*delta + floor(nu/ceil(delta/2))*floor(delta/2) edges.

    Built from floor(nu / ceil(delta/2)) disjoint gadgets plus disjoint
    stars making up the rest of the matching number.
    """
    if delta < 1 or nu < 1:
        raise ValueError("delta and nu must be positive")
    half_up = (delta + 1) // 2
    copies = nu // half_up
    stars = nu - copies * half_up
    edges: list[tuple[int, int]] = []
    base = 0
    g_size, g_edges = _gadget(delta)
    for _ in range(copies):
        edges.extend((base + a, base + b) for a, b in g_edges)
        base += g_size
    for _ in range(stars):
        edges.extend((base, base + 1 + i) for i in range(delta))
        base += delta + 1
    return SimpleGraph.of(edges, n=base)


def graph_lift(g: SimpleGraph) -> Family:
    """One triple e_i | {y_i} per graph edge, with fresh lift vertices.

    Lift vertices are assigned |V(g)|, |V(g)|+1, ... in canonical edge
    order so that the output is reproducible.  Matching number and max
    degree carry over from the graph; the result is linear.
    """
    triples = [(a, b, g.n + i) for i, (a, b) in enumerate(g.edges)]
    return Family.of(triples, n=g.n + len(g.edges), k=3)


# ---------------------------------------------------------------------------
# Random and exhaustive sources
# ---------------------------------------------------------------------------


def random_linear_family(n: int, target_edges: int, seed: int) -> Family:
    """Seeded rejection sampling of a linear 3-uniform family.

    Draws random triples and keeps those that stay linear against the
    accepted ones, stopping at `target_edges` edges or after 10*target
    draws, so the edge count may fall short on dense requests.  Output is
    a pure function of (n, target_edges, seed).
    """
    if n < 3:
        raise ValueError("need at least three vertices")
    if target_edges < 0:
        raise ValueError("target_edges must be non-negative")
    rng = random.Random(seed)
    kept: list[Edge] = []
    kept_masks: list[int] = []
    budget = 10 * target_edges
    while len(kept) < target_edges and budget > 0:
        budget -= 1
        edge = tuple(sorted(rng.sample(range(n), 3)))
        m = edge_mask(edge)
        if any((m & km).bit_count() > 1 for km in kept_masks):
            continue
        if edge in kept:
            continue
        kept.append(edge)
        kept_masks.append(m)
    return Family.of(kept, n=n, k=3)


def _compatible(mask: int, chosen_masks: Sequence[int]) -> bool:
    return all((mask & cm).bit_count() <= 1 for cm in chosen_masks)


def is_lex_min(edges: Sequence[Edge]) -> bool:
    """Is this sorted triple list minimal over all vertex relabelings?

    The code of a family is its sorted edge list; we search for a
    relabeling with a strictly smaller code.  Minimal codes use the
    vertices 0..s-1 with labels appearing in first-use order, so the
    search emits edges in code order, assigning fresh labels consecutively
    as they are needed, and prunes any branch whose next emitted edge
    would exceed the corresponding edge of the candidate code.
    """
    if not edges:
        return True
    support = sorted({v for e in edges for v in e})
    if support[-1] != len(support) - 1:
        return False
    target = tuple(edges)
    total = len(target)

    def dfs(idx: int, assign: dict[int, int], used: int, remaining: list[Edge]) -> bool:
        # True means a strictly smaller code exists
        if idx == total:
            return False
        goal = target[idx]
        for pos, e in enumerate(remaining):
            mapped = [assign[v] for v in e if v in assign]
            free = [v for v in e if v not in assign]
            image = tuple(sorted(mapped + list(range(used, used + len(free)))))
            if image > goal:
                continue
            if image < goal:
                return True
            rest = remaining[:pos] + remaining[pos + 1 :]
            for order in permutations(free):
                nxt = dict(assign)
                for offset, v in enumerate(order):
                    nxt[v] = used + offset
                if dfs(idx + 1, nxt, used + len(free), rest):
                    return True
        return False

    return not dfs(0, {}, 0, list(target))


def _iter_labeled(n: int, max_edges: int) -> Iterator[tuple[Edge, ...]]:
    triples = [tuple(c) for c in combinations(range(n), 3)]
    masks = [edge_mask(t) for t in triples]

    def rec(start: int, chosen: list[Edge], chosen_masks: list[int]) -> Iterator[tuple[Edge, ...]]:
        yield tuple(chosen)
        if len(chosen) == max_edges:
            return
        for i in range(start, len(triples)):
            if _compatible(masks[i], chosen_masks):
                chosen.append(triples[i])
                chosen_masks.append(masks[i])
                yield from rec(i + 1, chosen, chosen_masks)
                chosen.pop()
                chosen_masks.pop()

    yield from rec(0, [], [])


def _iter_canonical(n: int, max_edges: int) -> Iterator[tuple[Edge, ...]]:
    # orderly generation: a canonical family minus its largest edge is
    # canonical, so extending canonical prefixes by larger edges and
    # keeping the lex-minimal ones visits each isomorphism class once
    triples = [tuple(c) for c in combinations(range(n), 3)]
    masks = [edge_mask(t) for t in triples]

    def contiguous(t: Edge, s: int) -> bool:
        fresh = [v for v in t if v >= s]
        return fresh == list(range(s, s + len(fresh)))

    def rec(
        last: int, chosen: list[Edge], chosen_masks: list[int], s: int
    ) -> Iterator[tuple[Edge, ...]]:
        yield tuple(chosen)
        if len(chosen) == max_edges:
            return
        for i in range(last + 1, len(triples)):
            t = triples[i]
            if not contiguous(t, s):
                continue
            if not _compatible(masks[i], chosen_masks):
                continue
            chosen.append(t)
            if is_lex_min(chosen):
                chosen_masks.append(masks[i])
                yield from rec(i + 1, chosen, chosen_masks, max(s, t[-1] + 1))
                chosen_masks.pop()
            chosen.pop()

    yield from rec(-1, [], [], 0)


def enumerate_families(
    max_vertices: int, max_edges: int, up_to_iso: bool = False
) -> Iterator[Family]:
    """Every 3-uniform linear family on the labelled universe
    {0, ..., max_vertices-1} with at most max_edges edges, each exactly
    once; with `up_to_iso` only the lex-minimal representative of each
    isomorphism class is yielded."""
    if max_vertices < 0 or max_edges < 0:
        raise ValueError("parameters must be non-negative")
    source = (
        _iter_canonical(max_vertices, max_edges)
        if up_to_iso
        else _iter_labeled(max_vertices, max_edges)
    )
    for edges in source:
        yield Family(n=max_vertices, edges=edges, k=3)
