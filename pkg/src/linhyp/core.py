"""Canonical set-system (hypergraph) values and elementary statistics.

A *family* is a finite set of hyperedges over the fixed vertex universe
{0, ..., n-1}.  Isolated vertices are allowed: `n` is explicit so that
ground-set-sensitive operations (cover sets, enumeration) have a stable
domain.  Every value here is immutable after construction and therefore
safe to share between threads or processes.

Conventions:
  - An edge is a strictly increasing tuple of vertex ids.
  - A family stores its edges as a lexicographically sorted tuple with no
    duplicates; two families are equal iff (n, k, edge list) are equal.
  - `k` is the declared uniformity; `None` means mixed edge sizes are
    permitted.  Linear means every two distinct edges share at most one
    vertex (any simple graph is a linear 2-uniform family).
  - Each edge also has a bitmask over the universe, so pairwise
    intersection sizes are O(words) popcounts.

JSON wire format (strict): {"k": 3, "n": 7, "edges": [[0,1,2], ...]} with
strictly increasing inner lists and a strictly increasing (hence
duplicate-free) outer list.  A lenient reader may sort and deduplicate,
but never invents vertices: out-of-range ids are always rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, ...]


class FamilyFormatError(ValueError):
    """Raised when JSON input does not satisfy the wire-format contract."""


def _canonical_edge(members: Iterable[int]) -> Edge:
    edge = tuple(sorted(members))
    if len(edge) == 0:
        raise ValueError("empty edge is not allowed")
    if len(set(edge)) != len(edge):
        raise ValueError(f"edge {edge!r} repeats a vertex")
    if edge[0] < 0:
        raise ValueError(f"edge {edge!r} has a negative vertex id")
    return edge


@dataclass(frozen=True)
class Family:
    """An immutable set system over the vertex universe {0, ..., n-1}.

    Construct through :meth:`of` (which sorts and deduplicates) unless the
    arguments are already in canonical form; the constructor validates and
    rejects anything non-canonical.
    """

    n: int
    edges: tuple[Edge, ...]
    k: int | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex universe size must be non-negative")
        prev: Edge | None = None
        for edge in self.edges:
            if tuple(sorted(set(edge))) != edge or len(edge) == 0:
                raise ValueError(f"edge {edge!r} is not a sorted duplicate-free tuple")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise ValueError(f"edge {edge!r} is out of range for n={self.n}")
            if prev is not None and not prev < edge:
                raise ValueError("edge list must be strictly increasing")
            if self.k is not None and len(edge) != self.k:
                raise ValueError(f"edge {edge!r} has size {len(edge)}, declared k={self.k}")
            prev = edge
        if self.k is not None and self.k < 1:
            raise ValueError("uniformity k must be positive")

    @classmethod
    def of(
        cls,
        edges: Iterable[Iterable[int]],
        n: int | None = None,
        k: int | None = None,
    ) -> "Family":
        """Canonicalize `edges` (sort members, sort list, drop duplicates).

        When `n` is omitted the universe is the smallest one containing all
        vertices.  When `k` is omitted it is inferred: the common edge size
        if the family is uniform, else None.
        """
        canon = sorted({_canonical_edge(e) for e in edges})
        if n is None:
            n = max((e[-1] for e in canon), default=-1) + 1
        if k is None:
            sizes = {len(e) for e in canon}
            k = sizes.pop() if len(sizes) == 1 else None
        return cls(n=n, edges=tuple(canon), k=k)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge: object) -> bool:
        return edge in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Per-edge vertex bitmasks, aligned with `edges`."""
        return tuple(edge_mask(e) for e in self.edges)

    @cached_property
    def support(self) -> tuple[int, ...]:
        """Sorted non-isolated vertices (X_F)."""
        seen: set[int] = set()
        for e in self.edges:
            seen.update(e)
        return tuple(sorted(seen))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return tuple(degs)

    def replace_edges(self, edges: Iterable[Iterable[int]]) -> "Family":
        """Same universe and declared uniformity, different edge set."""
        return Family.of(edges, n=self.n, k=self.k)


def edge_mask(edge: Iterable[int]) -> int:
    m = 0
    for v in edge:
        m |= 1 << v
    return m


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def is_uniform(f: Family, k: int) -> bool:
    """True iff every edge has exactly k vertices (vacuously true if empty)."""
    return all(len(e) == k for e in f.edges)


def is_linear(f: Family) -> bool:
    """True iff every two distinct edges share at most one vertex."""
    masks = f.masks
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if (mi & masks[j]).bit_count() > 1:
                return False
    return True


def degree(f: Family, x: int) -> int:
    """Number of edges containing x (the size of the star F_x)."""
    if not 0 <= x < f.n:
        raise ValueError(f"vertex {x} out of range for n={f.n}")
    return f.degrees[x]


def max_degree(f: Family) -> int:
    """Largest vertex degree; 0 for the empty family."""
    return max(f.degrees, default=0)


def remove_vertex_star(f: Family, x: int) -> Family:
    """Drop every edge containing x; the vertex universe is unchanged."""
    if not 0 <= x < f.n:
        raise ValueError(f"vertex {x} out of range for n={f.n}")
    bit = 1 << x
    kept = [e for e, m in zip(f.edges, f.masks) if not m & bit]
    return Family(n=f.n, edges=tuple(kept), k=f.k)


def edges_meeting(f: Family, s: Iterable[int]) -> tuple[Edge, ...]:
    """All edges with a nonempty intersection with the vertex set `s`."""
    m = edge_mask(s)
    return tuple(e for e, em in zip(f.edges, f.masks) if em & m)


def relabel(f: Family, perm: Sequence[int]) -> Family:
    """Apply a vertex permutation (perm[v] is the new id of v)."""
    if sorted(perm) != list(range(f.n)):
        raise ValueError("perm must be a permutation of range(n)")
    return Family.of([[perm[v] for v in e] for e in f.edges], n=f.n, k=f.k)


# ---------------------------------------------------------------------------
# Simple graphs (2-uniform companions used by the extremal constructions)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimpleGraph:
    """An immutable loopless simple graph on {0, ..., n-1}."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev: tuple[int, int] | None = None
        for e in self.edges:
            if len(e) != 2 or e[0] >= e[1]:
                raise ValueError(f"graph edge {e!r} must be an increasing pair")
            if e[0] < 0 or e[1] >= self.n:
                raise ValueError(f"graph edge {e!r} out of range for n={self.n}")
            if prev is not None and not prev < e:
                raise ValueError("graph edge list must be strictly increasing")
            prev = e

    @classmethod
    def of(cls, edges: Iterable[Iterable[int]], n: int | None = None) -> "SimpleGraph":
        canon = sorted({(min(e), max(e)) for e in (tuple(e) for e in edges)})
        for a, b in canon:
            if a == b:
                raise ValueError(f"loop at vertex {a} is not allowed")
        if n is None:
            n = canon[-1][1] + 1 if canon else 0
        return cls(n=n, edges=tuple(canon))

    def __len__(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)


def graph_as_family(g: SimpleGraph) -> Family:
    """View a simple graph as a 2-uniform family (same matchings)."""
    return Family(n=g.n, edges=g.edges, k=2)


# ---------------------------------------------------------------------------
# JSON wire format
# ---------------------------------------------------------------------------


def family_to_json(f: Family) -> str:
    """Canonical single-line JSON rendering (stable byte-for-byte)."""
    payload = {"k": f.k, "n": f.n, "edges": [list(e) for e in f.edges]}
    return json.dumps(payload, separators=(",", ":"))


def family_from_json(text: str, lenient: bool = False) -> Family:
    """Parse the Family wire format.

    Strict mode rejects duplicate edges, unsorted edge members, an unsorted
    edge list and out-of-range vertices.  Lenient mode sorts and
    deduplicates but still rejects out-of-range or negative vertices.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise FamilyFormatError("top-level value must be an object")
    missing = {"n", "edges"} - payload.keys()
    if missing:
        raise FamilyFormatError(f"missing keys: {sorted(missing)}")
    unknown = payload.keys() - {"k", "n", "edges"}
    if unknown:
        raise FamilyFormatError(f"unknown keys: {sorted(unknown)}")
    n = payload["n"]
    k = payload.get("k")
    raw_edges = payload["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FamilyFormatError("n must be a non-negative integer")
    if k is not None and (not isinstance(k, int) or isinstance(k, bool) or k < 1):
        raise FamilyFormatError("k must be null or a positive integer")
    if not isinstance(raw_edges, list):
        raise FamilyFormatError("edges must be a list")
    edges: list[Edge] = []
    for item in raw_edges:
        if not isinstance(item, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in item
        ):
            raise FamilyFormatError(f"edge {item!r} must be a list of integers")
        if any(v < 0 or v >= n for v in item):
            raise FamilyFormatError(f"edge {item!r} out of range for n={n}")
        edge = tuple(item)
        if not lenient:
            if tuple(sorted(set(edge))) != edge or len(edge) == 0:
                raise FamilyFormatError(f"edge {item!r} is not strictly increasing")
        edges.append(edge)
    if not lenient:
        for prev, cur in zip(edges, edges[1:]):
            if not prev < cur:
                raise FamilyFormatError("edge list is not strictly increasing")
        if k is not None and any(len(e) != k for e in edges):
            raise FamilyFormatError("edge sizes do not match declared k")
        return Family(n=n, edges=tuple(edges), k=k)
    return Family.of(edges, n=n, k=k)
