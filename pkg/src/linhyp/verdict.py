"""Evaluate every size bound on a family; oracle cross-checks; searches.

Each inequality is evaluated as a BoundRecord with exact integer or
rational arithmetic (fractions with denominator 6 are compared by
cross-multiplication, never floats).  A record is "violated" only when
its hypothesis holds and the relation fails; on a verified 3-uniform
linear family that is a reportable discovery, never dropped.

Besides the per-family report this module holds:

  - independent oracles (exhaustive subset packing for the matching
    number, enumeration of all maximum matchings for the forced-vertex
    set) used to cross-check the branch-and-bound solver and the peel
    criterion;
  - the finite configuration searches: the eight-edge two-anchor window
    has exactly one shape up to isomorphism, and no three-anchor window
    pattern with all three pairwise counts equal to seven survives the
    certificate test;
  - the sweep harness that runs everything over an exhaustive family
    enumeration and aggregates violations and tightness witnesses.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Optional

from .core import (
    Edge,
    Family,
    edge_mask,
    family_to_json,
    is_linear,
    is_uniform,
    max_degree,
)
from .matching import (
    Matching,
    augment,
    canonical_matching,
    find_augmenting_set,
    is_matching,
    maximum_matching,
)
from .structure import (
    StructureViolation,
    d2_pair,
    d_partition,
    family_partition,
    matching_partition,
    nested_decomposition,
    s_f,
)

Number = Fraction | int


def exact_str(x: Number | None) -> str | None:
    """Render an exact value: integers plainly, rationals as "p/q"."""
    if x is None:
        return None
    frac = Fraction(x)
    return str(frac)


def family_hash(f: Family) -> str:
    return hashlib.sha256(family_to_json(f).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------


def iter_matchings(f: Family) -> Iterator[Matching]:
    """Every matching of f (including the empty one), each exactly once."""
    edges, masks = f.edges, f.masks

    def rec(start: int, used: int, chosen: list[Edge]) -> Iterator[Matching]:
        yield tuple(chosen)
        for i in range(start, len(edges)):
            if not masks[i] & used:
                chosen.append(edges[i])
                yield from rec(i + 1, used | masks[i], chosen)
                chosen.pop()

    yield from rec(0, 0, [])


def packing_nu(f: Family) -> int:
    """Matching number by plain exhaustive packing (no bounding at all);
    the independent cross-check for the branch-and-bound solver."""
    masks = f.masks
    best = 0

    def rec(start: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for i in range(start, len(masks)):
            if not masks[i] & used:
                rec(i + 1, used | masks[i], size + 1)

    rec(0, 0, 0)
    return best


def all_maximum_matchings(f: Family) -> list[Matching]:
    best = packing_nu(f)
    return [m for m in iter_matchings(f) if len(m) == best]


def s_f_by_enumeration(f: Family) -> tuple[int, ...]:
    """Definition-level oracle: intersect the covers of all maximum
    matchings (empty when the only maximum matching is empty)."""
    inter: Optional[int] = None
    for m in all_maximum_matchings(f):
        cover = edge_mask(v for e in m for v in e)
        inter = cover if inter is None else inter & cover
    out = []
    mask = inter or 0
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


# ---------------------------------------------------------------------------
# Bound records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundRecord:
    bound_id: str
    statement: str
    relation: str  # "<=" or "=="
    applicable: bool
    left: Number | None
    right: Number | None
    note: str = ""

    @property
    def slack(self) -> Number | None:
        if self.left is None or self.right is None:
            return None
        return self.right - self.left

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "not_applicable"
        if self.relation == "==":
            return "holds" if self.left == self.right else "violated"
        if self.left > self.right:
            return "violated"
        return "tight" if self.left == self.right else "holds"

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "statement": self.statement,
            "relation": self.relation,
            "applicable": self.applicable,
            "left": exact_str(self.left),
            "right": exact_str(self.right),
            "slack": exact_str(self.slack),
            "verdict": self.verdict,
            "note": self.note,
        }


def _rec(
    bound_id: str,
    statement: str,
    left: Number | None,
    right: Number | None,
    applicable: bool = True,
    relation: str = "<=",
    note: str = "",
) -> BoundRecord:
    return BoundRecord(bound_id, statement, relation, applicable, left, right, note)


# ---------------------------------------------------------------------------
# Individual checkers
# ---------------------------------------------------------------------------


def check_trivial_bound(f: Family) -> BoundRecord:
    """Crude covering bound: the kv cover vertices see every edge, each at
    most max-degree times, and the matching itself is counted once."""
    k = f.k if f.k is not None else (len(f.edges[0]) if f.edges else 3)
    if not is_uniform(f, k):
        return _rec(
            "size-cover-cap",
            "|F| <= (D-1)*k*v + v",
            None,
            None,
            applicable=False,
            note="family is not uniform",
        )
    d = max_degree(f)
    v = len(maximum_matching(f))
    return _rec(
        "size-cover-cap",
        "|F| <= (D-1)*k*v + v",
        len(f.edges),
        (d - 1) * k * v + v if f.edges else 0,
    )


def check_double_degree_bound(f: Family) -> list[BoundRecord]:
    """|F| <= max(2Dv, 10v) unconditionally, hence |F| <= 2Dv once D >= 5."""
    d = max_degree(f)
    v = len(maximum_matching(f))
    size = len(f.edges)
    return [
        _rec("size-double-degree-cap", "|F| <= max(2*D*v, 10*v)", size, max(2 * d * v, 10 * v)),
        _rec(
            "size-double-degree-cap-d5",
            "D >= 5 -> |F| <= 2*D*v",
            size,
            2 * d * v,
            applicable=d >= 5,
            note="" if d >= 5 else f"needs D >= 5, here D = {d}",
        ),
    ]


def check_delta_dominant_bound(f: Family) -> BoundRecord:
    """|F| <= D*v whenever D >= (23/6) * v^2/(v-1) (needs v >= 2).

    The hypothesis is compared by cross-multiplication: 6*D*(v-1) >= 23*v^2.
    """
    d = max_degree(f)
    v = len(maximum_matching(f))
    size = len(f.edges)
    if v < 2:
        return _rec(
            "size-degree-dominant-cap",
            "D >= (23/6)*v^2/(v-1) -> |F| <= D*v",
            size,
            d * v,
            applicable=False,
            note="needs v >= 2; for v <= 1 the cover cap applies instead",
        )
    hyp = 6 * d * (v - 1) >= 23 * v * v
    return _rec(
        "size-degree-dominant-cap",
        "D >= (23/6)*v^2/(v-1) -> |F| <= D*v",
        size,
        d * v,
        applicable=hyp,
        note="" if hyp else f"hypothesis fails: 6*{d}*{v - 1} < 23*{v}^2",
    )


def check_d1_bound(f: Family, m: Iterable[Iterable[int]]) -> BoundRecord:
    """At most max(D-1, 6) singly-covered edges can lean on each matching
    edge, so |D1| <= max((D-1)*v, 6*v)."""
    matching = canonical_matching(m)
    part = d_partition(f, matching)
    d = max_degree(f)
    v = len(matching)
    return _rec(
        "singly-covered-cap",
        "|D1| <= max((D-1)*v, 6*v)",
        len(part.d1),
        max((d - 1) * v, 6 * v),
    )


def check_apex_exclusivity(f: Family, m: Iterable[Iterable[int]]) -> BoundRecord:
    """On each matching edge, a vertex carrying >= 3 singly-covered edges
    forces the other two vertices to carry none (count of offenders)."""
    matching = canonical_matching(m)
    part = d_partition(f, matching)
    d1_count: dict[int, int] = {}
    for e in part.d1:
        xm_vertex = next(v for v in e if any(v in b for b in matching))
        d1_count[xm_vertex] = d1_count.get(xm_vertex, 0) + 1
    bad = 0
    for b in matching:
        heavy = [v for v in b if d1_count.get(v, 0) >= 3]
        for v in heavy:
            if any(d1_count.get(u, 0) > 0 for u in b if u != v):
                bad += 1
    return _rec(
        "apex-exclusivity",
        "a vertex with >= 3 singly-covered edges silences its matching edge",
        bad,
        0,
        relation="==",
    )


def check_forced_cover_degree(f: Family) -> BoundRecord:
    """A vertex of degree above 3v must lie in every maximum matching's
    cover (count of vertices that do not)."""
    v = len(maximum_matching(f))
    heavy = [x for x in range(f.n) if f.degrees[x] > 3 * v]
    forced = set(s_f(f)) if heavy else set()
    bad = sum(1 for x in heavy if x not in forced)
    return _rec(
        "forced-cover-degree",
        "degree(x) > 3*v -> x is covered by every maximum matching",
        bad,
        0,
        relation="==",
    )


def check_peel_bound(f: Family) -> list[BoundRecord]:
    """Peeling k1 forced vertices drops at most D edges each, and the
    residual family keeps its degree under min(3*residual-v, D)."""
    d = max_degree(f)
    nested = nested_decomposition(f)
    residual = nested.final
    res_nu = len(maximum_matching(residual))
    return [
        _rec(
            "peel-size-cap",
            "|F| <= k1*D + |residual|",
            len(f.edges),
            nested.k1 * d + len(residual.edges),
        ),
        _rec(
            "peel-residual-degree-cap",
            "D(residual) <= min(3*v(residual), D)",
            max_degree(residual),
            min(3 * res_nu, d),
        ),
    ]


def _pair_windows(f: Family, matching: Matching) -> dict[tuple[Edge, Edge], int]:
    return {
        (a, b): len(d2_pair(f, matching, a, b))
        for a, b in combinations(matching, 2)
    }


def check_window_bounds(f: Family, m: Iterable[Iterable[int]]) -> list[BoundRecord]:
    """All window caps tied to a maximum matching.

    Covers: the per-pair cap of 8, the 12-cap on the partner sums of a
    full pair, the per-triple cap of 21, the aggregate density cap
    23*n*(n-1)/6 on doubly-plus-fully-covered edges, the E-partition caps,
    the counting identities of the D-partition, and the global
    (23/6)v^2 + 7v cap for families with no forced vertex.
    """
    matching = canonical_matching(m)
    records: list[BoundRecord] = []
    part = d_partition(f, matching)
    size = len(f.edges)
    d = max_degree(f)
    v = len(matching)

    # D-partition identities
    xm = edge_mask(u for e in matching for u in e)
    deg_out = sum(f.degrees[x] for x in range(f.n) if not (xm >> x) & 1)
    deg_in = sum(f.degrees[x] for x in range(f.n) if (xm >> x) & 1)
    d0, d1, d2, d3 = part.sizes
    records.append(_rec("untouched-class-empty", "|D0| == 0", d0, 0, relation="=="))
    records.append(
        _rec("d-partition-total", "|D0|+|D1|+|D2|+|D3| == |F|", d0 + d1 + d2 + d3, size, relation="==")
    )
    records.append(
        _rec(
            "outside-degree-identity",
            "2*|D1| + |D2| == total degree outside the cover",
            2 * d1 + d2,
            deg_out,
            relation="==",
        )
    )
    records.append(
        _rec(
            "inside-degree-identity",
            "|D1| + 2*|D2| + 3*|D3| == total degree inside the cover",
            d1 + 2 * d2 + 3 * d3,
            deg_in,
            relation="==",
        )
    )

    # pairwise window cap
    windows = _pair_windows(f, matching)
    if windows:
        (wa, wb), wmax = max(windows.items(), key=lambda kv: (kv[1], kv[0]))
        records.append(
            _rec(
                "pair-window-cap",
                "|D2(A,B)| <= 8 for matching edges A, B",
                wmax,
                8,
                note=f"attained by {list(wa)}, {list(wb)}",
            )
        )
    else:
        records.append(
            _rec("pair-window-cap", "|D2(A,B)| <= 8 for matching edges A, B", None, None, applicable=False, note="needs two matching edges")
        )

    # partner sums next to a full pair window
    partner_best: Optional[tuple[int, tuple[Edge, Edge, Edge]]] = None
    if v >= 3:
        for (a, b), count in windows.items():
            if count != 8:
                continue
            for c in matching:
                if c in (a, b):
                    continue
                total = windows[_ordered(a, c)] + windows[_ordered(b, c)]
                if partner_best is None or total > partner_best[0]:
                    partner_best = (total, (a, b, c))
    if partner_best is not None:
        records.append(
            _rec(
                "pair-window-partner-cap",
                "|D2(A,B)| = 8 -> |D2(A,C)| + |D2(B,C)| <= 12",
                partner_best[0],
                12,
                note=f"anchors {[list(e) for e in partner_best[1]]}",
            )
        )
    else:
        records.append(
            _rec(
                "pair-window-partner-cap",
                "|D2(A,B)| = 8 -> |D2(A,C)| + |D2(B,C)| <= 12",
                None,
                None,
                applicable=False,
                note="no full pair window with a third matching edge",
            )
        )

    # triple window cap (pairwise windows are disjoint in a linear family)
    triple_max = None
    all_triples_ok = True
    for a, b, c in combinations(matching, 3):
        total = (
            windows[_ordered(a, b)] + windows[_ordered(a, c)] + windows[_ordered(b, c)]
        )
        if triple_max is None or total > triple_max:
            triple_max = total
        if total > 21:
            all_triples_ok = False
    if triple_max is not None:
        records.append(
            _rec("triple-window-cap", "|D2(A,B,C)| <= 21", triple_max, 21)
        )
    else:
        records.append(
            _rec("triple-window-cap", "|D2(A,B,C)| <= 21", None, None, applicable=False, note="needs three matching edges")
        )

    # aggregate density of doubly- and fully-covered edges
    if v >= 3:
        left = d2 + (d3 - v)
        right = Fraction(23 * v * (v - 1), 6)
        records.append(
            _rec(
                "window-density-cap",
                "|D2| + |D3 - M| <= 23*n*(n-1)/6 for n = |M|",
                left,
                right,
                applicable=all_triples_ok,
                note="" if all_triples_ok else "a triple window exceeds 21",
            )
        )
    else:
        records.append(
            _rec(
                "window-density-cap",
                "|D2| + |D3 - M| <= 23*n*(n-1)/6 for n = |M|",
                None,
                None,
                applicable=False,
                note="needs |M| >= 3",
            )
        )

    # E-partition caps
    try:
        mp = matching_partition(f, matching)
        fp = family_partition(f, matching, mp)
    except StructureViolation as exc:
        records.append(
            _rec(
                "apex-unique",
                "heavy matching edges have a single apex vertex",
                1,
                0,
                relation="==",
                note=f"{exc.kind}: {exc}",
            )
        )
    else:
        records.append(
            _rec("apex-unique", "heavy matching edges have a single apex vertex", 0, 0, relation="==")
        )
        m1 = len(mp.m1)
        n2 = len(mp.m2)
        e1, e2, e3, e4 = fp.sizes
        records.append(_rec("apex-star-cap", "|E1| <= |M1|*D", e1, m1 * d))
        records.append(_rec("shielded-class-empty", "|E2| == 0", e2, 0, relation="=="))
        # below seven contacts per matching edge nothing pins them to one
        # vertex, so the degree term only bites beyond the six-edge floor
        records.append(
            _rec(
                "single-contact-cap",
                "|E3| <= min(2*|M1|+6, max(6, D-1)) * (v-|M1|)",
                e3,
                min(2 * m1 + 6, max(6, d - 1)) * (v - m1),
            )
        )
        if n2 >= 3:
            e4_cap: Number = Fraction(23 * n2 * (n2 - 1), 6)
        elif n2 == 2:
            e4_cap = 8
        else:
            e4_cap = 0
        records.append(
            _rec("multi-contact-cap", "|E4| <= 23*n*(n-1)/6 (n=|M2|>=3); 8 (n=2); 0 (n<=1)", e4, e4_cap)
        )

    # global cap when no vertex is forced into every maximum matching
    forced_free = len(s_f(f)) == 0
    records.append(
        _rec(
            "size-no-forced-vertex",
            "S_F empty -> 6*|F| <= 23*v^2 + 42*v",
            6 * size,
            23 * v * v + 42 * v,
            applicable=forced_free,
            note="" if forced_free else "some vertex is covered by every maximum matching",
        )
    )
    return records


def _ordered(a: Edge, b: Edge) -> tuple[Edge, Edge]:
    return (a, b) if a < b else (b, a)


# ---------------------------------------------------------------------------
# Whole-family report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    family: Family
    matching: Matching
    records: tuple[BoundRecord, ...]
    sf_size: int
    k1: int

    @property
    def violations(self) -> tuple[BoundRecord, ...]:
        return tuple(r for r in self.records if r.verdict == "violated")

    @property
    def tight(self) -> tuple[BoundRecord, ...]:
        return tuple(r for r in self.records if r.verdict == "tight")

    def to_dict(self) -> dict:
        f = self.family
        return {
            "family": json.loads(family_to_json(f)),
            "family_hash": family_hash(f),
            "summary": {
                "n": f.n,
                "size": len(f.edges),
                "max_degree": max_degree(f),
                "nu": len(self.matching),
                "maximum_matching": [list(e) for e in self.matching],
                "s_f_size": self.sf_size,
                "k1": self.k1,
            },
            "records": [r.to_dict() for r in self.records],
            "violations": len(self.violations),
        }

    def csv_rows(self) -> list[list[str]]:
        h = family_hash(self.family)
        rows = []
        for r in self.records:
            rows.append(
                [
                    h,
                    r.bound_id,
                    "1" if r.applicable else "0",
                    exact_str(r.left) or "",
                    exact_str(r.right) or "",
                    exact_str(r.slack) or "",
                    r.verdict,
                ]
            )
        return rows


CSV_HEADER = ["family_hash", "bound_id", "applicable", "left", "right", "slack", "verdict"]


def evaluate_family(f: Family) -> BoundReport:
    """Run every checker against f with its canonical maximum matching.

    Only 3-uniform linear families are accepted here; the individual
    checkers stay importable for other uniformities where they apply.
    """
    if not is_uniform(f, 3):
        raise ValueError("verdict evaluation requires a 3-uniform family")
    if not is_linear(f):
        raise ValueError("verdict evaluation requires a linear family")
    matching = maximum_matching(f)
    nested = nested_decomposition(f)
    records: list[BoundRecord] = [check_trivial_bound(f)]
    records.extend(check_double_degree_bound(f))
    records.append(check_delta_dominant_bound(f))
    records.append(check_d1_bound(f, matching))
    records.append(check_apex_exclusivity(f, matching))
    records.append(check_forced_cover_degree(f))
    records.extend(check_peel_bound(f))
    records.extend(check_window_bounds(f, matching))
    return BoundReport(
        family=f,
        matching=matching,
        records=tuple(records),
        sf_size=len(s_f(f)),
        k1=nested.k1,
    )


# ---------------------------------------------------------------------------
# Configuration search: the eight-edge pair window
# ---------------------------------------------------------------------------

_ANCHOR_A = (0, 1, 2)
_ANCHOR_B = (3, 4, 5)


def _share_partitions(items: list[tuple[int, int]]) -> Iterator[list[list[tuple[int, int]]]]:
    """Set partitions of cross pairs into third-vertex groups; a group may
    not repeat an anchor vertex (that would break linearity)."""
    blocks: list[list[tuple[int, int]]] = []

    def rec(i: int) -> Iterator[list[list[tuple[int, int]]]]:
        if i == len(items):
            yield [list(b) for b in blocks]
            return
        a, b = items[i]
        for blk in blocks:
            if all(a != pa and b != pb for pa, pb in blk):
                blk.append(items[i])
                yield from rec(i + 1)
                blk.pop()
        blocks.append([items[i]])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def _config_family(blocks: list[list[tuple[int, int]]]) -> Family:
    edges: list[Edge] = [_ANCHOR_A, _ANCHOR_B]
    ext = 6
    for blk in blocks:
        for a, b in blk:
            edges.append((a, b, ext))
        ext += 1
    return Family.of(edges, n=ext, k=3)


def canonical_pair_config(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    """Canonical form of a cross-edge configuration over the two anchors.

    Symmetries: permute within each anchor, swap the anchors, and relabel
    the external vertices; externals are renamed by first occurrence after
    sorting, and the minimum image is returned.
    """
    triples = [tuple(sorted(e)) for e in edges]
    best: Optional[tuple[Edge, ...]] = None
    for pa in permutations(range(3)):
        for pb in permutations(range(3)):
            for swap in (False, True):

                def move(v: int) -> int:
                    if v < 3:
                        w = pa[v]
                        return w + 3 if swap else w
                    if v < 6:
                        w = pb[v - 3] + 3
                        return w - 3 if swap else w
                    return v

                mapped = sorted(
                    tuple(sorted(move(v) for v in e)) for e in triples
                )
                rename: dict[int, int] = {}
                out = []
                for e in mapped:
                    row = []
                    for v in e:
                        if v >= 6:
                            v = rename.setdefault(v, 6 + len(rename))
                        row.append(v)
                    out.append(tuple(sorted(row)))
                key = tuple(sorted(out))
                if best is None or key < best:
                    best = key
    assert best is not None
    return best


@dataclass(frozen=True)
class PairWindowSearchReport:
    configurations: int
    survivors: int
    classes: tuple[tuple[Edge, ...], ...]

    def to_dict(self) -> dict:
        return {
            "configurations": self.configurations,
            "survivors": self.survivors,
            "classes": [[list(e) for e in cls] for cls in self.classes],
        }


def search_unique_8_config() -> PairWindowSearchReport:
    """Exhaust all eight-edge pair windows; keep those where the two
    anchors stay a maximum matching.

    Every choice of eight of the nine cross pairs and every admissible
    third-vertex sharing pattern is built explicitly; a configuration
    survives iff the family admits no larger matching than {A, B}.
    Surviving configurations are grouped up to isomorphism.
    """
    all_pairs = [(a, b) for a in _ANCHOR_A for b in _ANCHOR_B]
    examined = 0
    survivors = 0
    classes: set[tuple[Edge, ...]] = set()
    for dropped in all_pairs:
        pairs = [p for p in all_pairs if p != dropped]
        for blocks in _share_partitions(pairs):
            examined += 1
            fam = _config_family(blocks)
            if packing_nu(fam) == 2:
                survivors += 1
                cross = [e for e in fam.edges if e not in (_ANCHOR_A, _ANCHOR_B)]
                classes.add(canonical_pair_config(cross))
    return PairWindowSearchReport(
        configurations=examined,
        survivors=survivors,
        classes=tuple(sorted(classes)),
    )


# ---------------------------------------------------------------------------
# Configuration search: three pairwise windows of seven
# ---------------------------------------------------------------------------

DEFAULT_TRIPLE_SEVEN_BUDGET = 10**8

_ANCHOR_C = (6, 7, 8)


def _pattern_reps() -> list[frozenset[tuple[int, int]]]:
    # seven of nine cells of a 3x3 grid, i.e. two missing cells; up to row
    # and column permutation and transposition the missing cells either
    # share a row or do not share anything
    full = {(i, j) for i in range(3) for j in range(3)}
    reps = [frozenset(full - {(0, 0), (0, 1)}), frozenset(full - {(0, 0), (1, 1)})]
    return reps


@dataclass(frozen=True)
class TripleSevenSearchReport:
    status: str  # "complete" or "budget-exceeded"
    survivors: int
    # frontier statistic: third-window subsearches launched after a
    # consistent two-window placement
    patterns_examined: int
    nodes_explored: int
    budget: int

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "survivors": self.survivors,
            "patterns_examined": self.patterns_examined,
            "nodes_explored": self.nodes_explored,
            "budget": self.budget,
        }


def _has_four_matching_through(new_mask: int, other_masks: list[int]) -> bool:
    """Is there a matching of size four containing the new edge?"""
    free = [m for m in other_masks if not m & new_mask]

    def rec(start: int, used: int, need: int) -> bool:
        if need == 0:
            return True
        for i in range(start, len(free)):
            if not free[i] & used:
                if rec(i + 1, used | free[i], need - 1):
                    return True
        return False

    return rec(0, 0, 3)


def search_remark_777(budget: int = DEFAULT_TRIPLE_SEVEN_BUDGET) -> TripleSevenSearchReport:
    """Search for three-anchor configurations with all pairwise window
    counts equal to seven that keep the anchors a maximum matching.

    Anchor symmetries are reduced by fixing the first window's missing
    cells to one of two representatives; external vertices are introduced
    in first-use order so each sharing pattern appears once.  The search
    places one window at a time (the pattern choice for the next window is
    branched only after the previous window is fully placed, so shared
    prefixes are explored once) and abandons a branch as soon as four
    pairwise disjoint edges exist: the anchors are then no longer a
    maximum matching, and supersets stay bad.  A surviving leaf would be a
    counterexample to the expected outcome.
    """
    anchors = (_ANCHOR_A, _ANCHOR_B, _ANCHOR_C)
    anchor_masks = [edge_mask(a) for a in anchors]
    cells = [(i, j) for i in range(3) for j in range(3)]
    cell_subsets = [frozenset(c) for c in combinations(cells, 7)]
    patterns = 0
    nodes = 0
    survivors = 0

    def window_pairs(pattern: Iterable[tuple[int, int]], left: int, right: int) -> list[tuple[int, int]]:
        return sorted((anchors[left][i], anchors[right][j]) for i, j in pattern)

    block_masks: list[int] = []
    placed_masks: list[int] = []

    class Exhausted(Exception):
        pass

    def place(seq: list[tuple[int, int]], idx: int, cont: Callable[[], None]) -> None:
        nonlocal nodes
        if idx == len(seq):
            cont()
            return
        u, w = seq[idx]
        pair_mask = (1 << u) | (1 << w)
        n_blocks = len(block_masks)
        for choice in range(n_blocks + 1):
            if choice < n_blocks and block_masks[choice] & pair_mask:
                continue
            nodes += 1
            if nodes > budget:
                raise Exhausted
            new_mask = pair_mask | (1 << (9 + choice))
            if _has_four_matching_through(new_mask, anchor_masks + placed_masks):
                continue
            placed_masks.append(new_mask)
            if choice < n_blocks:
                saved = block_masks[choice]
                block_masks[choice] = saved | pair_mask
                place(seq, idx + 1, cont)
                block_masks[choice] = saved
            else:
                block_masks.append(pair_mask)
                place(seq, idx + 1, cont)
                block_masks.pop()
            placed_masks.pop()

    def after_ab() -> None:
        for p_ac in cell_subsets:
            place(window_pairs(p_ac, 0, 2), 0, after_ac)

    def after_ac() -> None:
        nonlocal patterns
        for p_bc in cell_subsets:
            patterns += 1
            place(window_pairs(p_bc, 1, 2), 0, at_leaf)

    def at_leaf() -> None:
        nonlocal survivors
        survivors += 1

    exceeded = False
    try:
        for p_ab in _pattern_reps():
            place(window_pairs(p_ab, 0, 1), 0, after_ab)
    except Exhausted:
        exceeded = True
    return TripleSevenSearchReport(
        status="budget-exceeded" if exceeded else "complete",
        survivors=survivors,
        patterns_examined=patterns,
        nodes_explored=nodes,
        budget=budget,
    )


# ---------------------------------------------------------------------------
# Sweep harness
# ---------------------------------------------------------------------------


@dataclass
class SweepReport:
    max_vertices: int
    max_edges: int
    up_to_iso: bool
    families: int = 0
    certificate_checks: int = 0
    violations: list[dict] = field(default_factory=list)
    oracle_mismatches: list[dict] = field(default_factory=list)
    tight_counts: dict[str, int] = field(default_factory=dict)
    tight_examples: dict[str, str] = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.violations and not self.oracle_mismatches

    def merge_family(self, result: dict) -> None:
        self.families += 1
        self.certificate_checks += result["certificate_checks"]
        self.violations.extend(result["violations"])
        self.oracle_mismatches.extend(result["oracle_mismatches"])
        for bound_id in result["tight"]:
            self.tight_counts[bound_id] = self.tight_counts.get(bound_id, 0) + 1
            prev = self.tight_examples.get(bound_id)
            if prev is None or result["family_json"] < prev:
                self.tight_examples[bound_id] = result["family_json"]

    def to_dict(self) -> dict:
        return {
            "max_vertices": self.max_vertices,
            "max_edges": self.max_edges,
            "up_to_iso": self.up_to_iso,
            "families": self.families,
            "certificate_checks": self.certificate_checks,
            "violations": sorted(self.violations, key=json.dumps),
            "oracle_mismatches": sorted(self.oracle_mismatches, key=json.dumps),
            "tight": {
                bound_id: {
                    "count": self.tight_counts[bound_id],
                    "example": json.loads(self.tight_examples[bound_id]),
                }
                for bound_id in sorted(self.tight_counts)
            },
        }


def check_one_family(f: Family) -> dict:
    """Everything the sweep needs to know about one family (merge-ready)."""
    fam_json = family_to_json(f)
    report = evaluate_family(f)
    violations = [
        {"family": json.loads(fam_json), "record": r.to_dict()} for r in report.violations
    ]
    mismatches = []
    solver_nu = len(report.matching)
    oracle_nu = packing_nu(f)
    if solver_nu != oracle_nu:
        mismatches.append(
            {
                "family": json.loads(fam_json),
                "kind": "matching-number",
                "solver": solver_nu,
                "oracle": oracle_nu,
            }
        )
    lemma_sf = s_f(f)
    oracle_sf = s_f_by_enumeration(f)
    if lemma_sf != oracle_sf:
        mismatches.append(
            {
                "family": json.loads(fam_json),
                "kind": "forced-vertices",
                "solver": list(lemma_sf),
                "oracle": list(oracle_sf),
            }
        )
    # certificate soundness and completeness over every matching of f
    cert_checks = 0
    for m in iter_matchings(f):
        cert_checks += 1
        cert = find_augmenting_set(f, m, _maximum=report.matching)
        if (cert is None) != (len(m) == solver_nu):
            mismatches.append(
                {
                    "family": json.loads(fam_json),
                    "kind": "certificate",
                    "matching": [list(e) for e in m],
                    "certificate": None if cert is None else [list(e) for e in cert],
                }
            )
        elif cert is not None:
            bigger = augment(f, m, cert)
            if not (len(bigger) > len(m) and is_matching(f, bigger)):
                mismatches.append(
                    {
                        "family": json.loads(fam_json),
                        "kind": "augment",
                        "matching": [list(e) for e in m],
                        "certificate": [list(e) for e in cert],
                    }
                )
    return {
        "family_json": fam_json,
        "violations": violations,
        "oracle_mismatches": mismatches,
        "tight": sorted({r.bound_id for r in report.tight}),
        "certificate_checks": cert_checks,
    }


def _check_json_family(fam_json: str) -> dict:
    from .core import family_from_json

    return check_one_family(family_from_json(fam_json))


def sweep(
    max_vertices: int,
    max_edges: int,
    up_to_iso: bool = True,
    jobs: int = 1,
    progress: Optional[Callable[[int], None]] = None,
) -> SweepReport:
    """Run every checker and oracle cross-check over the enumeration.

    With jobs > 1 families are distributed over a process pool; the merge
    is associative, so the report does not depend on scheduling.
    """
    from .generators import enumerate_families

    report = SweepReport(max_vertices=max_vertices, max_edges=max_edges, up_to_iso=up_to_iso)
    stream = enumerate_families(max_vertices, max_edges, up_to_iso=up_to_iso)
    if jobs <= 1:
        for f in stream:
            report.merge_family(check_one_family(f))
            if progress:
                progress(report.families)
        return report
    import multiprocessing

    payloads = (family_to_json(f) for f in stream)
    with multiprocessing.Pool(jobs) as pool:
        for result in pool.imap_unordered(_check_json_family, payloads, chunksize=16):
            report.merge_family(result)
            if progress:
                progress(report.families)
    return report
