"""Isomorph-free exhaustive generation of small simple graphs.

Canonical augmentation over vertex addition: a graph of order k+1 is reached
from its parent of order k by attaching one new vertex to a nonempty subset
of the old vertices.  A constructed child is accepted only when the new
vertex lies in the automorphism orbit of the child's designated deletion
vertex (the non-cutvertex with the largest canonical position), so every
isomorphism class is emitted exactly once; candidate neighborhoods are
deduplicated per parent up to the parent's automorphisms.

The search tree ranges over connected graphs; predicate filters apply at
emission, except for two pushed-down prunings on the hot Eulerian path:
when all degrees must end up even, the last vertex's neighborhood is forced
to be exactly the set of odd-degree vertices, and a size ceiling prunes
subtrees whose edge budget is already exhausted.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Optional, Sequence

from .canon import Perm, _orbit_roots, canon_rows
from .graphs import (
    Graph,
    build_graph,
    diameter,
    from_adjacency_masks,
    is_two_connected,
    is_two_edge_connected,
    relabel,
)

MAX_ORDER = 12


@dataclass(frozen=True)
class EnumFilter:
    """What to generate: order plus structural requirements.

    size_range bounds the edge count inclusively; diameter_max implies
    connectivity.  two_connected/two_edge_connected are emission filters.
    """

    order: int
    require_connected: bool = True
    require_even_degrees: bool = True
    require_two_connected: bool = False
    require_two_edge_connected: bool = False
    size_range: Optional[tuple[int, int]] = None
    diameter_max: Optional[int] = None

    def validate(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(
                f"order {self.order} outside the supported range 1..{MAX_ORDER}"
            )
        if self.size_range is not None:
            lo, hi = self.size_range
            if not 0 <= lo <= hi <= self.order * (self.order - 1) // 2:
                raise ValueError(f"bad size_range {self.size_range}")
        if self.diameter_max is not None and self.diameter_max < 0:
            raise ValueError("diameter_max must be nonnegative")


@dataclass(frozen=True)
class EnumPartition:
    """Deterministic split of the generation tree into disjoint shards."""

    total_shards: int = 1
    shard_index: int = 0

    def validate(self) -> None:
        if not 0 <= self.shard_index < self.total_shards:
            raise ValueError(
                f"shard {self.shard_index} outside 0..{self.total_shards - 1}"
            )


def _odd_mask(rows: Sequence[int]) -> int:
    mask = 0
    for v, row in enumerate(rows):
        if row.bit_count() & 1:
            mask |= 1 << v
    return mask


def _cut_mask(n: int, rows: Sequence[int]) -> int:
    """Bitmask of the articulation vertices of a connected bitmask graph."""
    if n <= 2:
        return 0
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = 0
    disc[0] = low[0] = 0
    timer = 1
    stack = [(0, rows[0])]
    root_children = 0
    while stack:
        u, rem = stack[-1]
        if rem:
            b = rem & -rem
            stack[-1] = (u, rem ^ b)
            v = b.bit_length() - 1
            if v == parent[u]:
                continue
            if disc[v] < 0:
                parent[v] = u
                if u == 0:
                    root_children += 1
                disc[v] = low[v] = timer
                timer += 1
                stack.append((v, rows[v]))
            elif disc[v] < low[u]:
                low[u] = disc[v]
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if p != 0 and low[u] >= disc[p]:
                    cuts |= 1 << p
    if root_children > 1:
        cuts |= 1
    return cuts


def _is_min_in_orbit(s: int, perms: Sequence[Perm]) -> bool:
    """True when subset-bitmask s is the smallest member of its orbit."""
    seen = {s}
    stack = [s]
    while stack:
        t = stack.pop()
        for p in perms:
            img = 0
            rest = t
            while rest:
                b = rest & -rest
                img |= 1 << p[b.bit_length() - 1]
                rest ^= b
            if img < s:
                return False
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return True


def _emit(n: int, rows: list[int], pos: Perm, filt: EnumFilter) -> Optional[Graph]:
    """Apply emission filters; return the canonically relabeled graph or None."""
    if filt.size_range is not None:
        m = sum(r.bit_count() for r in rows) // 2
        if not filt.size_range[0] <= m <= filt.size_range[1]:
            return None
    g = from_adjacency_masks(n, rows)
    if filt.require_two_connected and not is_two_connected(g):
        return None
    if filt.require_two_edge_connected and not is_two_edge_connected(g):
        return None
    if filt.diameter_max is not None:
        d = diameter(g)
        if d is None or d > filt.diameter_max:
            return None
    cperm = [0] * n
    for i, v in enumerate(pos):
        cperm[v] = i
    return relabel(g, cperm)


def _connected_stream(filt: EnumFilter, part: EnumPartition) -> Iterator[Graph]:
    n = filt.order
    even = filt.require_even_degrees
    m_hi = filt.size_range[1] if filt.size_range is not None else None

    if n == 1:
        if part.shard_index == 0:
            g = _emit(1, [0], (0,), filt)
            if g is not None:
                yield g
        return
    if n == 2 and part.shard_index != 0:
        return

    split = max(2, min(n - 1, 8))
    counter = 0

    def rec(rows: list[int], k: int, m: int, parent_gens: list[Perm]) -> Iterator[Graph]:
        nonlocal counter
        last = k + 1 == n
        if last and even:
            odd = _odd_mask(rows)
            candidates: Sequence[int] = (odd,) if odd else ()
            dedup: list[Perm] = []
        else:
            candidates = range(1, 1 << k)
            dedup = parent_gens
        remaining = n - k - 1
        future_min = 0 if remaining == 0 else remaining + (1 if even else 0)
        for s in candidates:
            if m_hi is not None and m + s.bit_count() + future_min > m_hi:
                continue
            if dedup and not _is_min_in_orbit(s, dedup):
                continue
            child = [rows[i] | (1 << k) if (s >> i) & 1 else rows[i] for i in range(k)]
            child.append(s)
            pos, gens = canon_rows(k + 1, child)
            cuts = _cut_mask(k + 1, child)
            for i in range(k, -1, -1):
                if not (cuts >> pos[i]) & 1:
                    d_vertex = pos[i]
                    break
            if d_vertex != k:
                roots = _orbit_roots(k + 1, gens)
                if roots[k] != roots[d_vertex]:
                    continue
            if last:
                g = _emit(n, child, pos, filt)
                if g is not None:
                    yield g
            else:
                if k + 1 == split:
                    mine = counter % part.total_shards == part.shard_index
                    counter += 1
                    if not mine:
                        continue
                yield from rec(child, k + 1, m + s.bit_count(), gens)

    yield from rec([0], 1, 0, [])


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n with parts <= largest, descending parts."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _disconnected_stream(filt: EnumFilter) -> Iterator[Graph]:
    """All graphs (not only connected): multisets of connected components."""
    from .canon import canonical_permutation

    n = filt.order
    pools: dict[int, list[Graph]] = {}
    for j in range(1, n + 1):
        sub = EnumFilter(order=j, require_even_degrees=filt.require_even_degrees)
        pools[j] = list(_connected_stream(sub, EnumPartition()))
    for shape in _partitions(n, n):
        groups = []
        for size in sorted(set(shape), reverse=True):
            count = shape.count(size)
            groups.append(
                list(combinations_with_replacement(range(len(pools[size])), count))
            )
        sizes = sorted(set(shape), reverse=True)

        def assemble(gi: int, chosen: list[Graph]) -> Iterator[Graph]:
            if gi == len(sizes):
                edges = []
                base = 0
                for comp in chosen:
                    edges.extend((u + base, v + base) for u, v in comp.edges())
                    base += comp.n
                g = build_graph(n, edges)
                if len(chosen) == 1:
                    yield g
                    return
                out = _emit_union(g, filt)
                if out is not None:
                    yield out
            else:
                for combo in groups[gi]:
                    picked = [pools[sizes[gi]][i] for i in combo]
                    yield from assemble(gi + 1, chosen + picked)

        def _emit_union(g: Graph, f: EnumFilter) -> Optional[Graph]:
            if f.size_range is not None and not (
                f.size_range[0] <= g.m <= f.size_range[1]
            ):
                return None
            if f.require_two_connected or f.require_two_edge_connected:
                return None
            if f.diameter_max is not None:
                return None
            return relabel(g, canonical_permutation(g))

        if len(shape) == 1:
            for g in pools[n]:
                out = _emit(n, g.adjacency_masks(), tuple(range(n)), filt)
                if out is not None:
                    yield out
        else:
            yield from assemble(0, [])


def enumerate_graphs(
    filt: EnumFilter, partition: Optional[EnumPartition] = None
) -> Iterator[Graph]:
    """Stream one canonical representative per isomorphism class.

    Deterministic for a fixed (filter, partition); shards of a partition are
    disjoint and their union equals the unpartitioned run.
    """
    filt.validate()
    part = partition or EnumPartition()
    part.validate()
    if filt.require_connected:
        yield from _connected_stream(filt, part)
    else:
        if part.total_shards != 1:
            raise ValueError("sharding is only supported for connected runs")
        yield from _disconnected_stream(filt)


def count_graphs(
    filt: EnumFilter, partition: Optional[EnumPartition] = None
) -> int:
    return sum(1 for _ in enumerate_graphs(filt, partition))


@dataclass(frozen=True)
class RankEntry:
    """One ranked graph: Wiener value and canonical graph6."""

    wiener: int
    graph6: str


def extremal_scan(
    filt: EnumFilter,
    objective: str = "max_wiener",
    k: int = 1,
    partition: Optional[EnumPartition] = None,
) -> list[RankEntry]:
    """Top-k (or bottom-k) Wiener values with every attaining graph.

    Returns entries grouped by value in objective order, ties sorted by
    canonical graph6 bytes.
    """
    from .graphs import graph6_encode, wiener

    if objective not in ("max_wiener", "min_wiener"):
        raise ValueError(f"unknown objective {objective!r}")
    if k < 1:
        raise ValueError("k must be positive")
    sign = -1 if objective == "max_wiener" else 1
    kept: dict[int, list[str]] = {}
    for g in enumerate_graphs(filt, partition):
        w = wiener(g)
        if w not in kept:
            if len(kept) == k:
                worst = max(kept, key=lambda v: sign * v)
                if sign * w >= sign * worst:
                    continue
                del kept[worst]
            kept[w] = []
        kept[w].append(graph6_encode(g))
    out: list[RankEntry] = []
    for w in sorted(kept, key=lambda v: sign * v):
        for g6 in sorted(kept[w]):
            out.append(RankEntry(w, g6))
    return out
