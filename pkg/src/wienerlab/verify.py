"""Claim-by-claim verification harness.

Each check answers one question about Wiener indices of small Eulerian (or
2-connected / 2-edge-connected) graphs and returns a ClaimReport with a
machine-readable verdict.  Exhaustive checks run inside a fixed envelope:
full Eulerian enumeration up to order 10, unrestricted enumeration up to
order 8; beyond that the harness reports skipped_out_of_envelope rather
than truncating silently.  Claim ids are short protocol codes shared with
the command line (T1, T2, L2, L3, C1, C2, T3a, T3b, T3c, P1, P2, P3, Q1,
FIG1, GAP).
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Optional, Sequence

from .canon import canonical_form
from .families import (
    RUNNER_UP_ORDERS,
    complete,
    cocktail_party,
    cycle,
    edge_glued_cycles,
    runner_up_catalog,
    sparse_diameter_two,
    vertex_glued_cycles,
)
from .formulas import (
    connectivity_bounds,
    min_size_diameter_two,
    min_wiener_eulerian,
    second_place_gap_numerator,
    wiener_cycle,
    wiener_edge_glued,
    wiener_lower_bound,
    wiener_vertex_glued_triangle,
)
from .generate import EnumFilter, EnumPartition, enumerate_graphs
from .graphs import (
    Graph,
    build_graph,
    diameter,
    graph6_decode,
    graph6_encode,
    is_eulerian,
    is_even_graph,
    is_two_connected,
    is_two_edge_connected,
    sigma_set,
    sigma_vertex,
    wiener,
)

CLAIM_IDS = (
    "T1", "T2", "L2", "L3", "C1", "C2",
    "T3a", "T3b", "T3c", "P1", "P2", "P3", "Q1", "FIG1", "GAP",
)

VERIFIED = "verified"
VIOLATED = "violated"
SKIPPED = "skipped_out_of_envelope"

EULERIAN_ENVELOPE = 10   # full census of connected even-degree graphs
GENERAL_ENVELOPE = 8     # full census of all connected graphs
CHAIN_ENVELOPE = 300     # per-graph BFS on glued-cycle families
TRIANGLE_ENVELOPE = 64   # all triangle placements on a cycle, up to rotation


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    params: tuple[tuple[str, object], ...]
    status: str
    witnesses: tuple[str, ...]
    elapsed: float
    notes: str

    def param_dict(self) -> dict:
        return dict(self.params)


def _report(
    claim_id: str,
    params: dict,
    status: str,
    witnesses: Sequence[str],
    notes: str,
    t0: float,
) -> ClaimReport:
    return ClaimReport(
        claim_id=claim_id,
        params=tuple(sorted(params.items())),
        status=status,
        witnesses=tuple(witnesses),
        elapsed=time.perf_counter() - t0,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Cached censuses


_DEFAULT_JOBS = 1
_CENSUS_SHARDS = 8

_eulerian_cache: dict[int, tuple[tuple[int, int, str], ...]] = {}
_connected_cache: dict[int, tuple[str, ...]] = {}


def set_default_jobs(jobs: int) -> None:
    global _DEFAULT_JOBS
    if jobs < 1:
        raise ValueError("jobs must be positive")
    _DEFAULT_JOBS = jobs


def _eulerian_shard(args: tuple[int, int]) -> list[tuple[int, int, str]]:
    n, index = args
    filt = EnumFilter(order=n, require_even_degrees=True)
    part = EnumPartition(total_shards=_CENSUS_SHARDS, shard_index=index)
    return [(wiener(g), g.m, graph6_encode(g)) for g in enumerate_graphs(filt, part)]


def eulerian_census(n: int, jobs: Optional[int] = None) -> tuple[tuple[int, int, str], ...]:
    """All connected even-degree graphs of order n as (W, m, graph6) rows.

    Rows are canonically encoded and sorted by descending W, then size, then
    encoding.  Results are cached per order; jobs > 1 splits the generation
    tree across worker processes.
    """
    if n in _eulerian_cache:
        return _eulerian_cache[n]
    if not 3 <= n <= EULERIAN_ENVELOPE:
        raise ValueError(f"census supported for 3 <= n <= {EULERIAN_ENVELOPE}")
    jobs = jobs or _DEFAULT_JOBS
    if jobs > 1 and n >= 9:
        with Pool(min(jobs, _CENSUS_SHARDS)) as pool:
            parts = pool.map(_eulerian_shard, [(n, i) for i in range(_CENSUS_SHARDS)])
        rows = [row for part in parts for row in part]
    else:
        filt = EnumFilter(order=n, require_even_degrees=True)
        rows = [(wiener(g), g.m, graph6_encode(g)) for g in enumerate_graphs(filt)]
    rows.sort(key=lambda r: (-r[0], r[1], r[2]))
    frozen = tuple(rows)
    _eulerian_cache[n] = frozen
    return frozen


def connected_census(n: int) -> tuple[str, ...]:
    """Canonical graph6 of every connected graph of order n (no parity filter)."""
    if n in _connected_cache:
        return _connected_cache[n]
    if not 1 <= n <= GENERAL_ENVELOPE:
        raise ValueError(f"census supported for 1 <= n <= {GENERAL_ENVELOPE}")
    filt = EnumFilter(order=n, require_even_degrees=False)
    frozen = tuple(sorted(graph6_encode(g) for g in enumerate_graphs(filt)))
    _connected_cache[n] = frozen
    return frozen


def _second_place(n: int, jobs: Optional[int]) -> tuple[int, tuple[str, ...]]:
    """Largest Wiener value among non-cycle Eulerian classes, with its graphs."""
    rows = eulerian_census(n, jobs)
    cyc = canonical_form(cycle(n))
    best = -1
    graphs: list[str] = []
    for w, _, g6 in rows:
        if g6 == cyc:
            continue
        if w > best:
            best, graphs = w, [g6]
        elif w == best:
            graphs.append(g6)
    return best, tuple(sorted(graphs))


# ---------------------------------------------------------------------------
# Extremal claims


def verify_T1(n: int, jobs: Optional[int] = None) -> ClaimReport:
    """The cycle uniquely maximizes W among connected even-degree graphs."""
    t0 = time.perf_counter()
    if n < 3:
        raise ValueError("order must be at least 3")
    params = {"n": n}
    if n > EULERIAN_ENVELOPE:
        return _report("T1", params, SKIPPED, (),
                       f"exhaustive check requires n <= {EULERIAN_ENVELOPE}", t0)
    rows = eulerian_census(n, jobs)
    w_max = rows[0][0]
    top = tuple(sorted(g6 for w, _, g6 in rows if w == w_max))
    expected = (canonical_form(cycle(n)),)
    if top == expected and w_max == wiener_cycle(n):
        return _report(
            "T1", params, VERIFIED, expected,
            f"max W = {w_max} over {len(rows)} classes; unique maximizer is the cycle",
            t0,
        )
    return _report(
        "T1", params, VIOLATED, top,
        f"maximizers at W = {w_max} are {list(top)}, expected the cycle alone "
        f"at {wiener_cycle(n)}",
        t0,
    )


def verify_T2(n: int, jobs: Optional[int] = None) -> ClaimReport:
    """Second-largest W among connected even-degree graphs.

    Away from the sporadic orders the runner-up should be exactly the
    triangle-glued cycle; at orders 7 and 9 the cataloged cycle chain should
    stand alone above it; at orders 8 and 10 the claim is a two-way tie
    between the triangle-glued cycle and the cataloged chain.
    """
    t0 = time.perf_counter()
    if n < 5:
        raise ValueError("order must be at least 5")
    params = {"n": n}
    if n > EULERIAN_ENVELOPE:
        return _report("T2", params, SKIPPED, (),
                       f"exhaustive check requires n <= {EULERIAN_ENVELOPE}; "
                       "see FIG1, L3 and GAP for the large-n evidence trail", t0)
    second, actual = _second_place(n, jobs)
    glued = canonical_form(vertex_glued_cycles(n, 3))
    if n in RUNNER_UP_ORDERS:
        chain = tuple(sorted(canonical_form(g) for g in runner_up_catalog(n)))
        if n in (7, 9):
            expected = chain
            description = "the cataloged chain alone, above the triangle-glued cycle"
        else:
            expected = tuple(sorted(chain + (glued,)))
            description = "a two-way tie of the triangle-glued cycle and the chain"
    else:
        expected = (glued,)
        description = "the triangle-glued cycle alone"
    if actual == expected:
        return _report(
            "T2", params, VERIFIED, expected,
            f"second-largest W = {second}; runner-up set is {description}",
            t0,
        )
    w_glued = wiener_vertex_glued_triangle(n)
    return _report(
        "T2", params, VIOLATED, actual,
        f"runner-up set at W = {second} is {list(actual)} but expected "
        f"{description} ({list(expected)}); triangle-glued cycle has W = {w_glued}",
        t0,
    )


def verify_FIG1(n: int, jobs: Optional[int] = None) -> ClaimReport:
    """Cataloged runner-up graphs: structure, and their claimed Wiener values.

    Within the enumeration envelope the catalog must sit inside the true
    runner-up set; at orders 11 and 13 the check is the claimed equality
    W(chain) = W(triangle-glued cycle) by direct computation.
    """
    t0 = time.perf_counter()
    params = {"n": n}
    catalog = runner_up_catalog(n)  # raises for unsupported orders
    cyc = canonical_form(cycle(n))
    forms = [canonical_form(g) for g in catalog]
    problems: list[str] = []
    for g, form in zip(catalog, forms):
        if g.n != n:
            problems.append(f"catalog graph has order {g.n}")
        if not is_eulerian(g):
            problems.append(f"{form} is not Eulerian")
        if form == cyc:
            problems.append("catalog graph is the cycle")
    if len(set(forms)) != len(forms):
        problems.append("catalog contains isomorphic duplicates")
    if problems:
        return _report("FIG1", params, VIOLATED, tuple(sorted(forms)),
                       "; ".join(problems), t0)
    if n <= EULERIAN_ENVELOPE:
        second, actual = _second_place(n, jobs)
        missing = [f for f in forms if f not in actual]
        values = [wiener(g) for g in catalog]
        if missing or any(v != second for v in values):
            return _report(
                "FIG1", params, VIOLATED, tuple(sorted(forms)),
                f"catalog values {values} vs enumerated second place {second}; "
                f"absent from runner-up set: {missing}",
                t0,
            )
        glued_w = wiener_vertex_glued_triangle(n)
        tie = "ties" if glued_w == second else "strictly exceeds"
        return _report(
            "FIG1", params, VERIFIED, tuple(sorted(forms)),
            f"catalog realizes the enumerated second place W = {second}; "
            f"it {tie} the triangle-glued cycle at {glued_w}",
            t0,
        )
    claimed = wiener_vertex_glued_triangle(n)
    values = [wiener(g) for g in catalog]
    if all(v == claimed for v in values):
        return _report(
            "FIG1", params, VERIFIED, tuple(sorted(forms)),
            f"W(catalog) = {claimed} = W(triangle-glued cycle), as claimed",
            t0,
        )
    return _report(
        "FIG1", params, VIOLATED, tuple(sorted(forms)),
        f"claimed tie fails: W(catalog) = {values} but the triangle-glued "
        f"cycle has W = {claimed}",
        t0,
    )


def _chain_order(n: int) -> list[int]:
    """Claimed strictly-decreasing order of W over glued-cycle split sizes."""
    amax = (n + 1) // 2
    if n % 2 == 0:
        return list(range(3, amax + 1))
    if n == 7:
        return [4, 3]
    if n == 9:
        return [4, 3, 5]
    k = n // 4
    if n % 4 == 3:
        return list(range(3, 2 * k + 1)) + [2 * k + 2, 2 * k + 1]
    return list(range(3, 2 * k - 1)) + [2 * k, 2 * k - 1, 2 * k + 1]


def verify_L2(n: int) -> ClaimReport:
    """Strict ordering of W over the one-cutvertex glued-cycle family."""
    t0 = time.perf_counter()
    if n < 6:
        raise ValueError("order must be at least 6")
    params = {"n": n}
    if n > CHAIN_ENVELOPE:
        return _report("L2", params, SKIPPED, (),
                       f"BFS sweep supported for n <= {CHAIN_ENVELOPE}", t0)
    order = _chain_order(n)
    values = {a: wiener(vertex_glued_cycles(n, a)) for a in order}
    for a, b in zip(order, order[1:]):
        if not values[a] > values[b]:
            witnesses = tuple(sorted(
                canonical_form(vertex_glued_cycles(n, x)) for x in (a, b)
            ))
            return _report(
                "L2", params, VIOLATED, witnesses,
                f"expected W at split {a} to exceed split {b}, got "
                f"{values[a]} vs {values[b]}",
                t0,
            )
    chain = " > ".join(f"{values[a]}(a={a})" for a in order)
    return _report("L2", params, VERIFIED, (), f"chain holds: {chain}", t0)


def verify_L3(n_lo: int, n_hi: int) -> ClaimReport:
    """Edge-glued pairs never beat the triangle-glued cycle; equality at {4, n-2}."""
    t0 = time.perf_counter()
    if not 26 <= n_lo <= n_hi <= 5000:
        raise ValueError("range must lie within [26, 5000]")
    params = {"n_lo": n_lo, "n_hi": n_hi}
    for n in range(n_lo, n_hi + 1):
        cap = wiener_vertex_glued_triangle(n)
        equal = []
        for a in range(4, n - 1):
            w = wiener_edge_glued(n, a)
            if w > cap:
                witness = canonical_form(edge_glued_cycles(n, a))
                return _report(
                    "L3", params, VIOLATED, (witness,),
                    f"W = {w} at (n={n}, a={a}) exceeds the cap {cap}",
                    t0,
                )
            if w == cap:
                equal.append(a)
        if equal != [4, n - 2]:
            witnesses = tuple(sorted(
                canonical_form(edge_glued_cycles(n, a)) for a in equal
            )) or (canonical_form(edge_glued_cycles(n, 4)),)
            return _report(
                "L3", params, VIOLATED, witnesses,
                f"equality set at n={n} is {equal}, expected [4, {n - 2}]",
                t0,
            )
    return _report(
        "L3", params, VERIFIED, (),
        f"swept n in [{n_lo}, {n_hi}], all splits in [4, n-2]; "
        "equality exactly at the two extreme splits",
        t0,
    )


# ---------------------------------------------------------------------------
# Distance-sum bounds over enumerated graphs


def verify_C1(n: int) -> ClaimReport:
    """Pair distance sums in 2-connected graphs never beat the cycle's adjacent pair."""
    t0 = time.perf_counter()
    if n < 3:
        raise ValueError("order must be at least 3")
    params = {"n": n}
    if n > GENERAL_ENVELOPE:
        return _report("C1", params, SKIPPED, (),
                       f"exhaustive check requires n <= {GENERAL_ENVELOPE}", t0)
    bound = sigma_set(cycle(n), {0, 1})
    checked = 0
    for g6 in connected_census(n):
        g = graph6_decode(g6)
        if not is_two_connected(g):
            continue
        checked += 1
        for u in range(n):
            for w in range(u + 1, n):
                s = sigma_set(g, {u, w})
                if s > bound:
                    return _report(
                        "C1", params, VIOLATED, (g6,),
                        f"pair ({u},{w}) has distance sum {s} > {bound}",
                        t0,
                    )
    return _report(
        "C1", params, VERIFIED, (),
        f"all pairs in {checked} two-connected graphs stay at or below the "
        f"cycle's adjacent-pair value {bound}",
        t0,
    )


def verify_C2(n: int) -> ClaimReport:
    """Adding any off-cycle triangle of chords to C_n lands strictly below
    the triangle-glued cycle's Wiener value."""
    t0 = time.perf_counter()
    if n < 3:
        raise ValueError("order must be at least 3")
    params = {"n": n}
    if n > TRIANGLE_ENVELOPE:
        return _report("C2", params, SKIPPED, (),
                       f"placement sweep supported for n <= {TRIANGLE_ENVELOPE}", t0)
    ring = [(i, (i + 1) % n) for i in range(n)]
    placements = 0
    for j in range(2, n - 3):
        for k in range(j + 2, n - 1):
            placements += 1
            g = build_graph(n, ring + [(0, j), (j, k), (0, k)])
            w = wiener(g)
            cap = wiener_vertex_glued_triangle(n)
            if not w < cap:
                return _report(
                    "C2", params, VIOLATED, (canonical_form(g),),
                    f"triangle at positions (0,{j},{k}) gives W = {w}, "
                    f"not below {cap}",
                    t0,
                )
    if placements == 0:
        return _report("C2", params, VERIFIED, (),
                       "no off-cycle triangle placement exists; vacuously true", t0)
    return _report(
        "C2", params, VERIFIED, (),
        f"all {placements} triangle placements (up to rotation) stay below "
        f"W = {wiener_vertex_glued_triangle(n)}",
        t0,
    )


def verify_T3a(n: int) -> ClaimReport:
    """2-edge-connected graphs: W at most the cycle's, equality only for the cycle."""
    t0 = time.perf_counter()
    if n < 3:
        raise ValueError("order must be at least 3")
    params = {"n": n}
    if n > GENERAL_ENVELOPE:
        return _report("T3a", params, SKIPPED, (),
                       f"exhaustive check requires n <= {GENERAL_ENVELOPE}", t0)
    cap = connectivity_bounds(n)["max_wiener_two_edge_connected"]
    cyc = canonical_form(cycle(n))
    attainers = []
    checked = 0
    for g6 in connected_census(n):
        g = graph6_decode(g6)
        if not is_two_edge_connected(g):
            continue
        checked += 1
        w = wiener(g)
        if w > cap:
            return _report("T3a", params, VIOLATED, (g6,),
                           f"W = {w} exceeds the cap {cap}", t0)
        if w == cap:
            attainers.append(g6)
    if attainers != [cyc]:
        return _report(
            "T3a", params, VIOLATED, tuple(sorted(attainers)) or (cyc,),
            f"graphs attaining W = {cap}: {attainers}, expected the cycle alone",
            t0,
        )
    return _report(
        "T3a", params, VERIFIED, (cyc,),
        f"{checked} two-edge-connected graphs; W <= {cap} with the cycle the "
        "sole equality case",
        t0,
    )


def verify_T3b(n: int) -> ClaimReport:
    """2-connected graphs: every vertex distance sum at most floor(n^2/4)."""
    t0 = time.perf_counter()
    if n < 3:
        raise ValueError("order must be at least 3")
    params = {"n": n}
    if n > GENERAL_ENVELOPE:
        return _report("T3b", params, SKIPPED, (),
                       f"exhaustive check requires n <= {GENERAL_ENVELOPE}", t0)
    cap = connectivity_bounds(n)["max_sigma_two_connected"]
    cycle_sigma = sigma_vertex(cycle(n), 0)
    if cycle_sigma != cap:
        return _report(
            "T3b", params, VIOLATED, (canonical_form(cycle(n)),),
            f"cycle vertex distance sum {cycle_sigma} misses the cap {cap}",
            t0,
        )
    checked = 0
    for g6 in connected_census(n):
        g = graph6_decode(g6)
        if not is_two_connected(g):
            continue
        checked += 1
        for v in range(n):
            s = sigma_vertex(g, v)
            if s > cap:
                return _report(
                    "T3b", params, VIOLATED, (g6,),
                    f"vertex {v} has distance sum {s} > {cap}",
                    t0,
                )
    return _report(
        "T3b", params, VERIFIED, (),
        f"all vertices of {checked} two-connected graphs stay at or below "
        f"{cap}; the cycle attains it",
        t0,
    )


def verify_T3c(n: int) -> ClaimReport:
    """2-edge-connected graphs: every vertex distance sum at most n(n-1)/3."""
    t0 = time.perf_counter()
    if n < 3:
        raise ValueError("order must be at least 3")
    params = {"n": n}
    if n > GENERAL_ENVELOPE:
        return _report("T3c", params, SKIPPED, (),
                       f"exhaustive check requires n <= {GENERAL_ENVELOPE}", t0)
    cap = connectivity_bounds(n)["max_sigma_two_edge_connected"]
    checked = 0
    for g6 in connected_census(n):
        g = graph6_decode(g6)
        if not is_two_edge_connected(g):
            continue
        checked += 1
        for v in range(n):
            s = sigma_vertex(g, v)
            if s > cap:
                return _report(
                    "T3c", params, VIOLATED, (g6,),
                    f"vertex {v} has distance sum {s} > {cap}",
                    t0,
                )
    return _report(
        "T3c", params, VERIFIED, (),
        f"all vertices of {checked} two-edge-connected graphs stay at or "
        f"below {cap}",
        t0,
    )


# ---------------------------------------------------------------------------
# Minimum-side claims


def verify_P1(n: int, jobs: Optional[int] = None) -> ClaimReport:
    """Minimum W among connected even-degree graphs, with its unique attainer."""
    t0 = time.perf_counter()
    if n < 3:
        raise ValueError("order must be at least 3")
    params = {"n": n}
    if n > EULERIAN_ENVELOPE:
        return _report("P1", params, SKIPPED, (),
                       f"exhaustive check requires n <= {EULERIAN_ENVELOPE}", t0)
    rows = eulerian_census(n, jobs)
    w_min = min(w for w, _, _ in rows)
    argmin = tuple(sorted(g6 for w, _, g6 in rows if w == w_min))
    extremal = complete(n) if n % 2 else cocktail_party(n)
    expected = (canonical_form(extremal),)
    name = "the complete graph" if n % 2 else "the complete graph minus a perfect matching"
    if w_min == min_wiener_eulerian(n) and argmin == expected:
        return _report(
            "P1", params, VERIFIED, expected,
            f"min W = {w_min} over {len(rows)} classes; unique minimizer is {name}",
            t0,
        )
    return _report(
        "P1", params, VIOLATED, argmin,
        f"min W = {w_min} attained by {list(argmin)}, expected "
        f"{min_wiener_eulerian(n)} uniquely at {name}",
        t0,
    )


def verify_P2(n: int) -> ClaimReport:
    """W >= n(n-1) - m for connected graphs, equality exactly at diameter <= 2."""
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError("order must be positive")
    params = {"n": n}
    if n > GENERAL_ENVELOPE:
        return _report("P2", params, SKIPPED, (),
                       f"exhaustive check requires n <= {GENERAL_ENVELOPE}", t0)
    checked = 0
    for g6 in connected_census(n):
        g = graph6_decode(g6)
        checked += 1
        w = wiener(g)
        floor = wiener_lower_bound(n, g.m)
        d = diameter(g)
        if w < floor:
            return _report("P2", params, VIOLATED, (g6,),
                           f"W = {w} below the floor {floor}", t0)
        if (w == floor) != (d <= 2):
            return _report(
                "P2", params, VIOLATED, (g6,),
                f"equality/diameter mismatch: W = {w}, floor = {floor}, "
                f"diameter = {d}",
                t0,
            )
    return _report(
        "P2", params, VERIFIED, (),
        f"bound and equality characterization hold on all {checked} "
        "connected graphs",
        t0,
    )


def verify_P3(n: int, jobs: Optional[int] = None) -> ClaimReport:
    """Minimum size of diameter-2 connected even-degree graphs.

    The sharpness claim starts at order 9; below that the observed minimum
    is reported as data with no claim attached.
    """
    t0 = time.perf_counter()
    if n < 3:
        raise ValueError("order must be at least 3")
    params = {"n": n}
    if n > EULERIAN_ENVELOPE:
        return _report("P3", params, SKIPPED, (),
                       f"exhaustive check requires n <= {EULERIAN_ENVELOPE}", t0)
    rows = sorted(eulerian_census(n, jobs), key=lambda r: (r[1], r[2]))
    best_m: Optional[int] = None
    attainers: list[str] = []
    for _, m, g6 in rows:
        if best_m is not None and m > best_m:
            break
        d = diameter(graph6_decode(g6))
        if d is not None and d <= 2:
            best_m = m
            attainers.append(g6)
    if best_m is None:
        return _report("P3", params, VIOLATED, (),
                       "no diameter-2 class found at this order", t0)
    if n < 9:
        return _report(
            "P3", params, VERIFIED, tuple(sorted(attainers)),
            f"no sharpness claim at this order; observed minimum size {best_m} "
            f"with {len(attainers)} attaining class(es) — new data",
            t0,
        )
    target = min_size_diameter_two(n)
    built = sparse_diameter_two(n)
    built_form = canonical_form(built)
    if best_m == target and built.m == target and built_form in attainers:
        return _report(
            "P3", params, VERIFIED, tuple(sorted(attainers)),
            f"minimum size is {target}, attained by {len(attainers)} class(es) "
            "including the stated construction",
            t0,
        )
    return _report(
        "P3", params, VIOLATED, tuple(sorted(attainers)) or (built_form,),
        f"observed minimum size {best_m} vs formula {target}; construction "
        f"size {built.m}, present: {built_form in attainers}",
        t0,
    )


# ---------------------------------------------------------------------------
# Minimum-Wiener table (open-question data) and its consistency check


@dataclass(frozen=True)
class MinTableRow:
    n: int
    m: int
    min_wiener: Optional[int]
    witnesses: tuple[str, ...]


def min_wiener_table(
    n: int, m_max: Optional[int] = None, jobs: Optional[int] = None
) -> tuple[MinTableRow, ...]:
    """Minimum W over connected even-degree graphs of order n, per size.

    Sizes run from n-1 up to m_max, default one below the diameter-2 size
    threshold (the regime the open question asks about).  Sizes with no
    graph get an empty row.
    """
    if not 3 <= n <= EULERIAN_ENVELOPE:
        raise ValueError(f"table supported for 3 <= n <= {EULERIAN_ENVELOPE}")
    threshold = 3 * (n - 1) // 2 if n % 2 else 2 * n - 5
    if m_max is None:
        m_max = threshold - 1
    if not n - 1 <= m_max < threshold:
        raise ValueError(
            f"m_max must lie in [{n - 1}, {threshold - 1}] "
            "(strictly below the diameter-2 size threshold)"
        )
    rows = eulerian_census(n, jobs)
    out: list[MinTableRow] = []
    for m in range(n - 1, m_max + 1):
        group = [(w, g6) for w, mm, g6 in rows if mm == m]
        if not group:
            out.append(MinTableRow(n, m, None, ()))
            continue
        w_min = min(w for w, _ in group)
        wits = tuple(sorted(g6 for w, g6 in group if w == w_min))
        out.append(MinTableRow(n, m, w_min, wits))
    return tuple(out)


def verify_Q1(n: int, jobs: Optional[int] = None) -> ClaimReport:
    """Open-question data: per-size minimum W below the diameter-2 threshold.

    Consistency requirements: witnesses re-validate, and every minimum sits
    strictly above the diameter-2 floor n(n-1) - m (no diameter-2 graph
    exists at these sizes).
    """
    t0 = time.perf_counter()
    if n < 9:
        raise ValueError("the question concerns orders 9 and up")
    params = {"n": n}
    if n > EULERIAN_ENVELOPE:
        return _report("Q1", params, SKIPPED, (),
                       f"exhaustive check requires n <= {EULERIAN_ENVELOPE}", t0)
    table = min_wiener_table(n, jobs=jobs)
    summaries = []
    for row in table:
        if row.min_wiener is None:
            if row.m >= n:
                return _report("Q1", params, VIOLATED,
                               (canonical_form(cycle(n)),),
                               f"no graph recorded at size {row.m}", t0)
            summaries.append(f"m={row.m}: none")
            continue
        floor = wiener_lower_bound(n, row.m)
        if row.min_wiener <= floor:
            return _report(
                "Q1", params, VIOLATED, row.witnesses,
                f"minimum {row.min_wiener} at size {row.m} does not exceed "
                f"the diameter-2 floor {floor}",
                t0,
            )
        for g6 in row.witnesses:
            g = graph6_decode(g6)
            if (g.n, g.m) != (n, row.m) or not is_even_graph(g) \
                    or wiener(g) != row.min_wiener:
                return _report("Q1", params, VIOLATED, (g6,),
                               f"witness fails re-validation at size {row.m}", t0)
        summaries.append(
            f"m={row.m}: min W = {row.min_wiener} ({len(row.witnesses)} witness(es))"
        )
    return _report(
        "Q1", params, VERIFIED, (),
        "table consistent, minima strictly above the diameter-2 floor; "
        + "; ".join(summaries),
        t0,
    )


# ---------------------------------------------------------------------------
# Gap polynomial


def verify_GAP(n_lo: int = 26, n_hi: int = 500) -> ClaimReport:
    """Second-place gap polynomial: positive, nondecreasing in the split,
    and matching the quoted quadratic at the triangle split."""
    t0 = time.perf_counter()
    if not 26 <= n_lo <= n_hi <= 5000:
        raise ValueError("range must lie within [26, 5000]")
    params = {"n_lo": n_lo, "n_hi": n_hi}
    for n in range(n_lo, n_hi + 1):
        prev: Optional[int] = None
        for a in range(3, (n + 1) // 2 + 1):
            v = second_place_gap_numerator(n, a)
            if v <= 0:
                return _report("GAP", params, VIOLATED,
                               (canonical_form(vertex_glued_cycles(n, a)),),
                               f"gap numerator {v} at (n={n}, a={a}) is not positive",
                               t0)
            if prev is not None and v < prev:
                return _report("GAP", params, VIOLATED,
                               (canonical_form(vertex_glued_cycles(n, a)),),
                               f"gap numerator decreases at (n={n}, a={a}): "
                               f"{prev} -> {v}", t0)
            prev = v
    for i in range(100):
        n = n_lo + i
        want = 2 * n * n - 37 * n + 99
        got = second_place_gap_numerator(n, 3)
        if got != want:
            return _report("GAP", params, VIOLATED,
                           (canonical_form(vertex_glued_cycles(n, 3)),),
                           f"triangle-split numerator {got} != {want} at n={n}", t0)
    return _report(
        "GAP", params, VERIFIED, (),
        f"positive and nondecreasing on n in [{n_lo}, {n_hi}]; quadratic "
        "identity confirmed at 100 points",
        t0,
    )


# ---------------------------------------------------------------------------
# Dispatch


_NEEDS_RANGE = {"L3", "GAP"}

CLAIM_VERIFIERS: dict[str, Callable[..., ClaimReport]] = {
    "T1": verify_T1,
    "T2": verify_T2,
    "L2": verify_L2,
    "L3": verify_L3,
    "C1": verify_C1,
    "C2": verify_C2,
    "T3a": verify_T3a,
    "T3b": verify_T3b,
    "T3c": verify_T3c,
    "P1": verify_P1,
    "P2": verify_P2,
    "P3": verify_P3,
    "Q1": verify_Q1,
    "FIG1": verify_FIG1,
    "GAP": verify_GAP,
}


def verify_claim(
    claim_id: str,
    n: Optional[int] = None,
    n_range: Optional[tuple[int, int]] = None,
    jobs: Optional[int] = None,
) -> ClaimReport:
    """Run one claim check by protocol id with uniform parameter handling."""
    if claim_id not in CLAIM_VERIFIERS:
        raise ValueError(f"unknown claim id {claim_id!r}; known: {', '.join(CLAIM_IDS)}")
    fn = CLAIM_VERIFIERS[claim_id]
    if claim_id in _NEEDS_RANGE:
        if claim_id == "GAP" and n_range is None:
            return fn()
        if n_range is None:
            raise ValueError(f"claim {claim_id} requires a range of orders")
        return fn(n_range[0], n_range[1])
    if n is None:
        raise ValueError(f"claim {claim_id} requires an order")
    if claim_id in ("T1", "T2", "P1", "P3", "Q1", "FIG1"):
        return fn(n, jobs=jobs)
    return fn(n)
