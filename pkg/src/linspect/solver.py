"""Exact linear intersection numbers.

``v(G)`` is the fewest cliques ``C_1..C_r`` (singletons allowed) such that
every edge lies in exactly one ``C_i`` and every vertex in at least two.
``vbar(G)`` drops the vertex condition and uses non-trivial cliques only.

The search branches on the lexicographically smallest uncovered edge; the
candidates are the cliques through that edge whose edges are all still
uncovered (so chosen cliques pairwise share at most one vertex).  Once every
edge is covered the cover is completed with the forced singletons.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cliques import (
    _cliques_masks,
    clique_number,
    independence_number,
    k_values,
    maximum_weight_independent_set,
    minimum_coloring,
)
from .graph import Graph, bits, degree_profile, from_edge_list, to_mask
from .hypergraph import LinearHypergraph, from_clique_cover, intersection_graph, validate

FULL = "full"
REDUCED = "reduced"


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass
class SolveStats:
    nodes: int = 0
    prunes: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0


class BudgetExceeded(RuntimeError):
    """Search stopped early; ``lower <= value <= upper`` is all that is proved."""

    def __init__(self, lower: int, upper: int, incumbent: "CliqueCover", stats: SolveStats):
        self.lower = lower
        self.upper = upper
        self.incumbent = incumbent
        self.stats = stats
        super().__init__(f"budget exceeded; value lies in [{lower}, {upper}]")


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[frozenset[int], ...]
    mode: str = FULL

    def __len__(self) -> int:
        return len(self.cliques)

    def to_json(self) -> list[list[int]]:
        return [sorted(c) for c in self.cliques]


@dataclass(frozen=True)
class CoverVerdict:
    valid: bool
    size: int
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def verify_cover(g: Graph, cover: CliqueCover) -> CoverVerdict:
    """Check the cover conditions directly; the verdict names the first failure."""
    size = len(cover.cliques)
    if cover.mode not in (FULL, REDUCED):
        return CoverVerdict(False, size, f"unknown mode {cover.mode!r}")
    hits = [0] * g.n
    edge_hits: dict[tuple[int, int], int] = {}
    for i, c in enumerate(cover.cliques):
        members = sorted(c)
        if not members:
            return CoverVerdict(False, size, f"clique {i} is empty")
        if any(not (isinstance(x, int) and 0 <= x < g.n) for x in members):
            return CoverVerdict(False, size, f"clique {i} has a vertex out of range")
        if cover.mode == REDUCED and len(members) < 2:
            return CoverVerdict(False, size, f"clique {i} is trivial in a reduced cover")
        for j, a in enumerate(members):
            hits[a] += 1
            for b in members[j + 1:]:
                if not g.adj[a] >> b & 1:
                    return CoverVerdict(False, size, f"clique {i} is not a clique: {a},{b} not adjacent")
                edge_hits[(a, b)] = edge_hits.get((a, b), 0) + 1
    for e in g.edges:
        k = edge_hits.get(e, 0)
        if k != 1:
            return CoverVerdict(False, size, f"edge {e} covered {k} times")
    if cover.mode == FULL:
        for x in g.vertices:
            if hits[x] < 2:
                return CoverVerdict(False, size, f"vertex {x} lies in {hits[x]} clique(s)")
    return CoverVerdict(True, size)


# -- bounds ------------------------------------------------------------------

LOWER_BOUNDS = ("omega", "sqrt_bound", "seymour", "two_alpha", "k_independent", "flag", "flag_weak")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b) if b else 0


def sqrt_bound(n: int) -> int:
    """Smallest ``t >= 0`` with ``t(t-1)/2 >= n``; equals
    ``ceil((1 + sqrt(1 + 8n)) / 2)`` for ``n >= 1``."""
    t = (1 + math.isqrt(1 + 8 * n)) // 2
    while t * (t - 1) < 2 * n:
        t += 1
    while t > 0 and (t - 1) * (t - 2) >= 2 * n:
        t -= 1
    return t


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    omega: int
    sqrt_bound: int
    seymour: int
    two_alpha: int
    k_independent: int
    flag: int
    flag_weak: int
    edge_bound: int
    best_lower: int
    binding: str

    def lower_bounds(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in LOWER_BOUNDS}

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def bounds(g: Graph) -> BoundsReport:
    n, m = g.n, g.m
    omega = clique_number(g)
    alpha = independence_number(g)
    ks = k_values(g)
    k_ind, _ = maximum_weight_independent_set(g, ks)
    prof = degree_profile(g)
    lower = {
        "omega": omega,
        "sqrt_bound": sqrt_bound(n),
        "seymour": _ceil_div(n, alpha),
        "two_alpha": 2 * alpha,
        "k_independent": k_ind,
        "flag": _ceil_div(sum(ks), omega),
        "flag_weak": _ceil_div(2 * m, omega * omega),
    }
    binding = max(LOWER_BOUNDS, key=lambda k: (lower[k], -LOWER_BOUNDS.index(k)))
    return BoundsReport(
        n=n,
        m=m,
        edge_bound=m + prof.n_leaves + 2 * prof.n_isolated,
        best_lower=lower[binding],
        binding=binding,
        **lower,
    )


# -- search ------------------------------------------------------------------


class _Stop(Exception):
    pass


def _search(
    g: Graph,
    mode: str,
    lower: int,
    upper: int | None = None,
    forced: Sequence[Iterable[int]] = (),
    budget: Budget | None = None,
) -> tuple[int | None, list[int], SolveStats]:
    """Minimum cover size and its cliques (as masks, in output order).

    Only covers strictly smaller than ``upper`` are sought when it is given;
    otherwise the constructive edge cover seeds the incumbent.  Returns
    ``(None, [], stats)`` when no cover below ``upper`` exists.
    """
    n = g.n
    full = mode == FULL
    stats = SolveStats()
    t0 = time.perf_counter()
    R = list(g.adj)
    cov = [0] * n
    chosen: list[int] = []

    for c in forced:
        mask = to_mask(c)
        for x in bits(mask):
            if mask & ~(1 << x) & ~R[x]:
                raise ValueError(f"forced set {sorted(c)} is not a clique on uncovered edges")
        for x in bits(mask):
            R[x] &= ~mask
            cov[x] += 1
        chosen.append(mask)

    omega = max(clique_number(g), 2)
    pair_cap = omega * (omega - 1) // 2

    def completion() -> list[int]:
        out = list(chosen)
        if full:
            for x in range(n):
                out.extend([1 << x] * max(0, 2 - cov[x]))
        return out

    if upper is None:
        # Seed: every remaining edge as its own clique.
        seed = list(chosen)
        cov_seed = cov[:]
        for a in range(n):
            for b in bits(R[a] >> (a + 1) << (a + 1)):
                seed.append((1 << a) | (1 << b))
                cov_seed[a] += 1
                cov_seed[b] += 1
        if full:
            for x in range(n):
                seed.extend([1 << x] * max(0, 2 - cov_seed[x]))
        best = [len(seed), seed]
    else:
        best = [upper, None]

    deadline = None
    if budget and budget.max_seconds is not None:
        deadline = t0 + budget.max_seconds
    max_nodes = budget.max_nodes if budget else None

    def prune(reason: str) -> None:
        stats.prunes[reason] = stats.prunes.get(reason, 0) + 1

    def dfs() -> None:
        stats.nodes += 1
        if max_nodes is not None and stats.nodes > max_nodes:
            raise _Stop
        if deadline is not None and stats.nodes & 255 == 0 and time.perf_counter() > deadline:
            raise _Stop
        u = next((x for x in range(n) if R[x]), -1)
        base = len(chosen)
        debt = 0
        if full:
            debt = sum(max(0, 2 - cov[x]) for x in range(n) if not R[x])
        if u < 0:
            cost = base + debt
            if cost < best[0]:
                best[0], best[1] = cost, completion()
                if best[0] <= lower:
                    raise _Stop
            return
        if base + debt + 1 >= best[0]:
            prune("singleton_debt")
            return
        degs = [r.bit_count() for r in R]
        by_edges = _ceil_div(sum(degs) // 2, pair_cap)
        by_degree = max(_ceil_div(d, omega - 1) for d in degs)
        if base + debt + max(by_edges, by_degree) >= best[0]:
            prune("blocks_by_edges" if by_edges >= by_degree else "blocks_by_degree")
            return
        v = (R[u] & -R[u]).bit_length() - 1
        common = R[u] & R[v]
        cands = [0] + list(_cliques_masks(R, common))
        cands.sort(key=lambda s: (-s.bit_count(), tuple(bits(s))))
        for s in cands:
            k = s | (1 << u) | (1 << v)
            members = list(bits(k))
            for x in members:
                R[x] &= ~k
                cov[x] += 1
            chosen.append(k)
            dfs()
            chosen.pop()
            for x in members:
                cov[x] -= 1
                R[x] |= k & ~(1 << x)

    try:
        if best[0] > lower:
            dfs()
    except _Stop:
        if best[0] > lower:
            stats.elapsed = time.perf_counter() - t0
            cover = best[1] if best[1] is not None else []
            raise BudgetExceeded(lower, best[0] if best[1] is not None else (upper or 0) - 1,
                                 CliqueCover(tuple(frozenset(bits(c)) for c in cover), mode), stats)
    stats.elapsed = time.perf_counter() - t0
    if best[1] is None:
        return None, [], stats
    return best[0], best[1], stats


@dataclass
class SolveResult:
    value: int
    certificate: CliqueCover
    realization: LinearHypergraph | None
    stats: SolveStats
    bounds: BoundsReport | None = None
    closed_form: str | None = None


def _masks_to_cover(masks: Sequence[int], mode: str) -> CliqueCover:
    return CliqueCover(tuple(frozenset(bits(c)) for c in masks), mode)


def linear_intersection_number(
    g: Graph, budget: Budget | None = None, *, fast_path: bool = True
) -> SolveResult:
    """Exact ``v(G)`` with a verified cover and the hypergraph built from it.

    With ``fast_path`` a closed-form value (when the graph class is settled)
    becomes the search's lower bound, so the search stops at the first cover
    of that size; the certificate is still built and checked.  A closed form
    below the true value is caught (the search cannot reach it); one above it
    would only be confirmed as an upper bound, so every check elsewhere in the
    package solves with ``fast_path=False``.
    """
    report = bounds(g)
    lower = report.best_lower
    tag = None
    if fast_path:
        from .classify import closed_form_v

        cf = closed_form_v(g)
        if cf is not None:
            lower = max(lower, cf.value)
            tag = "+".join(t for _, t, _ in cf.parts)
    value, masks, stats = _search(g, FULL, lower, budget=budget)
    cover = _masks_to_cover(masks, FULL)
    if tag is not None and value != lower:
        raise RuntimeError(f"closed form {lower} disagrees with search value {value} for {g!r}")
    _check_full_result(g, value, cover, report)
    realization = validate(from_clique_cover(cover.cliques, g.n).lines, value)
    if intersection_graph(realization) != g:
        raise RuntimeError("realisation does not reproduce the input graph")
    return SolveResult(value, cover, realization, stats, report, tag)


def _check_full_result(g: Graph, value: int, cover: CliqueCover, report: BoundsReport) -> None:
    verdict = verify_cover(g, cover)
    if not verdict or verdict.size != value:
        raise RuntimeError(f"solver produced a bad certificate: {verdict}")
    if not report.best_lower <= value <= report.edge_bound:
        raise RuntimeError(
            f"v={value} outside proven interval [{report.best_lower}, {report.edge_bound}]"
        )


def reduced_linear_intersection_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    """Exact ``vbar(G)``; no realisation is attached."""
    value, masks, stats = _search(g, REDUCED, 1 if g.m else 0, budget=budget)
    cover = _masks_to_cover(masks, REDUCED)
    verdict = verify_cover(g, cover)
    if not verdict or verdict.size != value:
        raise RuntimeError(f"solver produced a bad reduced certificate: {verdict}")
    return SolveResult(value, cover, None, stats)


def forced_cover(
    g: Graph, forced: Sequence[Iterable[int]], target: int, budget: Budget | None = None
) -> CliqueCover | None:
    """A full cover of size ``<= target`` containing every set in ``forced``, or None."""
    value, masks, _ = _search(g, FULL, lower=0, upper=target + 1, forced=forced, budget=budget)
    if value is None:
        return None
    return _masks_to_cover(masks, FULL)


def is_extremal_interior(
    g: Graph, x: int, v: int | None = None, budget: Budget | None = None
) -> bool:
    """Whether some minimum cover contains the closed neighbourhood of ``x``."""
    closed = {x} | set(bits(g.adj[x]))
    if not g.is_clique(closed):
        return False
    if v is None:
        v = linear_intersection_number(g, budget, fast_path=False).value
    return forced_cover(g, [closed], v, budget) is not None


# -- checks built on the solver ----------------------------------------------


@dataclass(frozen=True)
class EflReport:
    chi: int
    v: int
    holds: bool
    margin: int


def verify_efl(g: Graph, budget: Budget | None = None) -> EflReport:
    colours = minimum_coloring(g)
    chi = max(colours) + 1 if colours else 0
    v = linear_intersection_number(g, budget, fast_path=False).value
    return EflReport(chi, v, chi <= v, v - chi)


@dataclass(frozen=True)
class EdgeDeleteReport:
    v_before: int
    v_after: int
    lemma_holds: bool


def edge_delete_check(g: Graph, edge: tuple[int, int], budget: Budget | None = None) -> EdgeDeleteReport:
    a, b = edge
    if not g.has_edge(a, b):
        raise ValueError(f"{edge} is not an edge")
    minus = from_edge_list(g.n, [e for e in g.edges if e != (min(a, b), max(a, b))])
    before = linear_intersection_number(g, budget, fast_path=False).value
    after = linear_intersection_number(minus, budget, fast_path=False).value
    return EdgeDeleteReport(before, after, after >= before - 1)
