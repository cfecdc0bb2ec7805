"""Brute-force ``v(G)`` used as an independent check on the solver.

Deliberately naive: plain Python sets, cliques found with
``itertools.combinations``, and no bounding.  It walks every partition of
the edge set into cliques (every family satisfying the "each edge exactly
once" condition has its non-trivial part among these) and adds the cheapest
singleton completion, which is forced: a vertex in ``c`` non-trivial
cliques needs ``max(0, 2 - c)`` singletons.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

DEFAULT_CAP = 7


class CapExceeded(ValueError):
    pass


def brute_force_v(g: Graph, cap: int = DEFAULT_CAP) -> int:
    if g.n > cap:
        raise CapExceeded(f"brute force is limited to {cap} vertices, got {g.n}")
    n = g.n
    edges = [frozenset(e) for e in g.edges]
    nbrs = {x: {y for y in range(n) if g.has_edge(x, y)} for x in range(n)}

    def is_clique(vs) -> bool:
        return all(b in nbrs[a] for a, b in combinations(vs, 2))

    cliques = [
        frozenset(vs)
        for size in range(2, n + 1)
        for vs in combinations(range(n), size)
        if is_clique(vs)
    ]
    best = [None]

    def walk(uncovered: frozenset, blocks: list) -> None:
        if not uncovered:
            count = {x: 0 for x in range(n)}
            for c in blocks:
                for x in c:
                    count[x] += 1
            cost = len(blocks) + sum(max(0, 2 - c) for c in count.values())
            if best[0] is None or cost < best[0]:
                best[0] = cost
            return
        first = min(uncovered, key=sorted)
        for c in cliques:
            if not first <= c:
                continue
            pairs = {frozenset(p) for p in combinations(c, 2)}
            if pairs <= uncovered:
                walk(uncovered - pairs, blocks + [c])

    walk(frozenset(edges), [])
    return best[0]


def literal_v(g: Graph, cap: int = 5) -> int:
    """The definition read literally: smallest ``r`` admitting a multiset of
    ``r`` cliques (singletons included) meeting both conditions.  Only
    feasible for very small graphs; used to validate ``brute_force_v``."""
    from itertools import combinations_with_replacement

    if g.n > cap:
        raise CapExceeded(f"literal enumeration is limited to {cap} vertices, got {g.n}")
    n = g.n
    all_cliques = [
        vs
        for size in range(1, n + 1)
        for vs in combinations(range(n), size)
        if all(g.has_edge(a, b) for a, b in combinations(vs, 2))
    ]
    r = 0
    while True:
        for family in combinations_with_replacement(all_cliques, r):
            hits = [0] * n
            edge_hits = dict.fromkeys(g.edges, 0)
            for c in family:
                for x in c:
                    hits[x] += 1
                for e in combinations(c, 2):
                    edge_hits[e] += 1
            if all(h >= 2 for h in hits) and all(k == 1 for k in edge_hits.values()):
                return r
        r += 1
