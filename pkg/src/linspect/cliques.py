"""Clique machinery: enumeration, clique/independence/chromatic numbers,
clique cover number, the per-vertex line-size bound ``k(a)`` and the clique
graph whose vertices are the non-trivial cliques of a graph.

The exact searches are plain branch-and-bound over bitmasks and are meant
for graphs of at most about thirty vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graph import Graph, VertexSet, bits, complement, induced_subgraph, neighborhood

DEFAULT_CLIQUE_CAP = 10**6


class CliqueGraphTooLarge(RuntimeError):
    """The clique graph would exceed the materialisation cap."""


def _cliques_masks(adj: Sequence[int], candidates: int, min_size: int = 1) -> Iterator[int]:
    # Preorder DFS with ascending extension: yields cliques in lexicographic
    # order of their sorted member lists.
    def walk(clique: int, size: int, cands: int) -> Iterator[int]:
        for v in bits(cands):
            c = clique | (1 << v)
            if size + 1 >= min_size:
                yield c
            higher = cands & ~((2 << v) - 1)
            yield from walk(c, size + 1, higher & adj[v])

    yield from walk(0, 0, candidates)


def enumerate_cliques(g: Graph, min_size: int = 1) -> Iterator[VertexSet]:
    """Every clique (not only maximal ones) with at least ``min_size``
    vertices, each exactly once, in lexicographic order of sorted members."""
    if min_size < 1:
        raise ValueError("min_size must be at least 1")
    for mask in _cliques_masks(g.adj, (1 << g.n) - 1, min_size):
        yield frozenset(bits(mask))


def _max_clique(adj: Sequence[int], candidates: int) -> int:
    """Maximum clique inside ``candidates`` as a bitmask (greedy-colouring bound)."""
    best = [0, 0]  # size, mask

    def colour_bound(cands: int) -> list[tuple[int, int]]:
        # Sequential greedy colouring; returns (vertex, colour) with
        # non-decreasing colour numbers.
        order = []
        colour = 0
        rest = cands
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(clique: int, size: int, cands: int) -> None:
        order = colour_bound(cands)
        for v, colour in reversed(order):
            if size + colour <= best[0]:
                return
            c = clique | (1 << v)
            new = cands & adj[v]
            if new:
                expand(c, size + 1, new)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, c
            cands &= ~(1 << v)

    if candidates:
        expand(0, 0, candidates)
    return best[1]


def maximum_clique(g: Graph) -> VertexSet:
    return frozenset(bits(_max_clique(g.adj, (1 << g.n) - 1)))


def clique_number(g: Graph) -> int:
    """omega(G); 0 for the graph on no vertices."""
    return _max_clique(g.adj, (1 << g.n) - 1).bit_count()


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def maximum_independent_set(g: Graph) -> VertexSet:
    return maximum_clique(complement(g))


def _dsatur_pick(adj: Sequence[int], uncoloured: int, sat: list[int]) -> int:
    best_v, best_key = -1, None
    for v in bits(uncoloured):
        key = (sat[v].bit_count(), (adj[v] & uncoloured).bit_count(), -v)
        if best_key is None or key > best_key:
            best_v, best_key = v, key
    return best_v


def minimum_coloring(g: Graph) -> list[int]:
    """An optimal proper vertex colouring (colours ``0..chi-1``).

    Exact DSATUR branch-and-bound: a maximum clique is pre-coloured as the
    lower bound and a greedy DSATUR run supplies the first incumbent.
    """
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    clique = sorted(bits(_max_clique(adj, (1 << n) - 1)))
    lower = len(clique)

    def greedy(colours: list[int]) -> list[int]:
        colours = colours[:]
        sat = [0] * n
        uncol = 0
        for v in range(n):
            if colours[v] < 0:
                uncol |= 1 << v
            else:
                for u in bits(adj[v]):
                    sat[u] |= 1 << colours[v]
        while uncol:
            v = _dsatur_pick(adj, uncol, sat)
            c = 0
            while sat[v] >> c & 1:
                c += 1
            colours[v] = c
            uncol &= ~(1 << v)
            for u in bits(adj[v]):
                sat[u] |= 1 << c
        return colours

    start = [-1] * n
    for i, v in enumerate(clique):
        start[v] = i
    incumbent = greedy(start)
    best = [max(incumbent) + 1, incumbent]
    if best[0] == lower:
        return incumbent

    colours = start[:]
    sat = [0] * n
    for v in clique:
        for u in bits(adj[v]):
            sat[u] |= 1 << colours[v]
    uncol = (1 << n) - 1
    for v in clique:
        uncol &= ~(1 << v)

    def search(uncol: int, used: int) -> bool:
        if not uncol:
            best[0], best[1] = used, colours[:]
            return best[0] == lower
        v = _dsatur_pick(adj, uncol, sat)
        for c in range(used + 1):
            if max(used, c + 1) >= best[0]:
                break
            if sat[v] >> c & 1:
                continue
            colours[v] = c
            touched = [u for u in bits(adj[v] & uncol) if not sat[u] >> c & 1]
            for u in touched:
                sat[u] |= 1 << c
            done = search(uncol & ~(1 << v), max(used, c + 1))
            for u in touched:
                sat[u] &= ~(1 << c)
            colours[v] = -1
            if done:
                return True
        return False

    search(uncol, lower)
    return best[1]


def chromatic_number(g: Graph) -> int:
    colours = minimum_coloring(g)
    return max(colours) + 1 if colours else 0


def minimum_clique_partition(h: Graph) -> list[VertexSet]:
    """Partition of V(H) into the fewest cliques (colour classes of the complement)."""
    colours = minimum_coloring(complement(h))
    classes: dict[int, set[int]] = {}
    for v, c in enumerate(colours):
        classes.setdefault(c, set()).add(v)
    return [frozenset(classes[c]) for c in sorted(classes)]


def clique_cover_number(h: Graph) -> int:
    """theta(H): fewest cliques partitioning the vertex set."""
    return chromatic_number(complement(h))


def k_value(g: Graph, a: int) -> int:
    """Lower bound on the number of points of line ``a`` in any realisation:
    ``max(theta(G_a), 2)``."""
    sub, _ = induced_subgraph(g, neighborhood(g, a))
    return max(clique_cover_number(sub), 2)


def k_values(g: Graph) -> list[int]:
    return [k_value(g, a) for a in g.vertices]


def flag_sum(g: Graph) -> int:
    return sum(k_values(g))


def maximum_weight_independent_set(g: Graph, weights: Sequence[int]) -> tuple[int, VertexSet]:
    """Exact maximum-weight independent set for non-negative integer weights."""
    adj = g.adj
    best = [0, 0]

    def search(chosen: int, weight: int, cands: int) -> None:
        if weight > best[0]:
            best[0], best[1] = weight, chosen
        if not cands:
            return
        if weight + sum(weights[v] for v in bits(cands)) <= best[0]:
            return
        v = max(bits(cands), key=lambda x: (weights[x], -x))
        search(chosen | (1 << v), weight + weights[v], cands & ~adj[v] & ~(1 << v))
        search(chosen, weight, cands & ~(1 << v))

    search(0, 0, (1 << g.n) - 1)
    return best[0], frozenset(bits(best[1]))


@dataclass
class CliqueGraphView:
    """The clique graph: non-trivial cliques of ``graph`` as vertices, two of
    them adjacent iff they share at least two vertices (an edge of ``graph``).

    Cliques are produced lazily; ``materialize`` refuses more than ``cap``.
    """

    graph: Graph
    cap: int = DEFAULT_CLIQUE_CAP
    _cliques: tuple[VertexSet, ...] | None = field(default=None, repr=False)

    def iter_cliques(self) -> Iterator[VertexSet]:
        return enumerate_cliques(self.graph, 2)

    @property
    def cliques(self) -> tuple[VertexSet, ...]:
        if self._cliques is None:
            out = []
            for c in self.iter_cliques():
                out.append(c)
                if len(out) > self.cap:
                    raise CliqueGraphTooLarge(
                        f"more than {self.cap} non-trivial cliques; raise the cap to materialise"
                    )
            self._cliques = tuple(out)
        return self._cliques

    @staticmethod
    def adjacent(a: VertexSet, b: VertexSet) -> bool:
        return a != b and len(a & b) >= 2

    def materialize(self) -> Graph:
        cl = self.cliques
        rows = [0] * len(cl)
        for i in range(len(cl)):
            for j in range(i + 1, len(cl)):
                if len(cl[i] & cl[j]) >= 2:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph(len(cl), rows)


def clique_graph(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> CliqueGraphView:
    return CliqueGraphView(g, cap)


def minimum_maximal_independent_set(h: Graph) -> VertexSet:
    """Smallest independent set that cannot be extended (independent domination)."""
    adj = h.adj
    n = h.n
    full = (1 << n) - 1
    best = [n + 1, full]

    def search(chosen: int, size: int, dominated: int) -> None:
        if size >= best[0]:
            return
        undominated = full & ~dominated
        if not undominated:
            best[0], best[1] = size, chosen
            return
        # Some vertex of N[u] must join the set; pick u with fewest options.
        u, opts = -1, 0
        for x in bits(undominated):
            o = (adj[x] | (1 << x)) & ~dominated
            if u < 0 or o.bit_count() < opts.bit_count():
                u, opts = x, o
        for w in bits(opts):
            search(chosen | (1 << w), size + 1, dominated | adj[w] | (1 << w))

    search(0, 0, 0)
    return frozenset(bits(best[1]))


def reduced_v_via_clique_graph(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> int:
    """Reduced linear intersection number as the minimum size of a maximal
    independent set in the clique graph."""
    return len(minimum_maximal_independent_set(clique_graph(g, cap).materialize()))
