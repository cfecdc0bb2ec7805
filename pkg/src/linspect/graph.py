"""Finite simple undirected graphs on dense vertex indices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, which keeps the set
algebra in the clique and cover searches cheap.  Graphs are immutable; every
surgery returns a new graph.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, NamedTuple, Sequence

VertexSet = frozenset  # frozenset[int] of vertex indices


class GraphError(ValueError):
    """Raised for malformed graph input (bad index, loop)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class DegreeProfile(NamedTuple):
    leaves: VertexSet
    n_leaves: int
    isolated: VertexSet
    n_isolated: int


class Graph:
    """Immutable simple graph with bitmask adjacency rows."""

    __slots__ = ("_n", "_adj", "_edges")

    def __init__(self, n: int, adj: Sequence[int]):
        # Trusted constructor; use from_edge_list for checked input.
        self._n = n
        self._adj = tuple(adj)
        self._edges: tuple[tuple[int, int], ...] | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(a, b)`` with ``a < b``, sorted lexicographically."""
        if self._edges is None:
            self._edges = tuple(
                (a, b) for a in range(self._n) for b in bits(self._adj[a] >> (a + 1) << (a + 1))
            )
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, x: int) -> int:
        self._check(x)
        return self._adj[x].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def has_edge(self, a: int, b: int) -> bool:
        self._check(a)
        self._check(b)
        return bool(self._adj[a] >> b & 1)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        for v in vs:
            self._check(v)
        mask = to_mask(vs)
        return all(mask & ~self._adj[v] == 1 << v for v in vs)

    def _check(self, x: int) -> None:
        if not (isinstance(x, int) and 0 <= x < self._n):
            raise GraphError(f"vertex {x!r} out of range for graph on {self._n} vertices")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges)})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs are collapsed."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for pair in pairs:
        a, b = pair
        for x in (a, b):
            if not (isinstance(x, int) and 0 <= x < n):
                raise GraphError(f"vertex {x!r} out of range for graph on {n} vertices")
        if a == b:
            raise GraphError(f"loop at vertex {a}")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(n, adj)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(s: int, t: int) -> Graph:
    return from_edge_list(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def degree_profile(g: Graph) -> DegreeProfile:
    deg = g.degrees()
    leaves = frozenset(x for x in g.vertices if deg[x] == 1)
    isolated = frozenset(x for x in g.vertices if deg[x] == 0)
    return DegreeProfile(leaves, len(leaves), isolated, len(isolated))


def neighborhood(g: Graph, x: int) -> VertexSet:
    g._check(x)
    return frozenset(bits(g.adj[x]))


def distance(g: Graph, a: int, b: int) -> float:
    """Shortest-path length; ``math.inf`` across components."""
    g._check(a)
    g._check(b)
    if a == b:
        return 0
    seen = 1 << a
    frontier = 1 << a
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for x in bits(frontier):
            nxt |= g.adj[x]
        nxt &= ~seen
        if nxt >> b & 1:
            return d
        seen |= nxt
        frontier = nxt
    return math.inf


def disjoint_sum(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.adj) + [row << shift for row in g2.adj])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph, densely re-indexed in ascending vertex order."""
    keep = sorted(set(vertices))
    for x in keep:
        g._check(x)
    index = {x: i for i, x in enumerate(keep)}
    adj = []
    for x in keep:
        row = 0
        for y in bits(g.adj[x]):
            if y in index:
                row |= 1 << index[y]
        adj.append(row)
    return Graph(len(keep), adj), index


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``mapping[v]`` (a permutation)."""
    return from_edge_list(g.n, [(mapping[a], mapping[b]) for a, b in g.edges])


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by smallest member."""
    seen = 0
    out = []
    for v in g.vertices:
        if seen >> v & 1:
            continue
        comp = 1 << v
        queue = deque([v])
        while queue:
            x = queue.popleft()
            new = g.adj[x] & ~comp
            comp |= new
            queue.extend(bits(new))
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def has_triangle(g: Graph) -> bool:
    return any(g.adj[a] & g.adj[b] for a, b in g.edges)


# -- canonical labeling ------------------------------------------------------


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    # Split cells by neighbour counts into every cell until stable; both the
    # split and the order of the pieces depend only on isomorphism invariants.
    while True:
        masks = [to_mask(c) for c in cells]
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            new.extend(groups[s] for s in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


def _twins(g: Graph, u: int, w: int) -> bool:
    pair = (1 << u) | (1 << w)
    return g.adj[u] & ~pair == g.adj[w] & ~pair


def canonical_labeling(g: Graph) -> tuple[tuple[tuple[int, int], ...], list[int]]:
    """Return ``(certificate, order)`` where ``order[i]`` is the vertex placed at
    position ``i``.  Isomorphic graphs get identical certificates.

    Individualisation-refinement; only one vertex of each twin class in the
    target cell is individualised (twins are swapped by an automorphism that
    fixes the rest), which keeps complete and edgeless graphs linear.
    Practical up to a dozen or so vertices.
    """
    best: list = [None, None]

    def certificate(order: list[int]) -> tuple[tuple[int, int], ...]:
        pos = {v: i for i, v in enumerate(order)}
        return tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in g.edges))

    def search(cells: list[list[int]]) -> None:
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = certificate(order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[target]
        reps: list[int] = []
        for v in cell:
            if not any(_twins(g, v, r) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(g.vertices)] if g.n else [])
    if best[0] is None:
        return (), []
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return from_edge_list(g.n, canonical_labeling(g)[0])


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
