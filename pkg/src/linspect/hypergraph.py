"""Linear hypergraphs (partial linear spaces) and their intersection graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cliques import clique_number, minimum_coloring
from .graph import Graph, degree_profile, from_edge_list


class HypergraphError(ValueError):
    pass


class L1Violation(HypergraphError):
    """Two distinct points lie on two distinct lines."""

    def __init__(self, points: tuple[int, int], lines: tuple[int, int]):
        self.points = points
        self.lines = lines
        super().__init__(f"points {points} lie on both line {lines[0]} and line {lines[1]}")


class L2Violation(HypergraphError):
    """A line with fewer than two points."""

    def __init__(self, line: int, size: int):
        self.line = line
        self.size = size
        super().__init__(f"line {line} has {size} point(s); at least 2 required")


@dataclass(frozen=True)
class LinearHypergraph:
    num_points: int
    lines: tuple[frozenset[int], ...]

    @property
    def v(self) -> int:
        return self.num_points

    @property
    def b(self) -> int:
        return len(self.lines)

    def pencil(self, p: int) -> tuple[int, ...]:
        """Indices of the lines through point ``p``."""
        return tuple(i for i, line in enumerate(self.lines) if p in line)

    def point_degree(self, p: int) -> int:
        return len(self.pencil(p))

    def line_sizes(self) -> list[int]:
        return [len(line) for line in self.lines]

    def to_json(self) -> dict:
        return {"points": self.num_points, "lines": [sorted(line) for line in self.lines]}


@dataclass(frozen=True)
class LineColoring:
    colors: tuple[int, ...]
    num_colors: int


def validate(lines: Iterable[Iterable[int]], num_points: int | None = None) -> LinearHypergraph:
    """Check the axioms and return the hypergraph.

    Scan order is fixed so the first violation reported is reproducible:
    range and L2 line by line, then L1 over line pairs ``(i, j)`` in
    lexicographic order, naming the smallest shared point pair.
    """
    ls = [frozenset(line) for line in lines]
    if num_points is None:
        num_points = max((max(line) for line in ls if line), default=-1) + 1
    for i, line in enumerate(ls):
        for p in line:
            if not (isinstance(p, int) and 0 <= p < num_points):
                raise HypergraphError(f"line {i} contains point {p!r} outside 0..{num_points - 1}")
    for i, line in enumerate(ls):
        if len(line) < 2:
            raise L2Violation(i, len(line))
    for i, j in combinations(range(len(ls)), 2):
        common = ls[i] & ls[j]
        if len(common) >= 2:
            p, q = sorted(common)[:2]
            raise L1Violation((p, q), (i, j))
    return LinearHypergraph(num_points, tuple(ls))


def normalize(h: LinearHypergraph) -> tuple[LinearHypergraph, dict[int, int]]:
    """Strip points on no line and re-index the rest densely."""
    used = sorted(set().union(*h.lines)) if h.lines else []
    index = {p: i for i, p in enumerate(used)}
    lines = tuple(frozenset(index[p] for p in line) for line in h.lines)
    return LinearHypergraph(len(used), lines), index


def intersection_points(h: LinearHypergraph) -> dict[tuple[int, int], int]:
    """Map each intersecting line pair ``(i, j)``, ``i < j``, to its unique
    common point."""
    out = {}
    for i, j in combinations(range(h.b), 2):
        common = h.lines[i] & h.lines[j]
        if common:
            (p,) = common
            out[(i, j)] = p
    return out


def intersection_graph(h: LinearHypergraph) -> Graph:
    return from_edge_list(h.b, intersection_points(h).keys())


def dual_realization(g: Graph) -> LinearHypergraph:
    """Line ``x`` is the set of edges at vertex ``x``; each leaf gets one
    private extra point and each isolated vertex two."""
    lines = [set() for _ in g.vertices]
    for p, (a, b) in enumerate(g.edges):
        lines[a].add(p)
        lines[b].add(p)
    nxt = g.m
    prof = degree_profile(g)
    for x in g.vertices:
        if x in prof.leaves:
            lines[x].add(nxt)
            nxt += 1
        elif x in prof.isolated:
            lines[x].update((nxt, nxt + 1))
            nxt += 2
    return LinearHypergraph(nxt, tuple(frozenset(line) for line in lines))


def from_clique_cover(cliques: Sequence[Iterable[int]], n: int) -> LinearHypergraph:
    """Points are the cliques; line ``a`` is the set of cliques containing ``a``."""
    lines = [set() for _ in range(n)]
    for i, c in enumerate(cliques):
        for a in c:
            lines[a].add(i)
    return LinearHypergraph(len(cliques), tuple(frozenset(line) for line in lines))


def chromatic_index(h: LinearHypergraph) -> tuple[int, LineColoring]:
    colours = minimum_coloring(intersection_graph(h))
    k = max(colours) + 1 if colours else 0
    return k, LineColoring(tuple(colours), k)


def is_line_coloring(h: LinearHypergraph, coloring: LineColoring) -> bool:
    return all(
        coloring.colors[i] != coloring.colors[j] for i, j in intersection_points(h)
    )


class FundamentalTheoremViolation(AssertionError):
    pass


def is_intersecting(h: LinearHypergraph) -> bool:
    """True iff any two distinct lines meet.  For such families ``b <= v``
    is checked and its failure raised, since it would contradict a theorem."""
    result = all(h.lines[i] & h.lines[j] for i, j in combinations(range(h.b), 2))
    if result:
        used = len(set().union(*h.lines)) if h.lines else 0
        if h.b > used:
            raise FundamentalTheoremViolation(
                f"intersecting linear hypergraph with b={h.b} lines on {used} points"
            )
    return result


def clique_index(h: LinearHypergraph) -> int:
    """Largest set of pairwise intersecting lines."""
    return clique_number(intersection_graph(h))


def fano_plane() -> LinearHypergraph:
    return validate([{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}])
