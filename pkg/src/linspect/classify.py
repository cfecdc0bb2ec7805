"""Interior-vertex taxonomy, almost-triangle-free recognition and closed-form
values of ``v(G)`` for the graph classes where it is known."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    bits,
    components,
    degree_profile,
    has_triangle,
    induced_subgraph,
)
from .solver import Budget, is_extremal_interior, linear_intersection_number


@dataclass(frozen=True)
class VertexFlags:
    in_L: bool
    in_I: bool
    interior: bool
    strongly_interior: bool
    extremal_interior: bool | None
    extremal_strongly_interior: bool | None


@dataclass(frozen=True)
class VertexClassification:
    flags: tuple[VertexFlags, ...]

    def _select(self, name: str) -> frozenset[int]:
        return frozenset(x for x, f in enumerate(self.flags) if getattr(f, name))

    @property
    def leaves(self) -> frozenset[int]:
        return self._select("in_L")

    @property
    def isolated(self) -> frozenset[int]:
        return self._select("in_I")

    @property
    def interior(self) -> frozenset[int]:
        return self._select("interior")

    @property
    def strongly_interior(self) -> frozenset[int]:
        return self._select("strongly_interior")

    @property
    def extremal_interior(self) -> frozenset[int]:
        return self._select("extremal_interior")

    @property
    def extremal_strongly_interior(self) -> frozenset[int]:
        return self._select("extremal_strongly_interior")

    def to_json(self) -> list[dict]:
        return [f.__dict__.copy() for f in self.flags]


def classify_vertices(
    g: Graph, budget: Budget | None = None, *, extremal: bool = True
) -> VertexClassification:
    """All six flags per vertex.  The extremal flags need exact solves; with
    ``extremal=False`` they are left as None."""
    prof = degree_profile(g)
    v = linear_intersection_number(g, budget, fast_path=False).value if extremal and g.n else None
    flags = []
    for x in g.vertices:
        nbrs = list(bits(g.adj[x]))
        interior = g.is_clique(nbrs)
        strong = interior and len(nbrs) > 1
        ext = None
        if extremal:
            ext = interior and is_extremal_interior(g, x, v, budget)
        flags.append(
            VertexFlags(
                in_L=x in prof.leaves,
                in_I=x in prof.isolated,
                interior=interior,
                strongly_interior=strong,
                extremal_interior=ext,
                extremal_strongly_interior=None if ext is None else (strong and ext),
            )
        )
    return VertexClassification(tuple(flags))


@dataclass(frozen=True)
class GluedTriangle:
    attachment: int
    new_vertices: tuple[int, int]


@dataclass(frozen=True)
class AtfDecomposition:
    base_vertices: frozenset[int]
    base_edges: tuple[tuple[int, int], ...]
    triangles: tuple[GluedTriangle, ...]
    extremal_vertices: frozenset[int]


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a, b in g.edges:
        for c in bits(g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)):
            out.append((a, b, c))
    return out


def is_almost_triangle_free(g: Graph) -> AtfDecomposition | None:
    """Structural recognition.

    A glued triangle has two vertices whose only neighbours are the other two
    triangle vertices, and conversely a graph all of whose triangles have two
    such degree-2 vertices decomposes this way: the remaining vertex is the
    attachment, and deleting the degree-2 pairs leaves a triangle-free base.
    A triangle that is a whole component gets its smallest vertex as the
    attachment.
    """
    deg = g.degrees()
    glued = []
    removed: set[int] = set()
    for tri in triangles(g):
        low = [x for x in tri if deg[x] == 2]
        if len(low) < 2:
            return None
        if len(low) == 3:
            attach, p, q = tri
        else:
            (attach,) = [x for x in tri if deg[x] != 2]
            p, q = low
        glued.append(GluedTriangle(attach, (p, q)))
        removed.update((p, q))
    base = frozenset(x for x in g.vertices if x not in removed)
    base_edges = tuple(e for e in g.edges if e[0] in base and e[1] in base)
    base_graph, _ = induced_subgraph(g, base)
    if has_triangle(base_graph):
        return None

    per_attach: dict[int, int] = {}
    for t in glued:
        per_attach[t.attachment] = per_attach.get(t.attachment, 0) + 1
    base_deg = {x: 0 for x in base}
    for a, b in base_edges:
        base_deg[a] += 1
        base_deg[b] += 1
    extremal = set()
    for t in glued:
        if base_deg[t.attachment] == 0 and per_attach[t.attachment] == 1:
            continue
        extremal.update(t.new_vertices)
    return AtfDecomposition(base, base_edges, tuple(glued), frozenset(extremal))


@dataclass(frozen=True)
class ClosedForm:
    value: int
    parts: tuple[tuple[frozenset[int], str, int], ...]  # (component, rule, value)


def _component_value(h: Graph) -> tuple[str, int] | None:
    n, m = h.n, h.m
    if m == n * (n - 1) // 2:
        return "complete", {1: 2, 2: 3}.get(n, n)
    deg = h.degrees()
    if n >= 3 and m == n and all(d == 2 for d in deg):
        return "cycle", n
    prof = degree_profile(h)
    if m == n - 1:
        return "tree", n + prof.n_leaves - 1
    if not has_triangle(h):
        return "triangle-free", m + prof.n_leaves + 2 * prof.n_isolated
    if is_almost_triangle_free(h) is not None:
        return "almost-triangle-free", m + prof.n_leaves + 2 * prof.n_isolated
    return None


def closed_form_v(g: Graph) -> ClosedForm | None:
    """Sum of per-component closed forms, or None if some component is not
    complete, a cycle, a tree, triangle-free or almost triangle-free."""
    parts = []
    for comp in components(g):
        h, _ = induced_subgraph(g, comp)
        got = _component_value(h)
        if got is None:
            return None
        parts.append((comp, got[0], got[1]))
    return ClosedForm(sum(p[2] for p in parts), tuple(parts))
