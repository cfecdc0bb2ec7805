"""Graph surgeries together with the effect on ``v`` that theory predicts.

Each surgery returns a :class:`SurgeryOutcome` whose predictions are
checkable claims; :func:`check_predictions` evaluates them with exact solves.
Computing a prediction may itself need solves on the input graphs (for
example whether the glue vertex is extremal interior).
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph import Graph, GraphError, bits, distance, from_edge_list
from .hypergraph import LinearHypergraph, validate
from .solver import (
    Budget,
    is_extremal_interior,
    linear_intersection_number,
    reduced_linear_intersection_number,
)

_RELATIONS: dict[str, Callable[[int, int], bool]] = {
    "==": operator.eq,
    "<=": operator.le,
    ">=": operator.ge,
    "<": operator.lt,
}


@dataclass(frozen=True)
class Prediction:
    """``quantity relation bound``, e.g. ``v(result) == 6``.

    ``quantity`` is one of ``v(result)``, ``v(source)``, ``vbar(result)`` or
    ``extremal(result, x)`` (an indicator, 1 if ``x`` is extremal interior).
    """

    quantity: str
    relation: str
    bound: int
    lemma: str

    def holds(self, actual: int) -> bool:
        return _RELATIONS[self.relation](actual, self.bound)

    def __str__(self) -> str:
        return f"{self.quantity} {self.relation} {self.bound}  [{self.lemma}]"


@dataclass(frozen=True)
class SurgeryOutcome:
    graph: Graph
    vertex_maps: tuple[dict[int, int], ...]
    predictions: tuple[Prediction, ...] = ()
    tag: str = ""
    source: Graph | None = field(default=None, repr=False)


def _v(g: Graph, budget: Budget | None) -> int:
    return linear_intersection_number(g, budget, fast_path=False).value


def join_at_vertex(
    g1: Graph, g2: Graph, a1: int, a2: int, *, predict: bool = True, budget: Budget | None = None
) -> SurgeryOutcome:
    """Glue ``g2`` onto ``g1`` by identifying ``a2`` with ``a1``.

    ``g1`` keeps its labels; the other vertices of ``g2`` follow in order.
    """
    g1._check(a1)
    g2._check(a2)
    map1 = {x: x for x in g1.vertices}
    map2 = {}
    nxt = g1.n
    for x in g2.vertices:
        if x == a2:
            map2[x] = a1
        else:
            map2[x] = nxt
            nxt += 1
    edges = list(g1.edges) + [(map2[a], map2[b]) for a, b in g2.edges]
    glued = from_edge_list(nxt, edges)
    if not predict:
        return SurgeryOutcome(glued, (map1, map2), tag="join")

    v1, v2 = _v(g1, budget), _v(g2, budget)
    vbar = (
        reduced_linear_intersection_number(g1, budget).value
        + reduced_linear_intersection_number(g2, budget).value
    )
    preds = [Prediction("vbar(result)", "==", vbar, "gluing: vbar is additive")]
    if g1.degree(a1) == 0 or g2.degree(a2) == 0:
        preds.insert(0, Prediction("v(result)", "==", v1 + v2 - 2, "gluing: isolated glue vertex"))
    else:
        t = int(is_extremal_interior(g1, a1, v1, budget)) + int(is_extremal_interior(g2, a2, v2, budget))
        preds.insert(0, Prediction("v(result)", "==", v1 + v2 - t, f"gluing: t={t}"))
        preds.append(Prediction(f"extremal(result, {a1})", "==", 0, "gluing: glue vertex not extremal"))
    return SurgeryOutcome(glued, (map1, map2), tuple(preds), "join")


def collapse(
    g: Graph, a: int, b: int, *, predict: bool = True, budget: Budget | None = None
) -> SurgeryOutcome:
    """Merge non-adjacent ``a`` and ``b``.  The merged vertex takes the place
    of ``min(a, b)``; the other index is removed and later ones shift down."""
    g._check(a)
    g._check(b)
    if a == b:
        raise GraphError("collapse needs two distinct vertices")
    if g.has_edge(a, b):
        raise GraphError(f"cannot collapse adjacent vertices {a} and {b}")
    keep, drop = min(a, b), max(a, b)
    vmap = {}
    for x in g.vertices:
        if x == drop:
            vmap[x] = keep
        else:
            vmap[x] = x - (x > drop)
    merged = from_edge_list(g.n - 1, [(vmap[x], vmap[y]) for x, y in g.edges])
    d = distance(g, a, b)
    if d < 3:
        return SurgeryOutcome(merged, (vmap,), tag="collapse: lemma inapplicable (d < 3)", source=g)
    if not predict:
        return SurgeryOutcome(merged, (vmap,), tag="collapse", source=g)
    v = _v(g, budget)
    interior = [g.is_clique(bits(g.adj[x])) for x in (a, b)]
    if d >= 4 and not any(interior):
        pred = Prediction("v(result)", "==", v, "collapse: d >= 4, endpoints not interior")
    else:
        pred = Prediction("v(result)", "<=", v, "collapse: d >= 3")
    dist = "inf" if d == math.inf else str(d)
    return SurgeryOutcome(merged, (vmap,), (pred,), f"collapse (d={dist})", g)


def remove_clique(
    g: Graph, clique: Iterable[int], *, predict: bool = True, budget: Budget | None = None
) -> SurgeryOutcome:
    """Residual graph after deleting the edges inside ``clique``.

    Keeps every vertex outside the clique and every clique vertex with an
    edge leaving it; survivors are re-indexed in ascending order.
    """
    c = sorted(set(clique))
    if len(c) < 3:
        raise GraphError("remove_clique needs a clique of at least 3 vertices")
    if not g.is_clique(c):
        raise GraphError(f"{c} is not a clique")
    cset = set(c)
    rest_edges = [e for e in g.edges if not (e[0] in cset and e[1] in cset)]
    touched = {x for e in rest_edges for x in e}
    survivors = sorted(touched | (set(g.vertices) - cset))
    vmap = {x: i for i, x in enumerate(survivors)}
    residual = from_edge_list(len(survivors), [(vmap[x], vmap[y]) for x, y in rest_edges])
    if not predict:
        return SurgeryOutcome(residual, (vmap,), tag="remove-clique", source=g)
    vr = _v(residual, budget)
    n = len(c)
    attach = [x for x in c if x in vmap]
    if not attach:
        pred = Prediction("v(source)", "==", vr + n, "clique removal: clique is a component")
    elif len(attach) == 1:
        a = vmap[attach[0]]
        if is_extremal_interior(residual, a, vr, budget):
            pred = Prediction("v(source)", "<", vr + n, "clique removal: attachment extremal interior")
        else:
            pred = Prediction("v(source)", "==", vr + n, "clique removal: attachment not extremal")
    else:
        pred = Prediction("v(source)", "<", vr + n, f"clique removal: {len(attach)} attachments")
    return SurgeryOutcome(residual, (vmap,), (pred,), "remove-clique", g)


def delete_edge(
    g: Graph, edge: tuple[int, int], *, predict: bool = True, budget: Budget | None = None
) -> SurgeryOutcome:
    a, b = edge
    if not g.has_edge(a, b):
        raise GraphError(f"{edge} is not an edge")
    e = (min(a, b), max(a, b))
    minus = from_edge_list(g.n, [f for f in g.edges if f != e])
    vmap = {x: x for x in g.vertices}
    if not predict:
        return SurgeryOutcome(minus, (vmap,), tag="delete-edge", source=g)
    pred = Prediction("v(result)", ">=", _v(g, budget) - 1, "edge deletion")
    return SurgeryOutcome(minus, (vmap,), (pred,), "delete-edge", g)


def add_infinity_point(h: LinearHypergraph, x: int, y: int) -> LinearHypergraph:
    """Given disjoint lines ``x`` and ``y``, add one new point on both, so
    the two lines now meet and nothing else changes."""
    if h.lines[x] & h.lines[y]:
        raise ValueError(f"lines {x} and {y} already meet")
    inf = h.num_points
    lines = list(h.lines)
    lines[x] = lines[x] | {inf}
    lines[y] = lines[y] | {inf}
    return validate(lines, inf + 1)


def near_pencil(n: int) -> LinearHypergraph:
    """One line through points ``0..n-2`` plus a two-point line from each of
    them to point ``n-1``."""
    if n < 3:
        raise ValueError("a near-pencil needs at least 3 points")
    lines = [set(range(n - 1))] + [{i, n - 1} for i in range(n - 1)]
    return validate(lines, n)


def check_predictions(
    outcome: SurgeryOutcome, budget: Budget | None = None
) -> list[tuple[Prediction, int, bool]]:
    """Evaluate every prediction by exact solves."""
    results = []
    cache: dict[str, int] = {}
    for p in outcome.predictions:
        q = p.quantity
        if q == "v(result)":
            actual = cache.setdefault(q, _v(outcome.graph, budget))
        elif q == "v(source)":
            actual = cache.setdefault(q, _v(outcome.source, budget))
        elif q == "vbar(result)":
            actual = reduced_linear_intersection_number(outcome.graph, budget).value
        elif q.startswith("extremal(result,"):
            x = int(q.split(",")[1].rstrip(")"))
            actual = int(is_extremal_interior(outcome.graph, x, None, budget))
        else:
            raise ValueError(f"unknown quantity {q!r}")
        results.append((p, actual, p.holds(actual)))
    return results
