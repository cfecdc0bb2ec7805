"""Self-contained JSON certificates for solve results, and their verifier.

The verifier does not trust the search: it re-checks the cover conditions,
rebuilds the hypergraph from the cover, validates it, compares its
intersection graph with the input through canonical labeling, recomputes
the bounds and the vertex classification, and for small graphs re-derives the optimum with the
brute-force oracle.
"""

from __future__ import annotations

import datetime as _dt
import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .classify import VertexClassification, classify_vertices
from .graph import Graph, from_edge_list, is_isomorphic
from .hypergraph import HypergraphError, from_clique_cover, intersection_graph, validate
from .io import to_graph6
from .solver import FULL, REDUCED, Budget, CliqueCover, SolveResult, bounds, verify_cover

SCHEMA = "linspect/1"
SEED = 0  # the solver is deterministic; recorded for reproducibility
ORACLE_CAP = 7
REDUCED_ORACLE_CAP = 8

_REQUIRED = (
    "schema",
    "tool_version",
    "command",
    "mode",
    "graph",
    "graph6",
    "value",
    "cover",
    "realization",
    "bounds",
    "classification",
    "seed",
    "deterministic",
)


def build_certificate(
    g: Graph,
    result: SolveResult,
    *,
    classification: VertexClassification | None = None,
    deterministic: bool = True,
    budget: Budget | None = None,
) -> dict[str, Any]:
    """The certificate document for ``result``.  The vertex classification is
    always included; it is computed here unless passed in."""
    if classification is None:
        classification = classify_vertices(g, budget)
    mode = result.certificate.mode
    doc: dict[str, Any] = {
        "schema": SCHEMA,
        "tool_version": __version__,
        "command": "solve",
        "mode": mode,
        "graph": {"n": g.n, "edges": [list(e) for e in g.edges]},
        "graph6": to_graph6(g),
        "value": result.value,
        "cover": result.certificate.to_json(),
        "realization": result.realization.to_json() if result.realization is not None else None,
        "bounds": (result.bounds or bounds(g)).to_json(),
        "classification": classification.to_json(),
        "seed": SEED,
        "deterministic": deterministic,
    }
    if not deterministic:
        doc["timestamp"] = _dt.datetime.now(_dt.timezone.utc).isoformat()
    return doc


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


@dataclass
class CertificateVerdict:
    ok: bool
    errors: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _timestamp_ok(ts: Any) -> bool:
    if not isinstance(ts, str):
        return False
    try:
        return _dt.datetime.fromisoformat(ts).utcoffset() is not None
    except ValueError:
        return False


def verify_certificate(doc: Any, *, recheck_optimality: bool = True) -> CertificateVerdict:
    errors: list[str] = []
    notes: list[str] = []
    try:
        _verify(doc, errors, notes, recheck_optimality)
    except (TypeError, ValueError, KeyError, AttributeError, IndexError) as exc:
        errors.append(f"malformed document: {exc}")
    return CertificateVerdict(not errors, errors, notes)


def _verify(doc: Any, errors: list[str], notes: list[str], recheck: bool) -> None:
    if not isinstance(doc, dict):
        errors.append("document is not a JSON object")
        return
    missing = [k for k in _REQUIRED if k not in doc]
    extra = sorted(set(doc) - set(_REQUIRED) - {"timestamp"})
    if missing or extra:
        errors.append(f"missing keys {missing}, unexpected keys {extra}")
        return
    if doc["schema"] != SCHEMA:
        errors.append(f"schema {doc['schema']!r} is not {SCHEMA!r}")
    if doc["tool_version"] != __version__:
        errors.append(f"tool_version {doc['tool_version']!r} does not match {__version__!r}")
    if doc["command"] != "solve":
        errors.append(f"command {doc['command']!r} is not 'solve'")
    if doc["seed"] != SEED or not _int(doc["seed"]):
        errors.append(f"seed {doc['seed']!r} is not {SEED}")
    if not isinstance(doc["deterministic"], bool):
        errors.append("deterministic flag is not a boolean")
    elif doc["deterministic"] == ("timestamp" in doc):
        errors.append("timestamp must be present exactly when the document is not deterministic")
    elif "timestamp" in doc and not _timestamp_ok(doc["timestamp"]):
        errors.append("timestamp is not an ISO-8601 time with a UTC offset")
    mode = doc["mode"]
    if mode not in (FULL, REDUCED):
        errors.append(f"unknown mode {mode!r}")
        return

    gd = doc["graph"]
    if not isinstance(gd, dict) or set(gd) != {"n", "edges"} or not _int(gd["n"]):
        errors.append("graph must be {'n': int, 'edges': [[a, b], ...]}")
        return
    pairs = [tuple(e) for e in gd["edges"]]
    if any(len(p) != 2 or not all(_int(x) for x in p) for p in pairs):
        errors.append("graph edges must be integer pairs")
        return
    if len(set(map(frozenset, pairs))) != len(pairs):
        errors.append("graph lists an edge twice")
        return
    g = from_edge_list(gd["n"], pairs)
    if [list(e) for e in g.edges] != [list(p) for p in pairs]:
        errors.append("graph edges are not in canonical sorted (a < b) order")
    if doc["graph6"] != to_graph6(g):
        errors.append("graph6 field does not encode the graph")

    value = doc["value"]
    if not _int(value):
        errors.append("value is not an integer")
        return
    raw = doc["cover"]
    if not isinstance(raw, list) or any(
        not isinstance(c, list) or not all(_int(x) for x in c) or sorted(set(c)) != c for c in raw
    ):
        errors.append("cover must be a list of sorted, duplicate-free integer lists")
        return
    cover = CliqueCover(tuple(frozenset(c) for c in raw), mode)
    verdict = verify_cover(g, cover)
    if not verdict:
        errors.append(f"cover rejected: {verdict.reason}")
    if len(raw) != value:
        errors.append(f"cover has {len(raw)} cliques but value is {value}")

    real = doc["realization"]
    if mode == REDUCED:
        if real is not None:
            errors.append("reduced certificates carry no realisation")
    elif not isinstance(real, dict) or set(real) != {"points", "lines"}:
        errors.append("realization must be {'points': int, 'lines': [[...], ...]}")
    else:
        try:
            h = validate(real["lines"], real["points"])
        except HypergraphError as exc:
            errors.append(f"realisation is not a linear hypergraph: {exc}")
        else:
            if h.v != value:
                errors.append(f"realisation has {h.v} points but value is {value}")
            if not is_isomorphic(intersection_graph(h), g):
                errors.append("realisation's intersection graph is not isomorphic to the graph")
            if verdict:
                expected = from_clique_cover(cover.cliques, g.n).to_json()
                if expected != {"points": real["points"], "lines": real["lines"]}:
                    errors.append("realisation is not the one induced by the cover")

    report = bounds(g)
    if doc["bounds"] != report.to_json():
        errors.append("bounds report does not match recomputation")
    if mode == FULL and not report.best_lower <= value <= report.edge_bound:
        errors.append(f"value {value} outside [{report.best_lower}, {report.edge_bound}]")

    if doc["classification"] != classify_vertices(g).to_json():
        errors.append("vertex classification does not match recomputation")

    if not recheck or errors:
        return
    if mode == FULL and g.n <= ORACLE_CAP:
        from .oracle import brute_force_v

        if brute_force_v(g) != value:
            errors.append("value is not optimal according to the brute-force oracle")
    elif mode == REDUCED and g.n <= REDUCED_ORACLE_CAP:
        from .cliques import reduced_v_via_clique_graph

        if reduced_v_via_clique_graph(g) != value:
            errors.append("value is not optimal according to the clique-graph route")
    else:
        notes.append("optimality not independently re-derived (graph above oracle cap)")
