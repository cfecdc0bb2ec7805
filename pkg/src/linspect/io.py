"""Graph text formats: graph6 and a plain edge list."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graph import Graph, GraphError, from_edge_list


class ParseError(ValueError):
    pass


def _n_to_bytes(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n < 68719476736:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode without the optional ``>>graph6<<`` header."""
    out = _n_to_bytes(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(b + 63) for b in out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= b <= 63 for b in data):
        raise ParseError(f"graph6 string {s!r} has characters outside '?'..'~'")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        body = data[8:]
    else:
        raise ParseError(f"malformed graph6 header in {s!r}")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def from_edgelist(text: str) -> Graph:
    """First non-comment line is ``n``; each further line is ``a b``."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("edge list is empty")
    lineno, head = rows[0]
    if len(head) != 1 or not head[0].isdigit():
        raise ParseError(f"line {lineno}: expected vertex count, got {' '.join(head)!r}")
    n = int(head[0])
    pairs = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'a b'")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex") from None
    try:
        return from_edge_list(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def to_edgelist(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{a} {b}\n" for a, b in g.edges])


def sniff_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return "edgelist" if line.split()[0].isdigit() else "graph6"
    return "edgelist"


def parse_graph(text: str, format: str = "auto") -> Graph:
    if format == "auto":
        format = sniff_format(text)
    if format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, got {len(lines)}")
        return from_graph6(lines[0])
    if format == "edgelist":
        return from_edgelist(text)
    raise ValueError(f"unknown format {format!r}")


def read_graph(path: str | Path, format: str = "auto") -> Graph:
    return parse_graph(Path(path).read_text(), format)


def iter_catalog(path: str | Path) -> Iterator[tuple[int, str]]:
    """``(line number, graph6 string)`` for each non-blank line."""
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if s and not s.startswith("#"):
                yield lineno, s
