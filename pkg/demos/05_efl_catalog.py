"""
Checking chi(G) <= v(G) over a catalog
======================================

A catalog is a plain graph6 file with one graph per line.  This script
writes all graphs on up to five vertices (generated here by brute force and
deduplicated with canonical forms) and runs the check through the CLI.
"""

import itertools
import tempfile
from pathlib import Path

from linspect import graph
from linspect.cli import run_command
from linspect.io import to_graph6

seen = {}
for n in range(1, 6):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = graph.from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        seen.setdefault(graph.canonical_form(g), g)
print(len(seen), "graphs on 1..5 vertices")  # 1 + 2 + 4 + 11 + 34

with tempfile.TemporaryDirectory() as tmp:
    cat = Path(tmp) / "upto5.g6"
    cat.write_text("".join(to_graph6(g) + "\n" for g in seen.values()))

    class Tail:
        # keep only the summary line
        last = ""

        def write(self, s):
            if s.strip():
                self.last = s.strip()

    out = Tail()
    code = run_command(["batch", str(cat), "--check", "efl"], out)
    print(out.last, "exit code", code)
