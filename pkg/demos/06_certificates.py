"""
Certificates
============

A certificate is a JSON document that can be re-checked without trusting
the solver.  Changing any single field makes verification fail.
"""

import json

from linspect import graph
from linspect.certificate import build_certificate, dumps, verify_certificate
from linspect.solver import linear_intersection_number

g = graph.cycle_graph(5)
doc = build_certificate(g, linear_intersection_number(g), deterministic=True)
print(dumps(doc)[:400], "...")

print("verify:", verify_certificate(doc).ok)

# Tamper with one clique of the cover.
bad = json.loads(json.dumps(doc))
bad["cover"][0] = bad["cover"][0][:1]
verdict = verify_certificate(bad)
print("after tampering:", verdict.ok, verdict.errors)
