"""
Computing v(G) with a certificate
=================================

The solver returns the number together with the clique family that attains
it and the linear hypergraph built from that family.
"""

from linspect import graph
from linspect.hypergraph import intersection_graph
from linspect.solver import linear_intersection_number, reduced_linear_intersection_number

# The diamond: K4 with the edge 2-3 removed.
diamond = graph.from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
res = linear_intersection_number(diamond)
print("v(diamond) =", res.value)
print("cliques:", [sorted(c) for c in res.certificate.cliques])

# Points of the hypergraph are the cliques; line a holds the cliques that contain a.
h = res.realization
print("points:", h.v, "lines:", [sorted(line) for line in h.lines])
assert intersection_graph(h) == diamond

# The reduced number drops singletons and the "every vertex twice" condition.
print("vbar(diamond) =", reduced_linear_intersection_number(diamond).value)

# A few of the settled families.
for name, g in [("K6", graph.complete_graph(6)), ("C7", graph.cycle_graph(7)),
                ("K1", graph.complete_graph(1)), ("P5", graph.path_graph(5))]:
    r = linear_intersection_number(g, fast_path=False)
    print(f"v({name}) = {r.value}  (search nodes: {r.stats.nodes})")
