"""
Lower and upper bounds
======================

Every bound in the report is exact for the graph at hand.  The solver uses
the best of them to stop early.
"""

from linspect import graph
from linspect.solver import bounds, linear_intersection_number

for name, g in [
    ("C5", graph.cycle_graph(5)),
    ("K5", graph.complete_graph(5)),
    ("K_{3,3}", graph.complete_bipartite(3, 3)),
    ("Petersen", graph.petersen_graph()),
]:
    rep = bounds(g)
    v = linear_intersection_number(g).value
    print(f"{name}: v = {v}, best lower = {rep.best_lower} ({rep.binding}), "
          f"edge bound = {rep.edge_bound}")
    for k, b in rep.lower_bounds().items():
        print(f"    {k:<14}{b}")

# On C5 the flag bound f/omega is tight, on K_n the matching bound n/alpha is.
