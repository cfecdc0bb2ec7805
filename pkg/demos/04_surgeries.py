"""
Surgeries and their predicted effect on v
=========================================

Each surgery returns the new graph together with predictions, and
check_predictions tests every prediction against exact solves.
"""

from linspect import graph
from linspect.constructions import check_predictions, collapse, join_at_vertex, remove_clique


def show(outcome):
    print(outcome.tag, "->", outcome.graph)
    for pred, actual, ok in check_predictions(outcome):
        print(f"    {pred}   actual {actual}   {'ok' if ok else 'FAILED'}")


k3 = graph.complete_graph(3)
p3 = graph.path_graph(3)

# Two triangles at a vertex (the bowtie): no extremal glue vertex, so v adds up.
show(join_at_vertex(k3, k3, 0, 0))
# Two paths glued at leaves: both leaves are extremal, so two points are saved.
show(join_at_vertex(p3, p3, 0, 0))

# Antipodal vertices of C8 collapse to two 4-cycles sharing a vertex, and v stays 8.
show(collapse(graph.cycle_graph(8), 0, 4))

# Removing the triangle of the paw leaves K2 with an extremal attachment: strict.
paw = graph.from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
show(remove_clique(paw, {0, 1, 2}))
