"""
Interior vertices and almost triangle-free graphs
=================================================

For graphs built from a triangle-free base by gluing triangles at single
vertices, v(G) equals m + l + 2e, and no other graph reaches that value.
"""

from linspect import graph
from linspect.classify import classify_vertices, closed_form_v, is_almost_triangle_free
from linspect.solver import linear_intersection_number

# The paw: a triangle with a pendant edge.
paw = graph.from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
cls = classify_vertices(paw)
print("interior:", sorted(cls.interior))
print("extremal strongly interior:", sorted(cls.extremal_strongly_interior))

dec = is_almost_triangle_free(paw)
print("base vertices:", sorted(dec.base_vertices))
for t in dec.triangles:
    print("triangle glued at", t.attachment, "new vertices", t.new_vertices)

# The closed form agrees with the search; the diamond has no closed form.
g = graph.disjoint_sum(paw, graph.complete_graph(2))
cf = closed_form_v(g)
print("closed form:", cf.value, [rule for _, rule, _ in cf.parts])
print("search:", linear_intersection_number(g, fast_path=False).value)
diamond = graph.from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
print("diamond almost triangle-free?", is_almost_triangle_free(diamond) is not None)
