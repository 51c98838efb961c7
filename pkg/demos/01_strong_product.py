"""
Building a strong product
=========================

Vertices of G ⊠ H are pairs (x, y), stored at linear index x * |V(H)| + y.
"""

from strongprod import EdgeKind, distance_matrix, strong_product
from strongprod.cycle_orient import cycle_graph
from strongprod.generators import path_graph

# a path and a cycle
g = path_graph(3)
h = cycle_graph(4)
p = strong_product(g, h)
print(p.vertex_count, "vertices,", p.edge_count, "edges")

# every edge is a G-layer edge, an H-layer edge or a diagonal
for kind in EdgeKind:
    print(f"  {kind.value:11s} {p.kind_counts[kind]}")

# distances in the product are the max of the factor distances
d = distance_matrix(p.graph)
a, b = p.index(0, 0), p.index(2, 1)
print("d((0,0), (2,1)) =", int(d[a, b]))
