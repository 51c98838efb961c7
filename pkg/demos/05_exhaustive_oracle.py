"""
How far from optimal?
=====================

For tiny products every orientation can be tried. P2 x P3 has 11 edges,
so 2048 orientations.
"""

from strongprod import RootedTree, directed_diameter, orient_tree_product
from strongprod.generators import path_graph
from strongprod.oracle import brute_force_diam_min

t1 = RootedTree.from_tree(path_graph(2))
t2 = RootedTree.from_tree(path_graph(3))
op = orient_tree_product(t1, t2)

res = brute_force_diam_min(op.product.graph)
rule = directed_diameter(op.digraph).diameter
print(f"best possible {res.diam_min}, rules give {rule}")
print(f"{res.strong_count} of {res.orientations_tested} orientations are strong")

# the best orientation, one bit per edge (1 = reversed)
print("witness:", "".join(map(str, res.witness_orientation)))
