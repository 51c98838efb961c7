"""
Orienting a product of two trees
================================

Roots default to the smallest center of each tree. Cartesian edges follow
rules A and B, diagonals rules C to G2.
"""

from pathlib import Path

from strongprod import RootedTree, certify_tree_bound, orient_tree_product
from strongprod.formats import export_dot
from strongprod.generators import path_graph, star_graph
from strongprod.metrics import check_local_lemmas

t1 = RootedTree.from_tree(path_graph(9))
t2 = RootedTree.from_tree(path_graph(8))
op = orient_tree_product(t1, t2)

# which rule oriented how many arcs
print(op.rule_histogram)

# diameter against max(diam T1, diam T2) + 15
rep = certify_tree_bound(op, t1, t2)
print(f"diameter {rep.diameter}, bound {rep.bound}, slack {rep.slack}")
print("local lemma violations:", len(check_local_lemmas(op)))

# a star against a path, rooted at a leaf of the path this time
s = RootedTree.from_tree(star_graph(5), 0)
q = RootedTree.from_tree(path_graph(4), 0)
small = orient_tree_product(s, q)
print("K1,5 x P4:", certify_tree_bound(small, s, q).diameter)

# render with graphviz: neato -n2 -Tsvg star_path.dot
Path("star_path.dot").write_text(export_dot(small))
