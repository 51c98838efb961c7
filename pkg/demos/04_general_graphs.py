"""
Arbitrary connected factors
===========================

Orient shortest-path trees of both factors with the tree rules and point
the remaining edges from lower to higher index. The diameter stays within
2 * max(rad G, rad H) + 15.
"""

from strongprod import general_orient, strong_product
from strongprod.generators import complete_graph, petersen_graph
from strongprod.metrics import chvatal_thomassen_bound

g, h = petersen_graph(), complete_graph(3)
op, rep = general_orient(g, h)
print(f"Petersen x K3: diameter {rep.diameter}, bound {rep.bound}")
print(op.rule_histogram)

# the generic bound for any bridgeless graph of the same radius
print("2r^2 + 2r:", chvatal_thomassen_bound(strong_product(g, h).graph))
