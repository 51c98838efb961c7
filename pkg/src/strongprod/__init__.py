"""Strong orientations of strong products of graphs with small diameter."""

from .cycle_orient import CycleFactor, claimed_cycle_diameter, cycle_graph, orient_cycle_product
from .errors import StrongProdError
from .graph import (INF, Digraph, EccentricityProfile, RootedTree, Side, UndirectedGraph,
                    bfs_distances, bipartition, distance_matrix, eccentricity_profile, has_bridge,
                    shortest_path_tree)
from .metrics import (BoundKind, DiameterReport, LemmaViolation, certify_cycle_bound,
                      certify_tree_bound, chvatal_thomassen_bound, check_local_lemmas,
                      check_structure, directed_diameter, general_orient, strongly_connected)
from .oracle import OracleResult, brute_force_diam_min, gap_report
from .orient import (CanonicalSquare, OrientedProduct, RuleTag, canonicalize_square,
                     orient_cartesian_edge, orient_direct_edge, orient_tree_product)
from .product import EdgeKind, StrongProduct, product_distance_check, strong_product

__version__ = "0.1.0"

__all__ = [
    "INF", "BoundKind", "CanonicalSquare", "CycleFactor", "DiameterReport", "Digraph",
    "EccentricityProfile", "EdgeKind", "LemmaViolation", "OracleResult", "OrientedProduct",
    "RootedTree", "RuleTag", "Side", "StrongProdError", "StrongProduct", "UndirectedGraph",
    "bfs_distances", "bipartition", "brute_force_diam_min", "canonicalize_square",
    "certify_cycle_bound", "certify_tree_bound", "check_local_lemmas", "check_structure",
    "chvatal_thomassen_bound", "claimed_cycle_diameter", "cycle_graph", "directed_diameter",
    "distance_matrix", "eccentricity_profile", "gap_report", "general_orient", "has_bridge",
    "orient_cartesian_edge", "orient_cycle_product", "orient_direct_edge", "orient_tree_product",
    "product_distance_check", "shortest_path_tree", "strong_product", "strongly_connected",
]
