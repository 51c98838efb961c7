"""Directed metrics and certification of the product orientations."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .errors import (BoundViolated, FactorTooSmall, NotBridgeless, NotConnected)
from .graph import (INF, Digraph, RootedTree, UndirectedGraph, distance_matrix, eccentricity_profile, has_bridge, is_connected,
                    shortest_path_tree)
from .orient import (OrientedProduct, RuleTag, canonicalize_square,
                     leaf_rules_matching, orient_product)
from .product import EdgeKind, strong_product

TREE_SLACK = 15


class BoundKind(str, enum.Enum):
    TREE_THEOREM = "TreeTheorem"
    CYCLE_PROPOSITION = "CycleProposition"
    COROLLARY = "Corollary"
    CHVATAL_THOMASSEN = "ChvatalThomassen"


@dataclass(frozen=True)
class DiameterReport:
    diameter: float            # int, or INF when not strongly connected
    witness: tuple[int, int] | None
    strongly_connected: bool
    bound: int | None = None
    bound_kind: BoundKind | None = None

    @property
    def slack(self) -> float | None:
        if self.bound is None:
            return None
        return self.bound - self.diameter

    def with_bound(self, bound: int, kind: BoundKind) -> "DiameterReport":
        return replace(self, bound=bound, bound_kind=kind)

    @property
    def within_bound(self) -> bool:
        return self.bound is not None and self.strongly_connected and self.diameter <= self.bound


def directed_diameter(d: Digraph, dist: np.ndarray | None = None) -> DiameterReport:
    """Exact diameter by all-pairs BFS.

    The witness is the lexicographically least ordered pair ``(u, v)``
    attaining the maximum distance (or the least unreachable pair).
    """
    n = d.vertex_count
    if n <= 1:
        return DiameterReport(0, (0, 0) if n else None, True)
    if dist is None:
        dist = distance_matrix(d)
    flat = int(np.argmax(dist))  # first occurrence in row-major order
    u, v = divmod(flat, n)
    value = dist[u, v]
    strong = bool(math.isfinite(value))
    return DiameterReport(int(value) if strong else INF, (u, v), strong)


def _reaches_all(succ: Sequence[Sequence[int]], n: int) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in succ[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return all(seen)


def strongly_connected(d: Digraph) -> bool:
    """Forward and backward reachability from vertex 0."""
    n = d.vertex_count
    if n == 0:
        return True
    return _reaches_all(d.out_arcs, n) and _reaches_all(d.in_arcs, n)


# --- structural invariants ---------------------------------------------------

_CARTESIAN_TAGS = {RuleTag.A, RuleTag.B}
_DIRECT_TAGS = {RuleTag.C, RuleTag.D, RuleTag.E, RuleTag.F, RuleTag.G1, RuleTag.G2}


def check_structure(op: OrientedProduct, *, allow_residual: bool = False) -> list[str]:
    """Structural problems of an orientation; the empty list means none.

    Covers the arc/edge bijection, absence of 2-cycles, in- and out-degree at
    least one everywhere, tag/edge-kind agreement and mutual exclusivity of
    the leaf rules C, D, E, F on every square.
    """
    problems = []
    p = op.product
    d = op.digraph
    if d.arc_count != p.edge_count:
        problems.append(f"{d.arc_count} arcs for {p.edge_count} edges")
    for (t, h, _), e in zip(op.arcs, p.edges):
        if {t, h} != {e.u, e.v}:
            problems.append(f"arc {t}->{h} does not orient edge {e.u}-{e.v}")
        if d.has_arc(h, t):
            problems.append(f"2-cycle {t}<->{h}")
    for v in range(d.vertex_count):
        if not d.out_arcs[v]:
            problems.append(f"vertex {p.label(v)} has out-degree 0")
        if not d.in_arcs[v]:
            problems.append(f"vertex {p.label(v)} has in-degree 0")
    for (_, _, tag), e in zip(op.arcs, p.edges):
        if tag is RuleTag.RESIDUAL:
            if not allow_residual:
                problems.append(f"residual arc on {e.u}-{e.v}")
        elif (tag in _CARTESIAN_TAGS) != (e.kind is not EdgeKind.DIRECT):
            problems.append(f"tag {tag.value} on {e.kind.value} edge {e.u}-{e.v}")
    f1, f2 = op.factors
    if f1 is not None and f2 is not None:
        seen = set()
        for (t, h, tag), e in zip(op.arcs, p.edges):
            if tag not in _DIRECT_TAGS:
                continue
            sq = canonicalize_square((p.coords(e.u), p.coords(e.v)), f1, f2)
            if sq.key in seen:
                continue
            seen.add(sq.key)
            matched = leaf_rules_matching(sq, f1, f2)
            if len(matched) > 1:
                problems.append(f"square {sq.key} matches rules {[m.value for m in matched]}")
    return problems


# --- local lemmas ------------------------------------------------------------

@dataclass(frozen=True)
class LemmaViolation:
    lemma: str                      # Diag4, GStep4, HStep5, SquarePattern, FourCycleAlternation
    vertices: tuple[tuple[int, int], ...]
    measured: float | None = None


LOCAL_BOUNDS = {"Diag4": 4, "GStep4": 4, "HStep5": 5}


def _ordered_edges(t: RootedTree) -> np.ndarray:
    e = np.array(t.tree.edges(), dtype=np.int64).reshape(-1, 2)
    return np.concatenate([e, e[:, ::-1]])


def _distance_violations(lemma, dist, src, dst, nh, bound):
    vals = dist[src, dst]
    bad = np.argwhere(vals > bound)
    out = []
    for idx in map(tuple, bad):
        s, t = int(src[idx]), int(dst[idx])
        out.append(LemmaViolation(lemma, (divmod(s, nh), divmod(t, nh)), float(vals[idx])))
    return out


def _is_four_cycle(op: OrientedProduct, a: int, b: int, c: int, d: int) -> bool:
    """Whether the Cartesian arcs of {a,b} x {c,d} form a directed cycle."""
    has = op.has_arc
    ring = [(a, c), (b, c), (b, d), (a, d)]
    fwd = all(has(ring[i], ring[(i + 1) % 4]) for i in range(4))
    bwd = all(has(ring[(i + 1) % 4], ring[i]) for i in range(4))
    return fwd or bwd


def check_local_lemmas(op: OrientedProduct, dist: np.ndarray | None = None) -> list[LemmaViolation]:
    """Check the local path-length and pattern lemmas on a tree-product orientation.

    Distances: at most 4 across a diagonal, at most 4 along a G-layer edge,
    at most 5 along an H-layer edge. Patterns: the forced orientation of
    diagonals on squares free of leaves, and alternation of directed
    4-cycles along root-monotone paths of length two.
    """
    t1, t2 = op.factors
    if not (isinstance(t1, RootedTree) and isinstance(t2, RootedTree)
            and t1.tree == op.product.g and t2.tree == op.product.h):
        raise TypeError("local lemmas are stated for products of rooted trees")
    if dist is None:
        dist = distance_matrix(op.digraph)
    nh = t2.vertex_count
    X, Y = _ordered_edges(t1), _ordered_edges(t2)
    xs = np.arange(t1.vertex_count)
    ys = np.arange(nh)
    out: list[LemmaViolation] = []

    src = X[:, 0, None] * nh + Y[None, :, 0]
    dst = X[:, 1, None] * nh + Y[None, :, 1]
    out += _distance_violations("Diag4", dist, src, dst, nh, LOCAL_BOUNDS["Diag4"])
    src = X[:, 0, None] * nh + ys[None, :]
    dst = X[:, 1, None] * nh + ys[None, :]
    out += _distance_violations("GStep4", dist, src, dst, nh, LOCAL_BOUNDS["GStep4"])
    src = xs[:, None] * nh + Y[None, :, 0]
    dst = xs[:, None] * nh + Y[None, :, 1]
    out += _distance_violations("HStep5", dist, src, dst, nh, LOCAL_BOUNDS["HStep5"])

    out += _square_pattern_violations(op, t1, t2, X, Y)
    out += _alternation_violations(op, t1, t2)
    return out


def _square_pattern_violations(op, t1, t2, X, Y):
    out = []
    inner_x = [(int(a), int(b)) for a, b in X if not t1.is_leaf(a) and not t1.is_leaf(b)]
    inner_y = [(int(a), int(b)) for a, b in Y if not t2.is_leaf(a) and not t2.is_leaf(b)]
    has = op.has_arc
    for x1, x2 in inner_x:
        x1_to_x2 = t1.parent[x2] == x1
        for y1, y2 in inner_y:
            same = t1.side[x1] is t2.side[y1]
            if same != x1_to_x2:   # pattern (a)
                ok = has((x1, y1), (x2, y2)) and has((x2, y1), (x1, y2))
            else:                  # pattern (b)
                ok = has((x1, y2), (x2, y1)) and has((x2, y2), (x1, y1))
            if not ok:
                out.append(LemmaViolation("SquarePattern", ((x1, y1), (x2, y1), (x1, y2), (x2, y2))))
    return out


def _monotone_paths(t: RootedTree):
    """Paths ``a, b, c`` whose middle vertex is not the path's closest-to-root vertex."""
    for b in range(t.vertex_count):
        p = t.parent[b]
        if p is None:
            continue
        for c in t.children(b):
            yield p, b, c
            yield c, b, p


def _alternation_violations(op, t1, t2):
    out = []
    x_edges = t1.tree.edges()
    y_edges = t2.tree.edges()
    for x1, x2, x3 in _monotone_paths(t1):
        for y1, y2 in y_edges:
            if not _is_four_cycle(op, x1, x2, y1, y2) and not _is_four_cycle(op, x2, x3, y1, y2):
                out.append(LemmaViolation("FourCycleAlternation",
                                          ((x1, y1), (x2, y1), (x3, y1), (x1, y2), (x2, y2), (x3, y2))))
    for y1, y2, y3 in _monotone_paths(t2):
        for x1, x2 in x_edges:
            if not _is_four_cycle(op, x1, x2, y1, y2) and not _is_four_cycle(op, x1, x2, y2, y3):
                out.append(LemmaViolation("FourCycleAlternation",
                                          ((x1, y1), (x1, y2), (x1, y3), (x2, y1), (x2, y2), (x2, y3))))
    return out


# --- bounds ------------------------------------------------------------------

def tree_bound(t1: RootedTree, t2: RootedTree) -> int:
    d1 = eccentricity_profile(t1.tree).diameter
    d2 = eccentricity_profile(t2.tree).diameter
    return max(d1, d2) + TREE_SLACK


def _enforce(report: DiameterReport, what: str) -> DiameterReport:
    if not report.within_bound:
        raise BoundViolated(
            f"{what}: diameter {report.diameter} exceeds bound {report.bound} at {report.witness}",
            witness=report.witness)
    return report


def certify_tree_bound(op: OrientedProduct, t1: RootedTree, t2: RootedTree,
                       dist: np.ndarray | None = None) -> DiameterReport:
    report = directed_diameter(op.digraph, dist).with_bound(tree_bound(t1, t2), BoundKind.TREE_THEOREM)
    return _enforce(report, "tree product")


def certify_cycle_bound(op: OrientedProduct, m: int, n: int, dist: np.ndarray | None = None) -> DiameterReport:
    from .cycle_orient import claimed_cycle_diameter

    report = directed_diameter(op.digraph, dist).with_bound(claimed_cycle_diameter(m, n),
                                                            BoundKind.CYCLE_PROPOSITION)
    return _enforce(report, "cycle product")


def corollary_bound(g: UndirectedGraph, h: UndirectedGraph) -> int:
    r = max(eccentricity_profile(g).radius, eccentricity_profile(h).radius)
    return 2 * r + TREE_SLACK


def _require_factor(g: UndirectedGraph, name: str) -> None:
    if g.vertex_count < 2:
        raise FactorTooSmall(f"factor {name} needs at least two vertices")
    if not is_connected(g):
        raise NotConnected(f"factor {name} is not connected")


def spanning_trees(g: UndirectedGraph, h: UndirectedGraph) -> tuple[RootedTree, RootedTree]:
    """Shortest-path trees of both factors rooted at their smallest center."""
    return (shortest_path_tree(g, eccentricity_profile(g).center),
            shortest_path_tree(h, eccentricity_profile(h).center))


def build_general_orientation(g: UndirectedGraph, h: UndirectedGraph) -> OrientedProduct:
    _require_factor(g, "G")
    _require_factor(h, "H")
    t1, t2 = spanning_trees(g, h)
    return orient_product(strong_product(g, h), t1, t2, spanning=(t1.tree, t2.tree))


def general_orient(g: UndirectedGraph, h: UndirectedGraph) -> tuple[OrientedProduct, DiameterReport]:
    """Orient G ⊠ H through shortest-path trees of the factors.

    The spanning product ``T1 ⊠ T2`` is oriented by the tree rules; every
    other edge points from its smaller to its larger linear index.
    """
    op = build_general_orientation(g, h)
    report = directed_diameter(op.digraph).with_bound(corollary_bound(g, h), BoundKind.COROLLARY)
    return op, _enforce(report, "general product")


def chvatal_thomassen_bound(g: UndirectedGraph) -> int:
    """``2r^2 + 2r`` for a bridgeless connected graph of radius ``r``."""
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    bridged, witness = has_bridge(g)
    if bridged:
        raise NotBridgeless(f"edge {witness} is a bridge", bridge=witness)
    r = eccentricity_profile(g).radius
    return 2 * r * r + 2 * r
