"""Orientation of strong products of trees by the layer and diagonal rules.

Layer (Cartesian) edges follow the factor orientation or its reverse
depending on the parity class of the fixed coordinate (rules A and B).
Diagonals are decided one 2x2 square at a time: the leaf/root rules C, D,
E, F are tried first and the parity rules G1/G2 apply otherwise. A rule
always fixes both diagonals of its square, so the square is the unit of
work and is memoized.

A *factor* is anything exposing ``side``, ``root``, ``is_leaf(v)`` and
``arc_tail(u, v)``: a :class:`~strongprod.graph.RootedTree`, or the cyclic
factor used for products of even cycles (which has no root and no leaves).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Protocol, Sequence

from .errors import FactorTooSmall, RuleConflict, WrongEdgeKind
from .graph import Digraph, RootedTree, Side
from .product import EdgeKind, StrongProduct, classify_edge, strong_product

Vertex = tuple[int, int]
Arc = tuple[Vertex, Vertex]


class RuleTag(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G1 = "G1"
    G2 = "G2"
    RESIDUAL = "Residual"


LEAF_RULES = (RuleTag.C, RuleTag.D, RuleTag.E, RuleTag.F)


class Factor(Protocol):
    side: Sequence[Side]
    root: int | None

    def is_leaf(self, v: int) -> bool: ...

    def arc_tail(self, u: int, v: int) -> int: ...


@dataclass(frozen=True)
class CanonicalSquare:
    """A direct edge relabelled so that ``x1 -> x2`` and ``y1 -> y2`` in the factors.

    ``which_diagonal`` is ``"main"`` for the edge ``(x1,y1)(x2,y2)`` and
    ``"anti"`` for ``(x1,y2)(x2,y1)``.
    """

    x1: int
    x2: int
    y1: int
    y2: int
    which_diagonal: str

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.x1, self.x2, self.y1, self.y2)

    @property
    def main(self) -> tuple[Vertex, Vertex]:
        return (self.x1, self.y1), (self.x2, self.y2)

    @property
    def anti(self) -> tuple[Vertex, Vertex]:
        return (self.x1, self.y2), (self.x2, self.y1)


@dataclass(frozen=True)
class SquareOrientation:
    rule: RuleTag
    main: Arc
    anti: Arc

    def arc_for(self, which: str) -> Arc:
        return self.main if which == "main" else self.anti


def canonicalize_square(edge: tuple[Vertex, Vertex], t1: Factor, t2: Factor) -> CanonicalSquare:
    (xa, ya), (xb, yb) = edge
    if classify_edge(xa, ya, xb, yb) is not EdgeKind.DIRECT:
        raise WrongEdgeKind(f"{edge} is not a direct edge")
    x1 = t1.arc_tail(xa, xb)
    x2 = xb if x1 == xa else xa
    y1 = t2.arc_tail(ya, yb)
    y2 = yb if y1 == ya else ya
    which = "main" if {(x1, y1), (x2, y2)} == {(xa, ya), (xb, yb)} else "anti"
    return CanonicalSquare(x1, x2, y1, y2, which)


def leaf_rules_matching(sq: CanonicalSquare, t1: Factor, t2: Factor) -> list[RuleTag]:
    """Every one of C, D, E, F whose hypothesis holds for the square."""
    x1, x2, y1, y2 = sq.key
    A = Side.A
    x2_leaf_a = t1.is_leaf(x2) and t1.side[x2] is A
    y2_leaf = t2.is_leaf(y2)
    matched = []
    if x1 == t1.root and y2_leaf and t2.side[y2] is A:
        matched.append(RuleTag.C)
    if x2_leaf_a and y1 == t2.root and not y2_leaf:
        matched.append(RuleTag.D)
    if x2_leaf_a and y1 == t2.root and y2_leaf:
        matched.append(RuleTag.E)
    if x2_leaf_a and y2_leaf and t2.side[y2] is Side.B and y1 != t2.root:
        matched.append(RuleTag.F)
    return matched


def orient_square(sq: CanonicalSquare, t1: Factor, t2: Factor) -> SquareOrientation:
    """Orient both diagonals of the square ``{x1,x2} x {y1,y2}``."""
    x1, x2, y1, y2 = sq.key
    a, b = (x1, y1), (x2, y2)   # main diagonal endpoints
    c, d = (x1, y2), (x2, y1)   # anti diagonal endpoints
    matched = leaf_rules_matching(sq, t1, t2)
    if len(matched) > 1:
        raise RuleConflict(f"rules {[m.value for m in matched]} all match square {sq.key}",
                           square=sq, rules=matched)
    if matched:
        rule = matched[0]
        if rule in (RuleTag.C, RuleTag.D):
            return SquareOrientation(rule, (a, b), (c, d))
        if rule is RuleTag.E:
            return SquareOrientation(rule, (b, a), (c, d))
        return SquareOrientation(rule, (b, a), (d, c))  # F
    if t1.side[x1] is not t2.side[y1]:
        return SquareOrientation(RuleTag.G1, (a, b), (d, c))
    return SquareOrientation(RuleTag.G2, (b, a), (c, d))


def orient_direct_edge(edge: tuple[Vertex, Vertex], t1: Factor, t2: Factor) -> tuple[Arc, RuleTag]:
    sq = canonicalize_square(edge, t1, t2)
    so = orient_square(sq, t1, t2)
    return so.arc_for(sq.which_diagonal), so.rule


def orient_cartesian_edge(edge: tuple[Vertex, Vertex], t1: Factor, t2: Factor) -> tuple[Arc, RuleTag]:
    (xa, ya), (xb, yb) = edge
    kind = classify_edge(xa, ya, xb, yb)
    if kind is EdgeKind.CARTESIAN_G:
        y = ya
        tail = t1.arc_tail(xa, xb)
        head = xb if tail == xa else xa
        if t2.side[y] is Side.A:
            tail, head = head, tail
        return ((tail, y), (head, y)), RuleTag.A
    if kind is EdgeKind.CARTESIAN_H:
        x = xa
        tail = t2.arc_tail(ya, yb)
        head = yb if tail == ya else ya
        if t1.side[x] is Side.B:
            tail, head = head, tail
        return ((x, tail), (x, head)), RuleTag.B
    raise WrongEdgeKind(f"{edge} is a direct edge")


class OrientedProduct:
    """A total orientation of a strong product, one tagged arc per edge.

    ``arcs[i]`` orients ``product.edges[i]``; it is a ``(tail, head, tag)``
    triple of linear vertex indices.
    """

    def __init__(self, product: StrongProduct, arcs: Sequence[tuple[int, int, RuleTag]], factors=(None, None)):
        if len(arcs) != product.edge_count:
            raise ValueError(f"{len(arcs)} arcs for {product.edge_count} edges")
        for e, (t, h, _) in zip(product.edges, arcs):
            if {t, h} != {e.u, e.v}:
                raise ValueError(f"arc {t}->{h} does not orient edge {e.u}-{e.v}")
        self.product = product
        self.arcs = tuple(arcs)
        self.factors = tuple(factors)
        self.digraph = Digraph(product.vertex_count, ((t, h) for t, h, _ in self.arcs))

    @cached_property
    def rule_of_arc(self) -> dict[tuple[int, int], RuleTag]:
        return {(t, h): tag for t, h, tag in self.arcs}

    @cached_property
    def rule_histogram(self) -> dict[str, int]:
        counts = Counter(tag.value for _, _, tag in self.arcs)
        return {tag.value: counts[tag.value] for tag in RuleTag if counts[tag.value]}

    def has_arc(self, a: Vertex, b: Vertex) -> bool:
        p = self.product
        return self.digraph.has_arc(p.index(*a), p.index(*b))

    @property
    def vertex_count(self) -> int:
        return self.product.vertex_count

    def __repr__(self) -> str:
        return f"OrientedProduct({self.product.g_count}x{self.product.h_count}, {self.rule_histogram})"


def orient_product(product: StrongProduct, f1: Factor, f2: Factor, *,
                   spanning: tuple | None = None) -> OrientedProduct:
    """Apply rules A to G to every edge of ``product``.

    With ``spanning=(tree1, tree2)`` only edges of ``tree1 ⊠ tree2`` are
    rule-oriented; the rest go from the smaller to the larger linear index
    and are tagged Residual.
    """
    nh = product.h_count
    squares: dict[tuple[int, int, int, int], SquareOrientation] = {}
    arcs = []
    for e in product.edges:
        xa, ya = divmod(e.u, nh)
        xb, yb = divmod(e.v, nh)
        edge = ((xa, ya), (xb, yb))
        if spanning is not None and not _in_tree_product(spanning, xa, ya, xb, yb):
            arcs.append((e.u, e.v, RuleTag.RESIDUAL))
            continue
        if e.kind is EdgeKind.DIRECT:
            sq = canonicalize_square(edge, f1, f2)
            so = squares.get(sq.key)
            if so is None:
                so = squares[sq.key] = orient_square(sq, f1, f2)
            (tail, head), tag = so.arc_for(sq.which_diagonal), so.rule
        else:
            (tail, head), tag = orient_cartesian_edge(edge, f1, f2)
        arcs.append((tail[0] * nh + tail[1], head[0] * nh + head[1], tag))
    return OrientedProduct(product, arcs, (f1, f2))


def _in_tree_product(trees, xa, ya, xb, yb) -> bool:
    t1, t2 = trees
    return (xa == xb or t1.has_edge(xa, xb)) and (ya == yb or t2.has_edge(ya, yb))


def orient_tree_product(t1: RootedTree, t2: RootedTree) -> OrientedProduct:
    if t1.vertex_count < 2 or t2.vertex_count < 2:
        raise FactorTooSmall("both trees need at least two vertices")
    return orient_product(strong_product(t1.tree, t2.tree), t1, t2)
