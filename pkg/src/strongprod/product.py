"""Strong product construction with classified edges.

Product vertex ``(x, y)`` is stored at linear index ``x * |V(H)| + y``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import EmptyFactor
from .graph import UndirectedGraph, distance_matrix


class EdgeKind(str, enum.Enum):
    CARTESIAN_G = "CartesianG"  # inside a G-layer: y fixed
    CARTESIAN_H = "CartesianH"  # inside an H-layer: x fixed
    DIRECT = "Direct"


@dataclass(frozen=True)
class ProductEdge:
    u: int  # smaller linear index
    v: int
    kind: EdgeKind


class StrongProduct:
    """G ⊠ H together with its edge list in canonical order."""

    def __init__(self, g: UndirectedGraph, h: UndirectedGraph):
        if g.vertex_count == 0 or h.vertex_count == 0:
            raise EmptyFactor("both factors must have at least one vertex")
        self.g = g
        self.h = h
        self.g_count = g.vertex_count
        self.h_count = h.vertex_count
        self.edges = tuple(self._build_edges())
        self._check_counts()

    def _build_edges(self):
        nh = self.h_count
        g_closed = [(x,) + g_n for x, g_n in enumerate(self.g.adjacency)]
        h_closed = [(y,) + h_n for y, h_n in enumerate(self.h.adjacency)]
        for x in range(self.g_count):
            for y in range(nh):
                u = x * nh + y
                found = []
                for x2 in g_closed[x]:
                    for y2 in h_closed[y]:
                        v = x2 * nh + y2
                        if v <= u:
                            continue
                        if x2 == x:
                            kind = EdgeKind.CARTESIAN_H
                        elif y2 == y:
                            kind = EdgeKind.CARTESIAN_G
                        else:
                            kind = EdgeKind.DIRECT
                        found.append(ProductEdge(u, v, kind))
                found.sort(key=lambda e: e.v)
                yield from found

    def _check_counts(self) -> None:
        eg, eh = self.g.edge_count, self.h.edge_count
        counts = self.kind_counts
        expected = {
            EdgeKind.CARTESIAN_H: self.g_count * eh,
            EdgeKind.CARTESIAN_G: self.h_count * eg,
            EdgeKind.DIRECT: 2 * eg * eh,
        }
        assert counts == expected, (counts, expected)

    @property
    def vertex_count(self) -> int:
        return self.g_count * self.h_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def kind_counts(self) -> dict[EdgeKind, int]:
        counts = {k: 0 for k in EdgeKind}
        for e in self.edges:
            counts[e.kind] += 1
        return counts

    @cached_property
    def graph(self) -> UndirectedGraph:
        return UndirectedGraph(self.vertex_count, ((e.u, e.v) for e in self.edges))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(e.u, e.v): i for i, e in enumerate(self.edges)}

    def index(self, x: int, y: int) -> int:
        return x * self.h_count + y

    def coords(self, i: int) -> tuple[int, int]:
        return divmod(i, self.h_count)

    def label(self, i: int) -> str:
        x, y = self.coords(i)
        return f"{x},{y}"

    def __repr__(self) -> str:
        return f"StrongProduct({self.g_count}x{self.h_count}, edges={self.edge_count})"


def strong_product(g: UndirectedGraph, h: UndirectedGraph) -> StrongProduct:
    return StrongProduct(g, h)


def classify_edge(x1: int, y1: int, x2: int, y2: int) -> EdgeKind:
    if x1 == x2 and y1 == y2:
        raise ValueError("coincident endpoints")
    if x1 == x2:
        return EdgeKind.CARTESIAN_H
    if y1 == y2:
        return EdgeKind.CARTESIAN_G
    return EdgeKind.DIRECT


def product_distance_check(g: UndirectedGraph, h: UndirectedGraph, samples: int | None = None,
                           rng: np.random.Generator | None = None) -> bool:
    """Check that product distances equal the max of the factor distances.

    All ordered pairs are compared when ``samples`` is None or at least the
    number of pairs; otherwise ``samples`` random pairs are drawn.
    """
    p = strong_product(g, h)
    dg, dh = distance_matrix(g), distance_matrix(h)
    dp = distance_matrix(p.graph)
    nh = p.h_count
    n = p.vertex_count
    if samples is None or samples >= n * n:
        expected = np.maximum(dg[:, None, :, None], dh[None, :, None, :]).reshape(n, n)
        return bool(np.array_equal(dp, expected))
    rng = rng if rng is not None else np.random.default_rng(0)
    a = rng.integers(0, n, size=samples)
    b = rng.integers(0, n, size=samples)
    xa, ya = np.divmod(a, nh)
    xb, yb = np.divmod(b, nh)
    expected = np.maximum(dg[xa, xb], dh[ya, yb])
    return bool(np.array_equal(dp[a, b], expected))
