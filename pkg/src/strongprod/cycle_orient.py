"""Orientation of C_m ⊠ C_n for even m, n >= 4."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidCycleLength
from .graph import Side, UndirectedGraph
from .orient import OrientedProduct, orient_product
from .product import strong_product


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, ((i, (i + 1) % n) for i in range(n)))


@dataclass(frozen=True)
class CycleFactor:
    """Even cycle oriented ``i -> i+1 (mod n)``; even vertices are side A."""

    n: int

    def __post_init__(self):
        if self.n < 4 or self.n % 2:
            raise InvalidCycleLength(f"cycle length must be even and >= 4, got {self.n}")

    root = None

    @property
    def side(self) -> tuple[Side, ...]:
        return tuple(Side.A if i % 2 == 0 else Side.B for i in range(self.n))

    @property
    def graph(self) -> UndirectedGraph:
        return cycle_graph(self.n)

    def is_leaf(self, v: int) -> bool:
        return False

    def arc_tail(self, u: int, v: int) -> int:
        if (u + 1) % self.n == v:
            return u
        if (v + 1) % self.n == u:
            return v
        raise ValueError(f"{u}-{v} is not a cycle edge")


def claimed_cycle_diameter(m: int, n: int) -> int:
    return max(m, n) // 2 + 1


def orient_cycle_product(m: int, n: int) -> OrientedProduct:
    f1, f2 = CycleFactor(m), CycleFactor(n)
    return orient_product(strong_product(f1.graph, f2.graph), f1, f2)
