"""Standard and random graphs used by the demos and regression sets."""

from __future__ import annotations

import heapq

import numpy as np

from .graph import UndirectedGraph, bridges


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> UndirectedGraph:
    """K_{1,leaves} with the center at vertex 0."""
    return UndirectedGraph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def petersen_graph() -> UndirectedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UndirectedGraph(10, outer + spokes + inner)


def tree_from_pruefer(seq) -> UndirectedGraph:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return UndirectedGraph(n, edges)


def random_tree(n: int, rng: np.random.Generator) -> UndirectedGraph:
    """Uniformly random labelled tree on ``n`` vertices."""
    if n == 1:
        return UndirectedGraph(1)
    if n == 2:
        return path_graph(2)
    return tree_from_pruefer(rng.integers(0, n, size=n - 2).tolist())


def random_bridgeless_graph(n: int, rng: np.random.Generator, extra_edges: int = 0) -> UndirectedGraph:
    """Random connected bridgeless graph on ``n >= 3`` vertices.

    Starts from a random tree plus ``extra_edges`` random chords, then keeps
    adding a chord across some remaining bridge until none is left.
    """
    if n < 3:
        raise ValueError("a bridgeless simple graph needs at least three vertices")
    edges = set(random_tree(n, rng).edges())
    for _ in range(extra_edges):
        u, v = sorted(rng.choice(n, size=2, replace=False).tolist())
        edges.add((u, v))
    while True:
        g = UndirectedGraph(n, edges)
        found = bridges(g)
        if not found:
            return g
        u, v = found[int(rng.integers(len(found)))]
        # join an endpoint of the bridge to a non-neighbour on the other side
        side_u = _component_without(g, (u, v), u)
        a = u if g.degree(u) == 1 or rng.random() < 0.5 else v
        pool = [w for w in range(n) if (w in side_u) != (a in side_u) and w != a and not g.has_edge(a, w)]
        if not pool:
            a = v if a == u else u
            pool = [w for w in range(n) if (w in side_u) != (a in side_u) and w != a and not g.has_edge(a, w)]
        w = pool[int(rng.integers(len(pool)))]
        edges.add((min(a, w), max(a, w)))


def _component_without(g: UndirectedGraph, edge, start) -> set[int]:
    u0, v0 = edge
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if {x, y} == {u0, v0} or y in seen:
                continue
            seen.add(y)
            stack.append(y)
    return seen
