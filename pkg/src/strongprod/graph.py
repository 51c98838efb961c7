"""Graph representations and metric primitives.

Vertices are dense integer ids ``0..n-1``. Both graph classes are immutable
once built; adjacency is stored as sorted tuples so iteration order (and
therefore BFS tie-breaking) is always ascending by id.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import InvalidVertex, NotATree, NotBipartite, NotConnected

INF = math.inf


class Side(str, enum.Enum):
    A = "A"
    B = "B"

    def flip(self) -> "Side":
        return Side.B if self is Side.A else Side.A


class UndirectedGraph:
    """Simple undirected graph on vertices ``0..vertex_count-1``."""

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            _check_vertex(u, vertex_count)
            _check_vertex(v, vertex_count)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = vertex_count
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in self._adj[u] if u < v]

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other) -> bool:
        return isinstance(other, UndirectedGraph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self._n}, m={self._m})"


class Digraph:
    """Directed graph without self-loops or parallel arcs."""

    __slots__ = ("_n", "_out", "_in", "_m")

    def __init__(self, vertex_count: int, arcs: Iterable[tuple[int, int]] = ()):
        out: list[set[int]] = [set() for _ in range(vertex_count)]
        inn: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in arcs:
            _check_vertex(u, vertex_count)
            _check_vertex(v, vertex_count)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in out[u]:
                raise ValueError(f"duplicate arc {u}->{v}")
            out[u].add(v)
            inn[v].add(u)
        self._n = vertex_count
        self._out = tuple(tuple(sorted(s)) for s in out)
        self._in = tuple(tuple(sorted(s)) for s in inn)
        self._m = sum(len(s) for s in out)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def arc_count(self) -> int:
        return self._m

    @property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        return self._out

    @property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        return self._in

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._out[u]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in self._out[u]]

    def reverse(self) -> "Digraph":
        return Digraph(self._n, ((v, u) for u, v in self.arcs()))

    def underlying(self) -> UndirectedGraph:
        return UndirectedGraph(self._n, {(min(u, v), max(u, v)) for u, v in self.arcs()})

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and self._out == other._out

    def __hash__(self) -> int:
        return hash(self._out)

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, arcs={self._m})"


def _check_vertex(v: int, n: int) -> None:
    if not (isinstance(v, (int, np.integer)) and 0 <= v < n):
        raise InvalidVertex(f"vertex {v!r} out of range 0..{n - 1}")


def _successors(g: UndirectedGraph | Digraph):
    return g.out_arcs if isinstance(g, Digraph) else g.adjacency


def bfs_distances(g: UndirectedGraph | Digraph, source: int) -> list[float]:
    """Unweighted single-source distances; unreachable vertices get ``INF``.

    For a digraph the search follows out-arcs.
    """
    _check_vertex(source, g.vertex_count)
    succ = _successors(g)
    dist: list[float] = [INF] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in succ[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def to_csr(g: UndirectedGraph | Digraph) -> csr_matrix:
    succ = _successors(g)
    n = g.vertex_count
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(s) for s in succ])
    indices = np.fromiter((w for s in succ for w in s), dtype=np.int64, count=int(indptr[-1]))
    data = np.ones(len(indices), dtype=np.float64)
    return csr_matrix((data, indices, indptr), shape=(n, n))


def distance_matrix(g: UndirectedGraph | Digraph) -> np.ndarray:
    """All-pairs distance matrix (float, ``inf`` for unreachable).

    Entry ``[u, v]`` is the distance from ``u`` to ``v``.
    """
    n = g.vertex_count
    if n == 0:
        return np.zeros((0, 0))
    return shortest_path(to_csr(g), method="D", directed=True, unweighted=True)


@dataclass(frozen=True)
class EccentricityProfile:
    eccentricity: tuple[float, ...]
    radius: float
    diameter: float
    centers: tuple[int, ...]

    @property
    def center(self) -> int:
        return self.centers[0]


def eccentricity_profile(g: UndirectedGraph | Digraph, dist: np.ndarray | None = None) -> EccentricityProfile:
    if dist is None:
        dist = distance_matrix(g)
    if g.vertex_count == 0:
        return EccentricityProfile((), INF, INF, ())
    ecc = dist.max(axis=1)
    radius = float(ecc.min())
    centers = tuple(int(v) for v in np.flatnonzero(ecc == radius))
    as_num = tuple(int(e) if math.isfinite(e) else INF for e in ecc)
    rad = int(radius) if math.isfinite(radius) else INF
    diam = float(ecc.max())
    return EccentricityProfile(as_num, rad, int(diam) if math.isfinite(diam) else INF, centers)


def is_connected(g: UndirectedGraph) -> bool:
    if g.vertex_count == 0:
        return True
    return INF not in bfs_distances(g, 0)


def bipartition(g: UndirectedGraph, anchor: int = 0) -> list[Side]:
    """Two-colour a connected graph with ``anchor`` on side A.

    Raises NotBipartite carrying an odd cycle as a vertex list.
    """
    _check_vertex(anchor, g.vertex_count)
    side: list[Side | None] = [None] * g.vertex_count
    parent: list[int] = [-1] * g.vertex_count
    side[anchor] = Side.A
    queue = deque([anchor])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if side[w] is None:
                side[w] = side[u].flip()
                parent[w] = u
                queue.append(w)
            elif side[w] is side[u]:
                raise NotBipartite(f"odd cycle through edge {u}-{w}", _odd_cycle(parent, u, w))
    if any(s is None for s in side):
        raise NotConnected("graph is not connected")
    return side  # type: ignore[return-value]


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    def chain(v):
        out = [v]
        while parent[v] != -1:
            v = parent[v]
            out.append(v)
        return out

    cu, cw = chain(u), chain(w)
    on_w = set(cw)
    lca = next(v for v in cu if v in on_w)
    left = cu[: cu.index(lca) + 1]
    right = cw[: cw.index(lca)]
    return left + right[::-1]


@dataclass(frozen=True, eq=False)
class RootedTree:
    """A tree with a chosen root, its parity classes and parent pointers.

    Reading every ``parent[v] -> v`` as an arc gives the orientation of the
    tree away from its root. ``side[v]`` is A exactly when ``depth[v]`` is even.
    """

    tree: UndirectedGraph
    root: int
    parent: tuple[int | None, ...]
    depth: tuple[int, ...]
    side: tuple[Side, ...]

    @classmethod
    def from_tree(cls, tree: UndirectedGraph, root: int | None = None) -> "RootedTree":
        n = tree.vertex_count
        if n == 0:
            raise NotConnected("empty tree")
        if tree.edge_count != n - 1:
            raise NotATree(f"not a tree: {n} vertices but {tree.edge_count} edges")
        if root is None:
            root = eccentricity_profile(tree).center
        return shortest_path_tree(tree, root)

    @property
    def vertex_count(self) -> int:
        return self.tree.vertex_count

    def is_leaf(self, v: int) -> bool:
        # a degree-one root is still the root for rule purposes
        return v != self.root and self.tree.degree(v) == 1

    def children(self, v: int) -> list[int]:
        return [w for w in self.tree.neighbors(v) if self.parent[w] == v]

    def arc_tail(self, u: int, v: int) -> int:
        """The endpoint of edge ``uv`` that the root-outward orientation leaves from."""
        if self.parent[v] == u:
            return u
        if self.parent[u] == v:
            return v
        raise ValueError(f"{u}-{v} is not a tree edge")

    def precedes(self, u: int, v: int) -> bool:
        """True when ``u`` lies on the path from the root to ``v`` (``u != v``)."""
        if u == v:
            return False
        while v is not None and self.depth[v] > self.depth[u]:
            v = self.parent[v]
        return v == u

    def __repr__(self) -> str:
        return f"RootedTree(n={self.vertex_count}, root={self.root})"


def shortest_path_tree(g: UndirectedGraph, root: int) -> RootedTree:
    """BFS spanning tree of a connected graph, neighbours taken in ascending id."""
    _check_vertex(root, g.vertex_count)
    n = g.vertex_count
    parent: list[int | None] = [None] * n
    depth = [-1] * n
    depth[root] = 0
    queue = deque([root])
    edges = []
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                edges.append((u, w))
                queue.append(w)
    if min(depth) < 0:
        raise NotConnected("graph is not connected")
    side = tuple(Side.A if d % 2 == 0 else Side.B for d in depth)
    return RootedTree(UndirectedGraph(n, edges), root, tuple(parent), tuple(depth), side)


def bridges(g: UndirectedGraph) -> list[tuple[int, int]]:
    """All bridges as sorted ``(u, v)`` pairs (iterative low-link search)."""
    n = g.vertex_count
    order = [-1] * n
    low = [0] * n
    found = []
    counter = 0
    for start in range(n):
        if order[start] >= 0:
            continue
        order[start] = low[start] = counter
        counter += 1
        # frames: (vertex, parent, iterator position)
        stack = [(start, -1, 0)]
        while stack:
            v, p, i = stack[-1]
            nbrs = g.neighbors(v)
            if i < len(nbrs):
                stack[-1] = (v, p, i + 1)
                w = nbrs[i]
                if w == p:
                    continue
                if order[w] < 0:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, 0))
                else:
                    low[v] = min(low[v], order[w])
            else:
                stack.pop()
                if p >= 0:
                    low[p] = min(low[p], low[v])
                    if low[v] > order[p]:
                        found.append((min(p, v), max(p, v)))
    return sorted(found)


def has_bridge(g: UndirectedGraph) -> tuple[bool, tuple[int, int] | None]:
    """Whether ``g`` has a bridge, with the smallest one as witness."""
    b = bridges(g)
    return (True, b[0]) if b else (False, None)
