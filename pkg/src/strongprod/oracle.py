"""Exhaustive minimum-diameter orientation search for small graphs.

Orientation bit ``i`` refers to the ``i``-th edge ``(u, v)``, ``u < v``, of
``g.edges()``: 0 orients it ``u -> v`` and 1 orients it ``v -> u``. The
search runs in lexicographic order of the bit vector (edge 0 most
significant), so the reported witness is the first optimal orientation in
that order.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass

from .errors import NotBridgeless, NotConnected, TooLarge
from .graph import Digraph, UndirectedGraph, has_bridge, is_connected

DEFAULT_MAX_EDGES = 20


@dataclass(frozen=True)
class OracleResult:
    diam_min: int
    witness_orientation: tuple[int, ...]
    orientations_tested: int   # all 2^|E| orientations are covered, pruned or not
    strong_count: int
    evaluated: int             # orientations that survived degree pruning


def orientation_from_bits(g: UndirectedGraph, bits) -> Digraph:
    edges = g.edges()
    if len(bits) != len(edges):
        raise ValueError("one bit per edge required")
    return Digraph(g.vertex_count, ((v, u) if b else (u, v) for (u, v), b in zip(edges, bits)))


def _ecc_at_most(out, n, src, limit):
    """Eccentricity of ``src``, or None once it provably exceeds ``limit``."""
    dist = [-1] * n
    dist[src] = 0
    q = deque([src])
    seen = 1
    while q:
        u = q.popleft()
        du = dist[u] + 1
        if du > limit:
            break
        for w in out[u]:
            if dist[w] < 0:
                dist[w] = du
                seen += 1
                q.append(w)
    if seen < n:
        return None
    return max(dist)


def _reaches_all(adj, n):
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def brute_force_diam_min(g: UndirectedGraph, max_edges: int = DEFAULT_MAX_EDGES) -> OracleResult:
    """Minimum directed diameter over all strong orientations of ``g``."""
    edges = g.edges()
    m, n = len(edges), g.vertex_count
    if m > max_edges:
        raise TooLarge(f"{m} edges exceed the cap of {max_edges}")
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    bridged, witness = has_bridge(g)
    if bridged:
        raise NotBridgeless(f"edge {witness} is a bridge; no strong orientation exists", bridge=witness)

    last_edge = [-1] * n
    for i, (u, v) in enumerate(edges):
        last_edge[u] = last_edge[v] = i
    closing = [[] for _ in range(m)]
    for v in range(n):
        if last_edge[v] >= 0:
            closing[last_edge[v]].append(v)

    outdeg = [0] * n
    indeg = [0] * n
    bits = [0] * m
    out_adj: list[list[int]] = [[] for _ in range(n)]
    in_adj: list[list[int]] = [[] for _ in range(n)]
    state = {"best": None, "witness": None, "strong": 0, "evaluated": 0}

    def evaluate():
        state["evaluated"] += 1
        if not (_reaches_all(out_adj, n) and _reaches_all(in_adj, n)):
            return
        state["strong"] += 1
        best = state["best"]
        limit = n if best is None else best - 1
        diam = 0
        for s in range(n):
            e = _ecc_at_most(out_adj, n, s, limit)
            if e is None:
                return
            diam = max(diam, e)
        state["best"] = diam
        state["witness"] = tuple(bits)

    def descend(i):
        if i == m:
            evaluate()
            return
        u, v = edges[i]
        for b in (0, 1):
            tail, head = (v, u) if b else (u, v)
            bits[i] = b
            outdeg[tail] += 1
            indeg[head] += 1
            out_adj[tail].append(head)
            in_adj[head].append(tail)
            if all(outdeg[w] and indeg[w] for w in closing[i]):
                descend(i + 1)
            out_adj[tail].pop()
            in_adj[head].pop()
            outdeg[tail] -= 1
            indeg[head] -= 1

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, m + 100))
    try:
        descend(0)
    finally:
        sys.setrecursionlimit(limit)
    return OracleResult(state["best"], state["witness"], 2 ** m, state["strong"], state["evaluated"])


def gap_report(g: UndirectedGraph, rule_diameter: int, max_edges: int = DEFAULT_MAX_EDGES) -> tuple[int, int]:
    """``(diam_min, rule_diameter - diam_min)`` for a constructed orientation's diameter."""
    res = brute_force_diam_min(g, max_edges)
    gap = rule_diameter - res.diam_min
    if gap < 0:
        raise AssertionError(f"constructed diameter {rule_diameter} beats the exhaustive minimum {res.diam_min}")
    return res.diam_min, gap
