import itertools

import pytest

from strongprod import (EdgeKind, UndirectedGraph, distance_matrix, eccentricity_profile,
                        product_distance_check, strong_product)
from strongprod.errors import EmptyFactor
from strongprod.generators import random_bridgeless_graph, random_tree
from strongprod.graph import is_connected


def kinds(p):
    return {k.value: p.kind_counts[k] for k in EdgeKind}


def brute_adjacent(g, h, a, b):
    (x1, y1), (x2, y2) = a, b
    return ((x1 == x2 and h.has_edge(y1, y2)) or (g.has_edge(x1, x2) and y1 == y2)
            or (g.has_edge(x1, x2) and h.has_edge(y1, y2)))


class TestConstruction:
    def test_p2_p2_is_k4(self, P):
        p = strong_product(P(2), P(2))
        assert (p.vertex_count, p.edge_count) == (4, 6)
        assert kinds(p) == {"CartesianG": 2, "CartesianH": 2, "Direct": 2}

    def test_p2_p3(self, P):
        p = strong_product(P(2), P(3))
        assert (p.vertex_count, p.edge_count) == (6, 11)
        assert kinds(p) == {"CartesianG": 3, "CartesianH": 4, "Direct": 4}

    def test_c6_c4(self, C):
        p = strong_product(C(6), C(4))
        assert (p.vertex_count, p.edge_count) == (24, 96)

    def test_empty_factor(self, P):
        with pytest.raises(EmptyFactor):
            strong_product(UndirectedGraph(0), P(2))

    def test_linearization(self, P):
        p = strong_product(P(3), P(4))
        for x, y in itertools.product(range(3), range(4)):
            i = p.index(x, y)
            assert i == 4 * x + y and p.coords(i) == (x, y) and p.label(i) == f"{x},{y}"

    def test_canonical_edge_order(self, C):
        p = strong_product(C(4), C(6))
        pairs = [(e.u, e.v) for e in p.edges]
        assert all(u < v for u, v in pairs)
        assert pairs == sorted(pairs)

    def test_adjacency_matches_definition(self, rng):
        for _ in range(10):
            g = random_bridgeless_graph(int(rng.integers(3, 6)), rng, 1)
            h = random_tree(int(rng.integers(2, 6)), rng)
            p = strong_product(g, h)
            verts = list(itertools.product(range(g.vertex_count), range(h.vertex_count)))
            for a, b in itertools.combinations(verts, 2):
                assert p.graph.has_edge(p.index(*a), p.index(*b)) == brute_adjacent(g, h, a, b)
            for e in p.edges:
                (x1, y1), (x2, y2) = p.coords(e.u), p.coords(e.v)
                expected = (EdgeKind.CARTESIAN_H if x1 == x2 else
                            EdgeKind.CARTESIAN_G if y1 == y2 else EdgeKind.DIRECT)
                assert e.kind is expected


class TestDistances:
    def test_formula_instance(self, P):
        p = strong_product(P(3), P(3))
        d = distance_matrix(p.graph)
        assert d[p.index(0, 0), p.index(2, 1)] == 2
        assert d[p.index(1, 1), p.index(1, 1)] == 0

    def test_c6_c4_exhaustive(self, C):
        assert product_distance_check(C(6), C(4))

    def test_sampled(self, rng):
        g = random_tree(15, rng)
        h = random_bridgeless_graph(9, rng, 3)
        assert product_distance_check(g, h, samples=500, rng=rng)

    def test_detects_mismatch(self, P, monkeypatch):
        import strongprod.product as mod

        real = mod.distance_matrix
        calls = []

        def tampered(g):
            d = real(g)
            calls.append(1)
            if len(calls) == 3:   # the product matrix
                d = d.copy()
                d[0, -1] += 1
            return d

        monkeypatch.setattr(mod, "distance_matrix", tampered)
        assert not product_distance_check(P(3), P(3))

    def test_radius_and_diameter_are_max_of_factors(self, rng):
        for _ in range(15):
            g = random_tree(int(rng.integers(2, 9)), rng)
            h = random_bridgeless_graph(int(rng.integers(3, 8)), rng, 2)
            p = strong_product(g, h)
            pg, ph, pp = (eccentricity_profile(x) for x in (g, h, p.graph))
            assert pp.radius == max(pg.radius, ph.radius)
            assert pp.diameter == max(pg.diameter, ph.diameter)
            assert is_connected(p.graph)
