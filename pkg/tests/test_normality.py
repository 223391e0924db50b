import itertools

import networkx as nx

from erideals.graph import Graph, complement, sample_er
from erideals.named import chorded_pentagon, seven_vertex_demo, triangles_joined_by_path, two_triangles
from erideals.normality import (
    CoverNormality,
    HochsterWitness,
    cover_ideal_normality,
    edge_ideal_normal,
    find_hochster,
    find_hochster_naive,
    induced_odd_cycles,
)


def test_triangles_joined_by_path():
    g = triangles_joined_by_path()
    w = find_hochster(g)
    assert w is not None and w.is_valid(g)
    assert {w.c1, w.c2} == {frozenset({0, 1, 2}), frozenset({4, 5, 6})}
    assert not edge_ideal_normal(g)


def test_adjacent_cycles_are_not_a_configuration():
    # triangles joined by a single edge: each meets the other's neighbourhood
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    assert find_hochster(g) is None and find_hochster_naive(g) is None


def test_two_pentagons():
    g = Graph.cycle(5).disjoint_union(Graph.cycle(5))
    w = find_hochster(g)
    assert w.is_valid(g) and len(w.c1) == len(w.c2) == 5


def test_bipartite_and_single_cycle_are_normal():
    assert edge_ideal_normal(Graph.cycle(6))
    assert edge_ideal_normal(Graph.cycle(7))
    assert edge_ideal_normal(chorded_pentagon())
    assert edge_ideal_normal(Graph.empty(5))


def test_invalid_witness():
    g = two_triangles()
    assert HochsterWitness(frozenset({0, 1, 2}), frozenset({3, 4, 5})).is_valid(g)
    assert not HochsterWitness(frozenset({0, 1, 2}), frozenset({0, 4, 5})).is_valid(g)
    assert not HochsterWitness(frozenset({0, 1, 3}), frozenset({2, 4, 5})).is_valid(g)


def test_fast_matches_naive(random_graphs):
    for g in random_graphs:
        fast, naive = find_hochster(g), find_hochster_naive(g)
        assert (fast is None) == (naive is None)
        if fast:
            assert fast.is_valid(g) and naive.is_valid(g)


def test_fast_matches_naive_larger():
    hits = 0
    for i in range(300):
        g = sample_er(9 + i % 4, 0.2 + 0.1 * (i % 3), 99, i)
        fast = find_hochster(g)
        assert (fast is None) == (find_hochster_naive(g) is None)
        hits += fast is not None
    assert hits > 10


def naive_holes(g: Graph):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    out = set()
    for k in range(3, g.n + 1, 2):
        for sub in itertools.combinations(range(g.n), k):
            s = h.subgraph(sub)
            if all(d == 2 for _, d in s.degree()) and nx.is_connected(s):
                out.add(frozenset(sub))
    return out


def test_induced_odd_cycles(random_graphs):
    for g in random_graphs[::2]:
        assert set(induced_odd_cycles(g)) == naive_holes(g)
    assert induced_odd_cycles(seven_vertex_demo(), max_len=3) == [
        c for c in induced_odd_cycles(seven_vertex_demo()) if len(c) == 3
    ]


def test_cover_normality_bipartite():
    assert cover_ideal_normality(Graph.cycle(8)) is CoverNormality.NORMAL
    assert cover_ideal_normality(Graph.empty(3)) is CoverNormality.NORMAL


def test_cover_normality_small_beta():
    # complement of two disjoint triangles is K_{3,3}, bipartite
    assert cover_ideal_normality(complement(two_triangles())) is CoverNormality.NORMAL
    # complement of two pentagons: independence number 2, not bipartite, and
    # the two pentagons form a configuration in its complement
    g = complement(Graph.cycle(5).disjoint_union(Graph.cycle(5)))
    assert cover_ideal_normality(g) is CoverNormality.NOT_NORMAL
    assert cover_ideal_normality(Graph.complete(5)) is CoverNormality.NORMAL
    assert str(cover_ideal_normality(Graph.cycle(7))) == "UndecidedBeta0TooLarge"
