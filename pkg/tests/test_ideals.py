from fractions import Fraction

import pytest

from erideals.errors import ParameterError
from erideals.graph import Graph, complement, maximal_independent_sets, sample_er
from erideals.ideals import (
    MonomialIdeal,
    cover_ideal,
    edge_ideal,
    graph_of_edge_ideal,
    ideal_height,
    ideal_probability,
    krull_dimension,
    reg_upper_bound,
    v_upper_bound,
)
from erideals.named import chorded_pentagon


def test_chorded_pentagon_cover_ideal():
    ideal = cover_ideal(chorded_pentagon())
    assert ideal.generators == ((0, 1, 2, 3), (0, 2, 4), (1, 2, 4), (1, 3, 4))
    assert str(ideal) == "(x1x2x3x4, x1x3x5, x2x3x5, x2x4x5)"
    assert krull_dimension(chorded_pentagon()) == 2
    assert ideal_height(chorded_pentagon()) == 3


def test_edge_ideal_roundtrip(random_graphs):
    for g in random_graphs:
        assert graph_of_edge_ideal(edge_ideal(g)) == g


def test_cover_duality(random_graphs):
    # every generator of I_c meets every edge, and is minimal with that property
    for g in random_graphs:
        if g.m == 0:
            continue
        gens = cover_ideal(g).generators
        for cov in gens:
            s = set(cov)
            assert all(u in s or v in s for u, v in g.edges())
            for x in cov:
                smaller = s - {x}
                assert any(u not in smaller and v not in smaller for u, v in g.edges())
        assert len(gens) == len(maximal_independent_sets(g))
        assert min(len(c) for c in gens) == ideal_height(g)


def test_empty_graph_cover_is_unit():
    ideal = cover_ideal(Graph.empty(4))
    assert ideal.unit and str(ideal) == "(1)"
    assert ideal.to_json()["unit"] is True
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal
    assert edge_ideal(Graph.empty(4)).is_zero
    assert krull_dimension(Graph.empty(4)) == 4


def test_complete_graph():
    g = Graph.complete(5)
    assert krull_dimension(g) == 1
    assert cover_ideal(g).min_degree() == 4
    assert reg_upper_bound(g) == v_upper_bound(g) == 1


def test_ideal_json_roundtrip():
    ideal = cover_ideal(sample_er(8, 0.4, 2))
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal


@pytest.mark.parametrize(
    "gens",
    [((0, 1), (0, 1, 2)), ((0, 5),), ((),)],
)
def test_ideal_validation(gens):
    with pytest.raises(ParameterError):
        MonomialIdeal(3, gens)


def test_ideal_probability():
    p = Fraction(1, 3)
    assert ideal_probability(3, p, [(0, 1), (1, 2)]) == p**2 * (1 - p)
    assert ideal_probability(4, p, []) == (1 - p) ** 6
    # summing over all ideals on 3 variables gives 1
    edges = [(0, 1), (0, 2), (1, 2)]
    total = sum(
        ideal_probability(3, p, [e for i, e in enumerate(edges) if mask >> i & 1]) for mask in range(8)
    )
    assert total == 1
    with pytest.raises(ParameterError):
        ideal_probability(3, p, [(0, 1, 2)])
    with pytest.raises(ParameterError):
        ideal_probability(3, p, [(0, 3)])


def test_height_plus_dim():
    for i in range(20):
        g = sample_er(12, 0.3, 4, i)
        assert ideal_height(g) + krull_dimension(g) == 12
        assert krull_dimension(complement(g)) >= 1
