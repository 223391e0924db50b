import itertools
import json
from fractions import Fraction
from math import comb, factorial

import networkx as nx
import pytest

from erideals.errors import ParameterError, ResourceLimitError
from erideals.events import EventSpec, registry_events
from erideals.graph import Graph, Pattern
from erideals.moments import expectation_Y_Et
from erideals.oracle import (
    ProbPolynomial,
    automorphism_count,
    count_labeled_copies,
    enumerate_event,
    enumerate_expectation,
    exact_variance,
    grid,
)


def test_has_cycle_n3():
    assert enumerate_event(3, "has_cycle").coeffs == (0, 0, 0, 1)


def test_bipartite_n4():
    # by hand: 4 triangles kill every graph with >= 5 edges and all but
    # the three 4-cycles among 4-edge graphs
    assert enumerate_event(4, "bipartite").coeffs == (1, 6, 15, 16, 3, 0, 0)


def test_always_true_sums_to_one():
    poly = enumerate_event(5, "always_true")
    assert poly.coeffs == tuple(comb(10, m) for m in range(11))
    assert poly.evaluate(Fraction(2, 7)) == 1
    assert poly.evaluate(0.37) == pytest.approx(1.0, abs=1e-15)


def test_complement_polynomial():
    poly = enumerate_event(5, "has_cycle")
    assert poly.complement() == enumerate_event(5, "not:has_cycle")
    assert (poly + poly.complement()).evaluate(Fraction(1, 3)) == 1


def test_connected_against_networkx():
    # cross-check the enumeration order with an independent count
    poly = enumerate_event(4, "not:has_cycle")
    counts = [0] * 7
    pairs = list(itertools.combinations(range(4), 2))
    for k in range(7):
        for edges in itertools.combinations(pairs, k):
            h = nx.Graph(list(edges))
            h.add_nodes_from(range(4))
            counts[k] += nx.is_forest(h)
    assert list(poly.coeffs) == counts


def test_expectation_E3():
    poly = enumerate_expectation(5, Pattern("E", 3))
    for p in grid():
        assert poly.evaluate(p) == expectation_Y_Et(5, 3, p)
    assert poly.evaluate(Fraction(1, 2)) == Fraction(5, 4)


def test_T_coefficient_is_ten():
    poly = enumerate_expectation(6, Pattern("T"))
    assert poly.coeffs[6] == 10 and sum(poly.coeffs) == 10
    assert count_labeled_copies(Pattern("T"), 6) == 10
    assert automorphism_count(Pattern("T")) == 72


def test_labeled_copies_orbit_formula():
    for g in (Graph.cycle(5), Graph.from_edges(4, [(0, 1), (1, 2)]), Graph.complete(4)):
        assert count_labeled_copies(g, g.n) * automorphism_count(g) == factorial(g.n)


def test_exact_variance_small():
    # n=3, E2: Y = number of non-edges, binomial(3, q)
    p = Fraction(1, 4)
    assert exact_variance(3, "E2", p) == 3 * p * (1 - p)


def test_jobs_do_not_change_result():
    ev = EventSpec.parse("hochster")
    assert enumerate_event(6, ev, jobs=1) == enumerate_event(6, ev, jobs=2)


def test_json_roundtrip():
    poly = enumerate_event(4, "bipartite")
    data = json.loads(json.dumps(poly.to_json()))
    assert data["M"] == 6 and all(isinstance(c, str) for c in data["coeffs"])
    assert ProbPolynomial.from_json(data) == poly
    with pytest.raises(ParameterError):
        ProbPolynomial.from_json({"n": 4, "M": 7, "coeffs": data["coeffs"]})


def test_caps():
    with pytest.raises(ResourceLimitError):
        enumerate_event(8, "bipartite")
    with pytest.raises(ResourceLimitError):
        enumerate_event(9, "bipartite", cap=9)
    with pytest.raises(ParameterError):
        ProbPolynomial(3, (1, 2))


def test_registry_events_are_oracle_ready():
    evs = registry_events()
    assert len(evs) == 16
    for ev in evs:
        poly = enumerate_event(4, ev)
        assert all(0 <= c <= comb(6, m) for m, c in enumerate(poly.coeffs))
