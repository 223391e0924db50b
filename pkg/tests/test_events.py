import pytest

from erideals.errors import ParameterError
from erideals.events import EVENT_NAMES, EventSpec
from erideals.graph import Graph, complement
from erideals.named import triangles_joined_by_path, two_triangles


def test_parse_and_str():
    for text in ("dim_ge:3", "not:bipartite", "has_Et_induced:4", "always_true"):
        assert str(EventSpec.parse(text)) == text
    assert EventSpec.parse("not:has_cycle").negated() == EventSpec("has_cycle")


@pytest.mark.parametrize("text", ["dim_ge", "bipartite:2", "nope", "dim_ge:x", "has_Et_induced:1"])
def test_parse_errors(text):
    with pytest.raises(ParameterError):
        EventSpec.parse(text)


def test_predicates():
    tt = two_triangles()
    assert EventSpec.parse("has_T_induced")(tt)
    assert EventSpec.parse("hochster")(triangles_joined_by_path())
    assert not EventSpec.parse("edge_ideal_normal")(tt)
    assert EventSpec.parse("dim_eq:2")(tt)
    assert not EventSpec.parse("dim_ge:3")(tt)
    assert EventSpec.parse("clique_ge:3")(tt)
    assert EventSpec.parse("has_Et_induced:2")(tt)
    assert EventSpec.parse("cover_normal")(Graph.cycle(6))
    assert not EventSpec.parse("cover_normal")(Graph.cycle(7))
    g = complement(Graph.cycle(5).disjoint_union(Graph.cycle(5)))
    assert EventSpec.parse("cover_not_normal_and_beta_le_2")(g)


def test_names():
    assert "dim_ge" in EVENT_NAMES and "always_true" in EVENT_NAMES
