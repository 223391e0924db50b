"""Edge ideals and cover ideals of graphs, and the invariants that reduce to
graph combinatorics (dimension, height, bounds on regularity and v-number)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .errors import ParameterError
from .graph import DEFAULT_MIS_LIMIT, Graph, independence_number, maximal_independent_sets

Monomial = tuple[int, ...]


def _monomial(support: Iterable[int]) -> Monomial:
    items = list(support)
    mono = tuple(sorted(set(items)))
    if len(mono) != len(items):
        raise ParameterError("squarefree monomials are given by their support; repeated variables are not allowed")
    return mono


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal in ``K[x_0, ..., x_{n-1}]``.

    Generators are supports (sorted vertex tuples), kept minimal under
    divisibility and in lexicographic order.  ``unit`` marks the whole ring,
    which is what the cover ideal of an edgeless graph is (its only vertex
    cover is empty); the zero ideal is ``generators == ()`` with
    ``unit=False``.
    """

    ambient_n: int
    generators: tuple[Monomial, ...]
    unit: bool = False

    def __post_init__(self):
        gens = tuple(sorted({_monomial(g) for g in self.generators}))
        for g in gens:
            if not g:
                raise ParameterError("use unit=True instead of an empty generator")
            if g[0] < 0 or g[-1] >= self.ambient_n:
                raise ParameterError(f"generator {g} outside 0..{self.ambient_n - 1}")
        sets = [frozenset(g) for g in gens]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ParameterError(f"generator {gens[j]} is divisible by {gens[i]}")
        if self.unit and gens:
            raise ParameterError("the unit ideal carries no generators")
        object.__setattr__(self, "generators", gens)

    @property
    def is_zero(self) -> bool:
        return not self.unit and not self.generators

    def min_degree(self) -> int:
        if self.unit:
            return 0
        if not self.generators:
            raise ParameterError("the zero ideal has no generators")
        return min(len(g) for g in self.generators)

    def to_json(self) -> dict:
        out = {"ambient_n": self.ambient_n, "generators": [list(g) for g in self.generators]}
        if self.unit:
            out["unit"] = True
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        return cls(int(data["ambient_n"]), tuple(tuple(g) for g in data["generators"]), bool(data.get("unit", False)))

    def __str__(self):
        if self.unit:
            return "(1)"
        if not self.generators:
            return "(0)"
        return "(" + ", ".join("".join(f"x{i + 1}" for i in g) for g in self.generators) + ")"


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g.n, tuple(g.edges()))


def cover_ideal(g: Graph, limit: int = DEFAULT_MIS_LIMIT) -> MonomialIdeal:
    """Ideal generated by the minimal vertex covers of ``g``.

    Minimal covers are the complements of maximal stable sets.
    """
    if g.m == 0:
        return MonomialIdeal(g.n, (), unit=True)
    everything = frozenset(range(g.n))
    covers = tuple(tuple(sorted(everything - s)) for s in maximal_independent_sets(g, limit))
    return MonomialIdeal(g.n, covers)


def graph_of_edge_ideal(ideal: MonomialIdeal) -> Graph:
    """Inverse of :func:`edge_ideal` on quadratic ideals."""
    if ideal.unit or any(len(gen) != 2 for gen in ideal.generators):
        raise ParameterError("not the edge ideal of a graph")
    return Graph.from_edges(ideal.ambient_n, ideal.generators)


def krull_dimension(g: Graph) -> int:
    """``dim S/I(G)``, which equals the independence number."""
    return independence_number(g)


def ideal_height(g: Graph) -> int:
    """Height of ``I(G)``: the vertex covering number ``n - beta_0``."""
    return g.n - independence_number(g)


def reg_upper_bound(g: Graph) -> int:
    """Upper bound for ``reg S/I(G)`` (regularity never exceeds dimension).
    Not the regularity itself."""
    return independence_number(g)


def v_upper_bound(g: Graph) -> int:
    """Upper bound for the v-number of ``I(G)`` (at most ``beta_0``).
    Not the v-number itself."""
    return independence_number(g)


def ideal_probability(n: int, p, b: Iterable[Iterable[int]]):
    """Probability that the random edge ideal equals the ideal generated by
    the quadratic monomials ``b``: ``p^|B| (1-p)^(C(n,2)-|B|)``.

    Exact when ``p`` is a :class:`~fractions.Fraction`.
    """
    if not 0 <= p <= 1:
        raise ParameterError(f"p={p} outside [0, 1]")
    gens = set()
    for mono in b:
        mono = tuple(mono)
        if len(set(mono)) != 2 or len(mono) != 2:
            raise ParameterError(f"{mono} is not a squarefree quadratic monomial")
        if not all(0 <= v < n for v in mono):
            raise ParameterError(f"{mono} uses a variable outside 0..{n - 1}")
        gens.add(frozenset(mono))
    k = len(gens)
    one = Fraction(1) if isinstance(p, Fraction) else 1.0
    return (one * p) ** k * (one - p) ** (comb(n, 2) - k)
