"""Named graph events, addressed by strings such as ``"dim_ge:3"``.

The same predicate objects run inside the exhaustive oracle and the Monte Carlo
estimator.  Prefix a name with ``not:`` for the complementary event.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import ParameterError
from .graph import (
    Graph,
    Pattern,
    count_induced,
    has_clique,
    has_cycle,
    has_independent_set,
    has_induced_T,
    is_bipartite,
)
from .normality import CoverNormality, cover_ideal_normality, find_hochster


def _dim_eq(g: Graph, t: int) -> bool:
    return has_independent_set(g, t) and not has_independent_set(g, t + 1)


# name -> (takes t, predicate)
_REGISTRY: dict[str, tuple[bool, Callable]] = {
    "always_true": (False, lambda g: True),
    "has_cycle": (False, has_cycle),
    "bipartite": (False, is_bipartite),
    "has_T_induced": (False, has_induced_T),
    "has_Et_induced": (True, lambda g, t: count_induced(g, Pattern("E", t)) > 0),
    "hochster": (False, lambda g: find_hochster(g) is not None),
    "edge_ideal_normal": (False, lambda g: find_hochster(g) is None),
    "cover_normal": (False, lambda g: cover_ideal_normality(g) is CoverNormality.NORMAL),
    "cover_not_normal_and_beta_le_2": (
        False,
        lambda g: cover_ideal_normality(g) is CoverNormality.NOT_NORMAL,
    ),
    "dim_ge": (True, has_independent_set),
    "dim_eq": (True, _dim_eq),
    "clique_ge": (True, has_clique),
}

EVENT_NAMES = tuple(_REGISTRY)


@dataclass(frozen=True)
class EventSpec:
    """A registered, isomorphism-invariant graph predicate.

    ``cover_normal`` counts only graphs whose cover ideal is certified normal;
    graphs where no criterion applies fall outside it.
    """

    name: str
    t: Optional[int] = None
    negate: bool = False

    def __post_init__(self):
        if self.name not in _REGISTRY:
            raise ParameterError(f"unknown event {self.name!r}; known: {', '.join(EVENT_NAMES)}")
        takes_t = _REGISTRY[self.name][0]
        if takes_t and (self.t is None or self.t < 1):
            raise ParameterError(f"event {self.name} needs a parameter, e.g. {self.name}:3")
        if takes_t and self.name == "has_Et_induced" and self.t < 2:
            raise ParameterError("has_Et_induced needs t > 1")
        if not takes_t and self.t is not None:
            raise ParameterError(f"event {self.name} takes no parameter")

    @classmethod
    def parse(cls, text: str) -> "EventSpec":
        text = text.strip()
        negate = False
        if text.startswith("not:"):
            negate, text = True, text[4:]
        name, _, arg = text.partition(":")
        t = None
        if arg:
            try:
                t = int(arg)
            except ValueError:
                raise ParameterError(f"event parameter must be an integer, got {arg!r}") from None
        return cls(name, t, negate)

    def __call__(self, g: Graph) -> bool:
        takes_t, fn = _REGISTRY[self.name]
        hit = fn(g, self.t) if takes_t else fn(g)
        return bool(hit) != self.negate

    def negated(self) -> "EventSpec":
        return EventSpec(self.name, self.t, not self.negate)

    def __str__(self):
        body = self.name if self.t is None else f"{self.name}:{self.t}"
        return f"not:{body}" if self.negate else body


def registry_events(ts=(2, 3)) -> list[EventSpec]:
    """Every registered event, parametric ones instantiated at each ``t``."""
    out = []
    for name, (takes_t, _) in _REGISTRY.items():
        if takes_t:
            out.extend(EventSpec(name, t) for t in ts)
        else:
            out.append(EventSpec(name))
    return out
