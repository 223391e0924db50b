"""Exact probabilities by enumerating every labeled graph on ``n`` vertices.

An event's probability under G(n, p) is ``sum_m c_m p^m q^(M-m)`` with
``M = C(n, 2)`` and ``c_m`` the number of labeled ``m``-edge graphs in the
event.  The coefficient vector is computed once and evaluated at any ``p``,
exactly (``Fraction``) or in floating point.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Callable, Sequence

from .errors import ParameterError, ResourceLimitError
from .events import EventSpec
from .graph import Graph, Pattern, count_induced

__all__ = [
    "ProbPolynomial",
    "enumerate_event",
    "enumerate_expectation",
    "evaluate",
    "count_labeled_copies",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 7
HARD_CAP = 8
_CHUNK = 1 << 14


@dataclass(frozen=True)
class ProbPolynomial:
    """Coefficients ``c_0..c_M`` of ``sum_m c_m p^m (1-p)^(M-m)``."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.M + 1:
            raise ParameterError(f"need {self.M + 1} coefficients for n={self.n}")

    @property
    def M(self) -> int:
        return comb(self.n, 2)

    def evaluate(self, p):
        """Value at ``p``; exact for ``Fraction`` input, compensated
        summation for floats."""
        if not 0 <= p <= 1:
            raise ParameterError(f"p={p} outside [0, 1]")
        M = self.M
        if isinstance(p, (Fraction, int)):
            p = Fraction(p)
            q = 1 - p
            return sum((c * p**m * q ** (M - m) for m, c in enumerate(self.coeffs) if c), Fraction(0))
        p = float(p)
        q = 1.0 - p
        return math.fsum(c * p**m * q ** (M - m) for m, c in enumerate(self.coeffs) if c)

    def __add__(self, other: "ProbPolynomial") -> "ProbPolynomial":
        if other.n != self.n:
            raise ParameterError("cannot add polynomials for different n")
        return ProbPolynomial(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def complement(self) -> "ProbPolynomial":
        """Coefficients of the complementary event."""
        M = self.M
        return ProbPolynomial(self.n, tuple(comb(M, m) - c for m, c in enumerate(self.coeffs)))

    def to_json(self) -> dict:
        return {"n": self.n, "M": self.M, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "ProbPolynomial":
        poly = cls(int(data["n"]), tuple(int(c) for c in data["coeffs"]))
        if int(data.get("M", poly.M)) != poly.M:
            raise ParameterError("M does not match n")
        return poly

    def csv_rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.coeffs))


def evaluate(poly: ProbPolynomial, p):
    return poly.evaluate(p)


# -- enumeration ----------------------------------------------------------------

def _pair_bits(n: int) -> list[tuple[int, int]]:
    """For the k-th lexicographic pair (u, v): the row contributions."""
    out = []
    for u in range(n):
        for v in range(u + 1, n):
            out.append((u, v))
    return out


def _graphs(n: int, lo: int, hi: int):
    """Yield ``(mask, graph)`` for edge masks ``lo..hi-1``."""
    pairs = _pair_bits(n)
    for mask in range(lo, hi):
        rows = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            u, v = pairs[low.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            rest ^= low
        yield mask, Graph._trusted(n, rows)


def _event_chunk(args) -> list[int]:
    n, ev, lo, hi = args
    counts = [0] * (comb(n, 2) + 1)
    for mask, g in _graphs(n, lo, hi):
        if ev(g):
            counts[mask.bit_count()] += 1
    return counts


def _moment_chunk(args) -> list[int]:
    n, pat, power, lo, hi = args
    counts = [0] * (comb(n, 2) + 1)
    for mask, g in _graphs(n, lo, hi):
        y = count_induced(g, pat)
        if y:
            counts[mask.bit_count()] += y**power
    return counts


def _check_n(n: int, cap: int) -> None:
    if n < 0:
        raise ParameterError("n must be nonnegative")
    if cap > HARD_CAP:
        raise ResourceLimitError(f"cap {cap} exceeds the hard limit {HARD_CAP}")
    if n > cap:
        raise ResourceLimitError(
            f"n={n} means {2 ** comb(n, 2)} graphs; above the cap {cap} (raise the cap explicitly, max {HARD_CAP})"
        )


def _run(worker: Callable, n: int, make_args, jobs: int) -> ProbPolynomial:
    total = 1 << comb(n, 2)
    tasks = [make_args(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(worker, tasks))
    else:
        parts = [worker(t) for t in tasks]
    coeffs = [sum(col) for col in zip(*parts)]
    return ProbPolynomial(n, tuple(coeffs))


def enumerate_event(n: int, ev: EventSpec | str, cap: int = DEFAULT_CAP, jobs: int = 1) -> ProbPolynomial:
    """Exact probability polynomial of ``ev`` on ``n`` vertices.

    Edge masks are split into fixed contiguous ranges and the partial
    coefficient vectors summed, so the result does not depend on ``jobs``.
    """
    if isinstance(ev, str):
        ev = EventSpec.parse(ev)
    _check_n(n, cap)
    return _run(_event_chunk, n, lambda lo, hi: (n, ev, lo, hi), jobs)


def enumerate_expectation(
    n: int, pat: Pattern | str, cap: int = DEFAULT_CAP, jobs: int = 1, power: int = 1
) -> ProbPolynomial:
    """Polynomial whose value at ``p`` is ``E[Y_pat^power]`` under G(n, p)."""
    if isinstance(pat, str):
        pat = Pattern.parse(pat)
    if power < 1:
        raise ParameterError("power must be >= 1")
    _check_n(n, cap)
    return _run(_moment_chunk, n, lambda lo, hi: (n, pat, power, lo, hi), jobs)


def exact_variance(n: int, pat: Pattern | str, p: Fraction, cap: int = DEFAULT_CAP, jobs: int = 1) -> Fraction:
    first = enumerate_expectation(n, pat, cap, jobs).evaluate(p)
    second = enumerate_expectation(n, pat, cap, jobs, power=2).evaluate(p)
    return second - first**2


def _edge_set(g: Graph) -> frozenset:
    return frozenset(g.edges())


def count_labeled_copies(pat: Pattern | Graph, k: int) -> int:
    """Number of labeled graphs on ``k`` vertices isomorphic to ``pat``.

    Walks all ``2^C(k,2)`` labeled graphs, filters by edge count and degree
    sequence, and confirms isomorphism by trying every vertex bijection.
    """
    target = pat.graph() if isinstance(pat, Pattern) else pat
    if target.n != k:
        raise ParameterError(f"pattern has {target.n} vertices, not {k}")
    target_edges = _edge_set(target)
    target_degrees = sorted(target.degree(v) for v in range(k))
    count = 0
    for _, g in _graphs(k, 0, 1 << comb(k, 2)):
        if g.m != target.m or sorted(g.degree(v) for v in range(k)) != target_degrees:
            continue
        edges = _as_unordered(_edge_set(g))
        for perm in permutations(range(k)):
            if all(frozenset((perm[u], perm[v])) in edges for u, v in target_edges):
                count += 1
                break
    return count


def _as_unordered(edges: frozenset) -> frozenset:
    return frozenset(frozenset(e) for e in edges)


def automorphism_count(pat: Pattern | Graph) -> int:
    g = pat.graph() if isinstance(pat, Pattern) else pat
    edges = _as_unordered(_edge_set(g))
    return sum(
        all(frozenset((perm[u], perm[v])) in edges for u, v in map(tuple, edges))
        for perm in permutations(range(g.n))
    )


def grid(points: int = 9, denominator: int = 10) -> Sequence[Fraction]:
    """``k / denominator`` for ``k = 1..points`` as exact fractions."""
    return [Fraction(k, denominator) for k in range(1, points + 1)]
