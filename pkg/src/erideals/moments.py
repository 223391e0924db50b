"""Closed-form moments of induced-copy counts and the probability bounds built on them.

All formulas evaluate in whatever number type ``p`` carries: pass a
:class:`fractions.Fraction` for exact rational results (used when comparing
against the exhaustive oracle), a float for sweeps.  The expressions are
implemented term for term as published, including the coefficient
``C(6,3) = 20`` in the expectation of ``Y_T``; see :mod:`erideals.oracle` for
the exact count it should be compared with.
"""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import DomainError, ParameterError
from .graph import Pattern

__all__ = [
    "expectation_Y_T_paper",
    "variance_bound_Y_T",
    "chebyshev_lb_T",
    "expectation_Y_Et",
    "variance_bound_Y_Et",
    "chebyshev_lb_Et",
    "markov_ub_cycles",
    "markov_ub_Et",
    "Schedule",
    "schedule_eval",
    "MomentReport",
    "moment_report",
]

PUBLISHED_T_COEFFICIENT = 20


def _prob(p):
    if not 0 <= p <= 1:
        raise ParameterError(f"p={p} outside [0, 1]")
    return p, (Fraction(1) if isinstance(p, Fraction) else 1.0) - p


def _clamp01(x):
    return min(max(x, 0), 1)


def _need(n: int, k: int, what: str) -> None:
    if n < k:
        raise ParameterError(f"{what} needs n >= {k}, got n={n}")


def expectation_Y_T_paper(n: int, p):
    """``C(n,6) * C(6,3) * p^6 q^9`` (expected number of induced ``T``)."""
    _need(n, 6, "E[Y_T]")
    p, q = _prob(p)
    return comb(n, 6) * PUBLISHED_T_COEFFICIENT * p**6 * q**9


def variance_bound_Y_T(n: int, p):
    """Eight-term upper bound on ``Var(Y_T)``."""
    _need(n, 6, "Var(Y_T) bound")
    p, q = _prob(p)
    return (
        n**10 * p**11 * q**18
        + n**10 * p**12 * q**17
        + n**9 * p**11 * q**16
        + n**9 * p**9 * q**18
        + n**8 * p**10 * q**14
        + n**8 * p**9 * q**15
        + n**7 * p**8 * q**12
        + n**6 * p**6 * q**9
    )


def chebyshev_lb_T(n: int, p):
    """Second-moment lower bound on ``P(Y_T > 0)``, clamped to ``[0, 1]``."""
    _need(n, 6, "P(Y_T > 0) bound")
    p, q = _prob(p)
    if p == 0 or p == 1:
        raise ParameterError("the bound is undefined for p in {0, 1}")
    denom = 400 * comb(n, 6) ** 2 * p**12 * q**18
    return _clamp01(1 - variance_bound_Y_T(n, p) / denom)


def _check_t(n: int, t: int) -> None:
    if t < 2:
        raise ParameterError("t must be > 1")
    _need(n, t, f"E_{t}")


def expectation_Y_Et(n: int, t: int, p):
    """``C(n,t) q^C(t,2)``: expected number of stable ``t``-sets."""
    _check_t(n, t)
    p, q = _prob(p)
    return comb(n, t) * q ** comb(t, 2)


def _overlap_sum(n: int, t: int, q):
    if q == 0:
        raise ParameterError("the variance bound divides by q and is undefined at p = 1")
    one = Fraction(1) if isinstance(q, Fraction) else 1.0
    return sum(one / (n**j * q ** comb(j, 2)) for j in range(2, t + 1))


def variance_bound_Y_Et(n: int, t: int, p):
    """``n^2t q^(2 C(t,2)) * sum_{j=2..t} 1 / (n^j q^C(j,2))``."""
    _check_t(n, t)
    p, q = _prob(p)
    return n ** (2 * t) * q ** (2 * comb(t, 2)) * _overlap_sum(n, t, q)


def chebyshev_lb_Et(n: int, t: int, p):
    """Second-moment lower bound on ``P(Y_{E_t} > 0)``, clamped to ``[0, 1]``.

    The sum starts at ``j = 2``.
    """
    _check_t(n, t)
    p, q = _prob(p)
    ratio = Fraction(n ** (2 * t), comb(n, t) ** 2)
    if not isinstance(q, Fraction):
        ratio = float(ratio)
    return _clamp01(1 - ratio * _overlap_sum(n, t, q))


def markov_ub_cycles(n: int, p):
    """``(np)^3 / (1 - np)``, an upper bound on ``P(G has a cycle)`` for ``np < 1``."""
    p, q = _prob(p)
    np_ = n * p
    if np_ >= 1:
        raise DomainError(f"bound needs n*p < 1, got {float(np_):g}")
    return np_**3 / (1 - np_)


def markov_ub_Et(n: int, t: int, p):
    """Markov bound ``P(Y_{E_t} > 0) <= E[Y_{E_t}]`` (not clamped)."""
    return expectation_Y_Et(n, t, p)


# -- schedules ------------------------------------------------------------------

_SCHEDULE_RE = re.compile(
    r"^\s*([pq])\s*=\s*([0-9.eE+-]+)\s*(?:\*\s*n\s*\^\s*\(?\s*(-?[0-9.eE+-]+)\s*\)?)?\s*$"
)


@dataclass(frozen=True)
class Schedule:
    """``p = c n^-alpha`` (kind ``"p"``) or ``q = c n^-alpha`` (kind ``"q"``)."""

    kind: str
    c: float
    alpha: float

    def __post_init__(self):
        if self.kind not in ("p", "q"):
            raise ParameterError("schedule kind must be 'p' or 'q'")
        if not self.c > 0 or self.alpha < 0:
            raise ParameterError("schedule needs c > 0 and alpha >= 0")

    @classmethod
    def parse(cls, text: str) -> "Schedule":
        """Parse ``"q=1*n^-0.5"`` / ``"p=2*n^-1"`` / ``"p=0.3"``."""
        m = _SCHEDULE_RE.match(text)
        if not m:
            raise ParameterError(f"cannot parse schedule {text!r}; expected e.g. 'q=1*n^-0.5'")
        kind, c, exponent = m.groups()
        return cls(kind, float(c), -float(exponent) if exponent is not None else 0.0)

    def evaluate(self, n: int) -> tuple[float, float, bool]:
        """``(p, q, clamped)`` at ``n``."""
        raw = self.c * float(n) ** (-self.alpha)
        value = min(max(raw, 0.0), 1.0)
        clamped = value != raw
        if self.kind == "p":
            return value, 1.0 - value, clamped
        return 1.0 - value, value, clamped

    @property
    def kind_name(self) -> str:
        return f"{self.kind}_schedule"

    def __str__(self):
        return f"{self.kind}={self.c:g}*n^-{self.alpha:g}"


def schedule_eval(kind: str, c: float, alpha: float, n: int) -> float:
    """Edge probability ``p`` produced by a schedule at ``n`` (clamped into [0, 1])."""
    kind = {"p_schedule": "p", "q_schedule": "q"}.get(kind, kind)
    return Schedule(kind, c, alpha).evaluate(n)[0]


# -- reports --------------------------------------------------------------------

@dataclass
class MomentReport:
    n: int
    p: float
    q: float
    pattern: str
    expectation: float
    variance_bound: Optional[float]
    chebyshev_lb: float
    markov_ub: float
    t: Optional[int] = None

    CSV_FIELDS = ("n", "p", "q", "t", "expectation", "variance_bound", "chebyshev_lb", "markov_ub")

    def to_json(self) -> dict:
        return asdict(self)

    def csv_row(self) -> list[str]:
        out = []
        for name in self.CSV_FIELDS:
            value = getattr(self, name)
            if value is None:
                out.append("")
            elif name in ("n", "t"):
                out.append(str(value))
            else:
                out.append(repr(float(value)))
        return out


def moment_report(n: int, p: float, pattern: Pattern) -> MomentReport:
    """Expectation, variance bound and the two probability bounds at ``(n, p)``.

    Where the second-moment bound is undefined (``p`` in ``{0, 1}``) the
    trivial lower bound 0 is reported.
    """
    if pattern.kind == "T":
        e = expectation_Y_T_paper(n, p)
        v = variance_bound_Y_T(n, p)
        try:
            lb = chebyshev_lb_T(n, p)
        except ParameterError:
            lb = 0.0
        return MomentReport(n, p, 1 - p, "T", float(e), float(v), float(lb), float(e))
    t = pattern.t
    e = expectation_Y_Et(n, t, p)
    try:
        v = float(variance_bound_Y_Et(n, t, p))
        lb = float(chebyshev_lb_Et(n, t, p))
    except ParameterError:
        v, lb = None, 0.0
    return MomentReport(n, p, 1 - p, str(pattern), float(e), v, lb, float(e), t=t)
