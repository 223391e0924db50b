"""Monte Carlo estimates of event probabilities and threshold sweeps.

Trial ``i`` of a run with seed ``s`` always sees the same graph (its edge
draws come from the counter-based stream ``(s, i)``).  Trials are processed
in fixed blocks whose hit counts are summed, so results do not depend on how
many worker processes are used.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from statistics import NormalDist

import numpy as np

from .errors import ParameterError
from .events import EventSpec
from .graph import Graph, edge_draws, graph_from_edge_bits
from .moments import Schedule
from .rng import philox4x32

__all__ = ["Estimate", "SweepRecord", "wilson_interval", "estimate", "sweep", "derive_seed"]

DEFAULT_CONFIDENCE = 0.95
_MAX_DRAWS_PER_BLOCK = 1 << 21
# graphs with at most this many vertex pairs are deduplicated by edge mask
_MASK_PAIRS = 62


def wilson_interval(hits: int, trials: int, confidence: float = DEFAULT_CONFIDENCE) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1 or not 0 <= hits <= trials:
        raise ParameterError("need 0 <= hits <= trials and trials >= 1")
    if not 0 < confidence < 1:
        raise ParameterError("confidence must lie strictly between 0 and 1")
    z = NormalDist().inv_cdf(0.5 + confidence / 2)
    phat = hits / trials
    z2 = z * z
    denom = 1 + z2 / trials
    centre = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials)) / denom
    lo = 0.0 if hits == 0 else max(0.0, centre - half)
    hi = 1.0 if hits == trials else min(1.0, centre + half)
    return lo, hi


@dataclass(frozen=True)
class Estimate:
    hits: int
    trials: int
    p_hat: float
    ci_lo: float
    ci_hi: float
    confidence: float = DEFAULT_CONFIDENCE

    @classmethod
    def from_counts(cls, hits: int, trials: int, confidence: float = DEFAULT_CONFIDENCE) -> "Estimate":
        lo, hi = wilson_interval(hits, trials, confidence)
        return cls(hits, trials, hits / trials, lo, hi, confidence)

    @property
    def sigma(self) -> float:
        """Binomial standard error at ``p_hat``."""
        return math.sqrt(self.p_hat * (1 - self.p_hat) / self.trials)

    def contains(self, value: float) -> bool:
        return self.ci_lo <= value <= self.ci_hi

    def to_json(self) -> dict:
        return asdict(self)


# process-local memo of predicate values on small graphs, keyed by edge mask
_memo: dict[tuple[str, int, int], bool] = {}


def _block_hits(args) -> int:
    n, p, ev, seed, lo, hi = args
    bits = edge_draws(n, p, seed, np.arange(lo, hi, dtype=np.uint64))
    m = bits.shape[1]
    if m <= _MASK_PAIRS:
        weights = np.left_shift(np.uint64(1), np.arange(m, dtype=np.uint64))
        masks = (bits.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
        uniq, counts = np.unique(masks, return_counts=True)
        key = str(ev)
        hits = 0
        for mask, c in zip(uniq.tolist(), counts.tolist()):
            k = (key, n, mask)
            hit = _memo.get(k)
            if hit is None:
                hit = _memo[k] = ev(Graph.from_edge_mask(n, mask))
            if hit:
                hits += c
        return hits
    return sum(1 for row in bits if ev(graph_from_edge_bits(n, row)))


def _blocks(n: int, trials: int) -> list[tuple[int, int]]:
    m = max(1, n * (n - 1) // 2)
    size = max(1, min(1 << 16, _MAX_DRAWS_PER_BLOCK // m))
    return [(lo, min(lo + size, trials)) for lo in range(0, trials, size)]


def estimate(
    n: int,
    p: float,
    ev: EventSpec | str,
    trials: int,
    seed: int = 0,
    confidence: float = DEFAULT_CONFIDENCE,
    jobs: int = 1,
) -> Estimate:
    """Estimate ``P(ev)`` under G(n, p) from trials ``0..trials-1``."""
    if isinstance(ev, str):
        ev = EventSpec.parse(ev)
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    if not 0 < confidence < 1:
        raise ParameterError("confidence must lie strictly between 0 and 1")
    if not 0 <= p <= 1:
        raise ParameterError(f"p={p} outside [0, 1]")
    if n < 0:
        raise ParameterError("n must be nonnegative")
    if not 0 <= seed < 1 << 64:
        raise ParameterError("seed must fit in 64 unsigned bits")
    tasks = [(n, p, ev, seed, lo, hi) for lo, hi in _blocks(n, trials)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = sum(pool.map(_block_hits, tasks))
    else:
        hits = sum(map(_block_hits, tasks))
    return Estimate.from_counts(hits, trials, confidence)


def derive_seed(seed: int, n: int) -> int:
    """Independent 64-bit seed for the ``n``-vertex leg of a sweep."""
    o = philox4x32(n & 0xFFFFFFFF, n >> 32, 0x5EED, 0, seed & 0xFFFFFFFF, seed >> 32)
    return (int(o[0]) << 32) | int(o[1])


@dataclass(frozen=True)
class SweepRecord:
    n: int
    schedule_kind: str
    c: float
    alpha: float
    p: float
    q: float
    event: str
    trials: int
    hits: int
    p_hat: float
    ci_lo: float
    ci_hi: float
    seconds: float | None
    clamped: bool = False

    CSV_FIELDS = (
        "n", "schedule_kind", "c", "alpha", "p", "q", "event", "trials",
        "hits", "p_hat", "ci_lo", "ci_hi", "seconds", "clamped",
    )

    @property
    def estimate(self) -> Estimate:
        return Estimate(self.hits, self.trials, self.p_hat, self.ci_lo, self.ci_hi)

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self.CSV_FIELDS}

    def csv_row(self) -> list[str]:
        out = []
        for name in self.CSV_FIELDS:
            v = getattr(self, name)
            if v is None:
                out.append("")
            elif isinstance(v, bool):
                out.append(str(v).lower())
            elif isinstance(v, float):
                out.append(repr(v))
            else:
                out.append(str(v))
        return out


def sweep(
    ev: EventSpec | str,
    schedule: Schedule | str,
    n_list,
    trials: int,
    seed: int = 0,
    confidence: float = DEFAULT_CONFIDENCE,
    jobs: int = 1,
    timing: bool = True,
) -> list[SweepRecord]:
    """One estimate per ``n`` with ``p`` (or ``q``) given by ``schedule``.

    Each ``n`` draws from its own seed (:func:`derive_seed`).  With
    ``timing=False`` the ``seconds`` field is left empty so that output is
    reproducible byte for byte.
    """
    if isinstance(ev, str):
        ev = EventSpec.parse(ev)
    if isinstance(schedule, str):
        schedule = Schedule.parse(schedule)
    n_list = list(n_list)
    if not n_list:
        raise ParameterError("n_list must be nonempty")
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ParameterError("n_list must be strictly ascending")
    records = []
    for n in n_list:
        p, q, clamped = schedule.evaluate(n)
        start = time.perf_counter()
        est = estimate(n, p, ev, trials, derive_seed(seed, n), confidence, jobs)
        elapsed = time.perf_counter() - start
        records.append(
            SweepRecord(
                n, schedule.kind_name, schedule.c, schedule.alpha, p, q, str(ev), trials,
                est.hits, est.p_hat, est.ci_lo, est.ci_hi, elapsed if timing else None, clamped,
            )
        )
    return records
