"""Normality of edge ideals and cover ideals via Hochster configurations.

A Hochster configuration is a pair of induced odd cycles ``C1``, ``C2`` that are
vertex-disjoint with no edge between them.  ``I(G)`` is normal iff ``G`` has
none.  For ``beta_0(G) <= 2`` the cover ideal ``I_c(G)`` is normal iff the
complement of ``G`` has none; cover ideals of bipartite (hence perfect) graphs
are always normal.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import ParameterError
from .graph import Graph, complement, has_independent_set, is_bipartite, iter_bits, to_mask, to_set

__all__ = [
    "HochsterWitness",
    "CoverNormality",
    "induced_odd_cycles",
    "find_hochster",
    "find_hochster_naive",
    "edge_ideal_normal",
    "cover_ideal_normality",
]


@dataclass(frozen=True)
class HochsterWitness:
    c1: frozenset[int]
    c2: frozenset[int]

    def is_valid(self, g: Graph) -> bool:
        a, b = to_mask(self.c1), to_mask(self.c2)
        if not (_is_odd_hole(g, a) and _is_odd_hole(g, b)):
            return False
        return not (g.closed_neighborhood(a) & b)

    def to_json(self) -> dict:
        return {"c1": sorted(self.c1), "c2": sorted(self.c2)}


class CoverNormality(enum.Enum):
    NORMAL = "Normal"
    NOT_NORMAL = "NotNormal"
    UNDECIDED = "UndecidedBeta0TooLarge"

    def __str__(self):
        return self.value


def _is_odd_hole(g: Graph, mask: int) -> bool:
    """``mask`` spans a chordless cycle of odd length >= 3."""
    k = mask.bit_count()
    if k < 3 or k % 2 == 0:
        return False
    for v in iter_bits(mask):
        if (g.rows[v] & mask).bit_count() != 2:
            return False
    # 2-regular: connected iff it is a single cycle
    start = (mask & -mask).bit_length() - 1
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.rows[u] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == mask


def _chordless_cycles(rows, allowed: int, min_len: int, max_len: int) -> Iterator[int]:
    """Yield every chordless cycle inside ``allowed`` with odd length in
    ``[min_len, max_len]`` exactly once, as a bitmask.

    Each cycle is grown from its smallest vertex ``r`` as a chordless path
    ``r, v1, ..., vk`` over vertices larger than ``r``; it is reported when a
    vertex adjacent to ``r`` closes it, and only in the direction where
    ``v1`` is smaller than the closing vertex.
    """
    if max_len < 3:
        return
    for r in iter_bits(allowed):
        above = allowed & ~((2 << r) - 1)
        nr = rows[r] & above
        for v1 in iter_bits(nr):
            # (path mask, last vertex, vertex count, closed nbhds of interior vertices)
            stack = [((1 << r) | (1 << v1), v1, 2, 0)]
            while stack:
                path, last, k, blocked = stack.pop()
                cand = rows[last] & above & ~blocked & ~path
                grown = blocked | rows[last] | (1 << last)
                for w in iter_bits(cand):
                    bit = 1 << w
                    if nr & bit:
                        length = k + 1
                        if w > v1 and length % 2 and length >= min_len:
                            yield path | bit
                    elif k + 2 <= max_len:
                        stack.append((path | bit, w, k + 1, grown))


def induced_odd_cycles(g: Graph, max_len: Optional[int] = None) -> list[frozenset[int]]:
    """Vertex sets of all chordless odd cycles of length ``3..max_len``."""
    if max_len is None:
        max_len = g.n
    if max_len < 3:
        raise ParameterError("max_len must be at least 3")
    found = _chordless_cycles(g.rows, (1 << g.n) - 1, 3, max_len)
    return sorted((to_set(c) for c in found), key=lambda c: (len(c), sorted(c)))


def _odd_cycle(g: Graph, within: int) -> Optional[list[int]]:
    """Some odd cycle of the subgraph induced on ``within``, in cyclic order."""
    todo = within
    while todo:
        root = (todo & -todo).bit_length() - 1
        parent = {root: root}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.rows[u] & within):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif depth[w] == depth[u]:
                    left, right = [u], [w]
                    while left[-1] != right[-1]:
                        left.append(parent[left[-1]])
                        right.append(parent[right[-1]])
                    return left + right[-2::-1]
        todo &= ~to_mask(depth)
    return None


def _shorten_to_hole(g: Graph, cyc: list[int]) -> list[int]:
    """Cut an odd cycle along chords until it is chordless (and still odd)."""
    while True:
        size = len(cyc)
        pos = {v: i for i, v in enumerate(cyc)}
        cycmask = to_mask(cyc)
        chord = None
        for i, v in enumerate(cyc):
            for u in iter_bits(g.rows[v] & cycmask):
                j = pos[u]
                if j > i + 1 and not (i == 0 and j == size - 1):
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            return cyc
        i, j = chord
        inner = cyc[i : j + 1]
        outer = cyc[j:] + cyc[: i + 1]
        cyc = inner if len(inner) % 2 else outer


def _odd_hole_in(g: Graph, within: int) -> Optional[int]:
    cyc = _odd_cycle(g, within)
    if cyc is None:
        return None
    return to_mask(_shorten_to_hole(g, cyc))


def _triangle_pair(g: Graph) -> Optional[tuple[int, int]]:
    """Two triangles with no contact, found lazily."""
    seen: list[tuple[int, int]] = []
    for u in range(g.n):
        hi = g.rows[u] >> (u + 1) << (u + 1)
        for v in iter_bits(hi):
            for w in iter_bits(hi & g.rows[v] >> (v + 1) << (v + 1)):
                tri = (1 << u) | (1 << v) | (1 << w)
                for other, other_closed in seen:
                    if not tri & other_closed:
                        return other, tri
                seen.append((tri, g.closed_neighborhood(tri)))
    return None


def _hochster_core(g: Graph) -> int:
    """Vertices that can lie on some Hochster cycle.

    A vertex ``v`` of ``C1`` needs an odd cycle inside ``G - N[v]`` (namely
    ``C2``); iterating that condition on the surviving vertex set to a fixed
    point keeps every vertex of every configuration.
    """
    core = (1 << g.n) - 1
    while True:
        keep = 0
        for v in iter_bits(core):
            if not is_bipartite(g, core & ~g.rows[v] & ~(1 << v)):
                keep |= 1 << v
        if keep == core:
            return core
        core = keep


def find_hochster(g: Graph) -> Optional[HochsterWitness]:
    """A Hochster configuration of ``g``, or ``None`` if there is none.

    The search is exhaustive: every chordless odd cycle ``C1`` inside the
    pruned core is tried, and ``G - N[C1]`` is tested for an odd cycle (a
    shortest one there is chordless, so it serves as ``C2``).
    """
    if is_bipartite(g):
        return None
    pair = _triangle_pair(g)
    if pair:
        return HochsterWitness(to_set(pair[0]), to_set(pair[1]))
    core = _hochster_core(g)
    if not core:
        return None
    for c1 in _chordless_cycles(g.rows, core, 3, g.n):
        rest = core & ~g.closed_neighborhood(c1)
        c2 = _odd_hole_in(g, rest)
        if c2 is not None:
            return HochsterWitness(to_set(c1), to_set(c2))
    return None


def find_hochster_naive(g: Graph) -> Optional[HochsterWitness]:
    """Reference search by blind subset enumeration (use for ``n <= 16``).

    Lists every vertex subset of odd size that induces a cycle, then scans
    all pairs.  Shares no code with :func:`find_hochster`.
    """
    adj = [set(g.neighbors(v)) for v in range(g.n)]

    def induces_cycle(sub: tuple[int, ...]) -> bool:
        members = set(sub)
        for v in sub:
            if len(adj[v] & members) != 2:
                return False
        reach = {sub[0]}
        todo = [sub[0]]
        while todo:
            for u in adj[todo.pop()] & members:
                if u not in reach:
                    reach.add(u)
                    todo.append(u)
        return len(reach) == len(members)

    holes = [
        set(sub)
        for k in range(3, g.n + 1, 2)
        for sub in combinations(range(g.n), k)
        if induces_cycle(sub)
    ]
    for a, b in combinations(holes, 2):
        if a & b:
            continue
        if any(adj[v] & b for v in a):
            continue
        return HochsterWitness(frozenset(a), frozenset(b))
    return None


def edge_ideal_normal(g: Graph) -> bool:
    """Whether ``I(G)`` is normal (no Hochster configuration)."""
    return find_hochster(g) is None


def cover_ideal_normality(g: Graph) -> CoverNormality:
    """Normality of ``I_c(G)`` where a criterion is available.

    Bipartite graphs give ``NORMAL``.  Otherwise, with ``beta_0(G) <= 2``, the
    verdict follows from Hochster configurations of the complement; for
    larger independence number the answer is ``UNDECIDED``.
    """
    if is_bipartite(g):
        return CoverNormality.NORMAL
    if has_independent_set(g, 3):
        return CoverNormality.UNDECIDED
    if find_hochster(complement(g)) is None:
        return CoverNormality.NORMAL
    return CoverNormality.NOT_NORMAL
