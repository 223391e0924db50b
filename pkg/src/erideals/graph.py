"""Simple labeled graphs stored as packed adjacency bitsets, plus G(n, p) sampling.

A :class:`Graph` keeps one Python ``int`` per vertex whose bit ``u`` is set iff
``{v, u}`` is an edge.  Neighbourhood intersections, stable-set tests and the
clique searches below are therefore word-parallel bit operations.

Vertex sets are passed around as ``frozenset`` objects at the public surface and
as bitmasks internally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .errors import GraphFormatError, ParameterError, ResourceLimitError
from .rng import uniforms

__all__ = [
    "Graph",
    "Pattern",
    "SampleSpec",
    "sample_er",
    "edge_draws",
    "graph_from_edge_bits",
    "complement",
    "induced",
    "has_cycle",
    "is_bipartite",
    "independence_number",
    "clique_number",
    "has_independent_set",
    "has_clique",
    "count_induced",
    "triangles",
    "maximal_independent_sets",
    "parse_graph_text",
    "format_graph_text",
    "parse_graph_json",
    "graph_to_json",
]

DEFAULT_MIS_LIMIT = 10**6


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood bitmask of ``v``.  Prefer the
    constructors (:meth:`from_edges`, :meth:`empty`, ...) over building rows by
    hand.
    """

    n: int
    rows: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ParameterError("rows must have exactly n entries")
        full = (1 << self.n) - 1
        for v, r in enumerate(self.rows):
            if r & ~full or (r >> v) & 1:
                raise ParameterError(f"invalid adjacency row for vertex {v}")
            for u in iter_bits(r):
                if not (self.rows[u] >> v) & 1:
                    raise ParameterError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def _trusted(cls, n: int, rows) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, strict: bool = False) -> "Graph":
        """Build a graph from an edge list.

        With ``strict=True`` duplicated edges are rejected as well as self
        loops and out-of-range labels (which are always rejected).
        """
        rows = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if strict and (rows[u] >> v) & 1:
                raise ParameterError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._trusted(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ParameterError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edge set is bit ``k`` of ``mask`` for the ``k``-th
        pair in lexicographic order ``(0,1), (0,2), ..., (n-2,n-1)``."""
        rows = [0] * n
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                if (mask >> k) & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                k += 1
        return cls._trusted(n, rows)

    def edge_mask(self) -> int:
        mask = 0
        k = 0
        for u in range(self.n):
            r = self.rows[u]
            for v in range(u + 1, self.n):
                if (r >> v) & 1:
                    mask |= 1 << k
                k += 1
        return mask

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return to_set(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def closed_neighborhood(self, mask: int) -> int:
        """Bitmask of ``mask`` together with every vertex adjacent to it."""
        out = mask
        for v in iter_bits(mask):
            out |= self.rows[v]
        return out

    def disjoint_union(self, other: "Graph") -> "Graph":
        s = self.n
        return Graph._trusted(self.n + other.n, list(self.rows) + [r << s for r in other.rows])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Pattern:
    """Pattern graphs ``T`` (two vertex-disjoint triangles) and ``E_t``
    (``t`` isolated vertices)."""

    kind: str
    t: int = 0

    def __post_init__(self):
        if self.kind == "E":
            if self.t < 2:
                raise ParameterError("E_t needs t > 1")
        elif self.kind != "T":
            raise ParameterError(f"unknown pattern kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        text = text.strip()
        if text == "T":
            return cls("T")
        if text[:1] == "E" and text[1:].lstrip("_").isdigit():
            return cls("E", int(text[1:].lstrip("_")))
        raise ParameterError(f"cannot parse pattern {text!r} (use T or E<t>)")

    @property
    def order(self) -> int:
        return 6 if self.kind == "T" else self.t

    def graph(self) -> Graph:
        if self.kind == "T":
            return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        return Graph.empty(self.t)

    def __str__(self):
        return "T" if self.kind == "T" else f"E{self.t}"


# -- sampling -------------------------------------------------------------------

def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability {p} outside [0, 1]")


@dataclass(frozen=True)
class SampleSpec:
    n: int
    p: float
    seed: int = 0
    trial_index: int = 0

    def __post_init__(self):
        _check_p(self.p)
        if self.n < 0 or self.trial_index < 0:
            raise ParameterError("n and trial_index must be nonnegative")
        if not 0 <= self.seed < 1 << 64:
            raise ParameterError("seed must fit in 64 unsigned bits")

    def sample(self) -> Graph:
        return sample_er(self.n, self.p, self.seed, self.trial_index)


def edge_draws(n: int, p: float, seed: int, trials) -> np.ndarray:
    """Boolean array ``(len(trials), n*(n-1)/2)``: pair ``k`` (lexicographic)
    is an edge in trial ``i``."""
    _check_p(p)
    m = n * (n - 1) // 2
    return uniforms(seed, trials, m) < p


def graph_from_edge_bits(n: int, bits: np.ndarray) -> Graph:
    """Graph from one row of :func:`edge_draws`."""
    if n < 2:
        return Graph.empty(n)
    a = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, 1)
    a[iu] = bits
    a |= a.T
    packed = np.packbits(a, axis=1, bitorder="little")
    return Graph._trusted(n, [int.from_bytes(row.tobytes(), "little") for row in packed])


def sample_er(n: int, p: float, seed: int = 0, trial: int = 0) -> Graph:
    """Erdos-Renyi sample: each of the ``C(n,2)`` pairs is an edge with
    probability ``p``, drawn from the counter-based stream of ``(seed, trial)``.
    """
    if n < 0 or trial < 0:
        raise ParameterError("n and trial must be nonnegative")
    return graph_from_edge_bits(n, edge_draws(n, p, seed, [trial])[0])


# -- basic operations -----------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def induced(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabeled ``0..|s|-1`` in increasing order."""
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range for n={g.n}")
    rows = []
    for v in verts:
        r = g.rows[v]
        rows.append(sum(1 << i for i, u in enumerate(verts) if (r >> u) & 1))
    return Graph._trusted(len(verts), rows)


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def has_cycle(g: Graph) -> bool:
    # a forest has exactly n - c edges
    return g.m > g.n - len(components(g))


def bfs_layers(g: Graph, root: int, within: int | None = None) -> list[int]:
    allowed = ((1 << g.n) - 1) if within is None else within
    layers = [1 << root]
    seen = 1 << root
    while True:
        nxt = 0
        for u in iter_bits(layers[-1]):
            nxt |= g.rows[u]
        nxt &= allowed & ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)


def is_bipartite(g: Graph, within: int | None = None) -> bool:
    """2-colourability of ``g`` (or of the subgraph induced on ``within``)."""
    todo = ((1 << g.n) - 1) if within is None else within
    while todo:
        root = (todo & -todo).bit_length() - 1
        for layer in bfs_layers(g, root, todo):
            for u in iter_bits(layer):
                if g.rows[u] & layer:
                    return False
            todo &= ~layer
    return True


# -- cliques and stable sets ----------------------------------------------------

def _colour_order(adj, cand: int):
    """Greedy sequential colouring of ``cand``; returns vertices and colour
    numbers in nondecreasing colour order."""
    order = []
    colours = []
    k = 0
    while cand:
        k += 1
        avail = cand
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            cand &= ~low
            order.append(v)
            colours.append(k)
    return order, colours


def _max_clique(adj, n: int, target: int | None = None) -> int:
    """Size of a maximum clique of the graph with adjacency rows ``adj``.

    Branch and bound with greedy-colouring bounds.  If ``target`` is given
    the search stops as soon as a clique of that size is found, and prunes
    every branch that cannot reach it; the return value is then only
    meaningful as ``>= target`` or ``< target``.
    """
    if n == 0:
        return 0
    best = 1 if target is None else max(1, target - 1)
    if target is not None and target <= 1:
        return 1
    stop = target if target is not None else n + 1

    def expand(size: int, cand: int) -> bool:
        nonlocal best
        order, colours = _colour_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colours[i] <= best:
                return False
            v = order[i]
            sub = cand & adj[v]
            if sub:
                if expand(size + 1, sub):
                    return True
            elif size + 1 > best:
                best = size + 1
                if best >= stop:
                    return True
            cand &= ~(1 << v)
        return False

    found = expand(0, (1 << n) - 1)
    if target is not None:
        return target if found else target - 1
    return best


def clique_number(g: Graph) -> int:
    return _max_clique(g.rows, g.n)


def has_clique(g: Graph, t: int) -> bool:
    if t <= 0:
        return True
    if t > g.n:
        return False
    if t == 1:
        return True
    return _max_clique(g.rows, g.n, target=t) >= t


def independence_number(g: Graph) -> int:
    """Exact independence number (largest stable set size)."""
    return clique_number(complement(g))


def has_independent_set(g: Graph, t: int) -> bool:
    """True iff ``g`` has a stable set of size ``t``; stops at the first one."""
    if t < 0:
        raise ParameterError("t must be nonnegative")
    return has_clique(complement(g), t)


def _count_cliques(adj, cand: int, k: int) -> int:
    if k == 1:
        return cand.bit_count()
    total = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        sub = cand & adj[v]
        if sub.bit_count() >= k - 1:
            total += _count_cliques(adj, sub, k - 1)
    return total


def triangles(g: Graph) -> list[int]:
    """All triangles as 3-bit masks, each listed once."""
    out = []
    for u in range(g.n):
        hi = g.rows[u] >> (u + 1) << (u + 1)
        for v in iter_bits(hi):
            for w in iter_bits(hi & g.rows[v] >> (v + 1) << (v + 1)):
                out.append((1 << u) | (1 << v) | (1 << w))
    return out


def count_induced(g: Graph, pat: Pattern) -> int:
    """Number of vertex subsets inducing a copy of ``pat``."""
    if pat.kind == "E":
        if pat.t > g.n:
            return 0
        comp = complement(g)
        return _count_cliques(comp.rows, (1 << g.n) - 1, pat.t)
    # a 6-set induces T iff it is the union of two triangles with no edge
    # between them; the two triangles are then determined by the set
    tris = triangles(g)
    closed = [g.closed_neighborhood(t) for t in tris]
    count = 0
    for i in range(len(tris)):
        ci = closed[i]
        for j in range(i + 1, len(tris)):
            if not tris[j] & ci:
                count += 1
    return count


def has_induced_T(g: Graph) -> bool:
    tris = triangles(g)
    closed = [g.closed_neighborhood(t) for t in tris]
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            if not tris[j] & closed[i]:
                return True
    return False


def maximal_independent_sets(g: Graph, limit: int = DEFAULT_MIS_LIMIT) -> list[frozenset[int]]:
    """All maximal stable sets of ``g`` (Bron-Kerbosch with pivoting on the
    complement).  Raises :class:`ResourceLimitError` beyond ``limit`` sets."""
    if limit <= 0:
        raise ParameterError("limit must be positive")
    adj = complement(g).rows
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            if len(out) > limit:
                raise ResourceLimitError(f"more than {limit} maximal independent sets (reached {len(out)})")
            return
        px = p | x
        pivot = max(iter_bits(px), key=lambda u: (p & adj[u]).bit_count())
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            bk(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n == 0:
        return [frozenset()]
    bk(0, (1 << g.n) - 1, 0)
    return sorted((to_set(m) for m in out), key=sorted)


# -- file formats ---------------------------------------------------------------

def format_graph_text(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def _checked_graph(n: int, edges, where, ordered: bool = False) -> Graph:
    rows = [0] * n
    for idx, (u, v) in enumerate(edges):
        line = where(idx)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex label out of range 0..{n - 1}", line)
        if ordered and u > v:
            raise GraphFormatError("edge must be written as 'u v' with u < v", line)
        if (rows[u] >> v) & 1:
            raise GraphFormatError(f"duplicate edge {min(u, v)} {max(u, v)}", line)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def parse_graph_text(text: str) -> Graph:
    """Parse the ``"n m"`` header + ``m`` lines of ``"u v"`` edge format.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = text.splitlines()
    content = [i for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not content:
        raise GraphFormatError("empty input", 1)

    def ints(i):
        try:
            return [int(tok) for tok in lines[i].split()]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {lines[i]!r}", i + 1) from None

    first, body = content[0], content[1:]
    head = ints(first)
    if len(head) != 2 or head[0] < 0 or head[1] < 0:
        raise GraphFormatError("header must be 'n m' with n, m >= 0", first + 1)
    n, m = head
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}", len(lines))
    edges = []
    for i in body:
        pair = ints(i)
        if len(pair) != 2:
            raise GraphFormatError("edge line must hold two integers", i + 1)
        edges.append(tuple(pair))
    return _checked_graph(n, edges, lambda idx: body[idx] + 1, ordered=True)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def parse_graph_json(data) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed graph JSON: {exc}") from None
    if n < 0:
        raise GraphFormatError("n must be nonnegative")
    return _checked_graph(n, edges, lambda idx: None)


def all_subsets(n: int, k: int):
    """Bitmasks of all ``k``-subsets of ``range(n)``."""
    for c in combinations(range(n), k):
        yield to_mask(c)
