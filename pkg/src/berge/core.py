"""Uniform hypergraphs with bitset edges, degree machinery, and incidence views.

Vertices are integers ``0..n-1`` and every edge is stored as an ``int``
bitmask, which keeps membership tests, intersections, and cyclic shifts O(1)
for the supported range ``n <= 64``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class BergeError(Exception):
    """Base class for every error raised by this package."""


class BadUniformity(BergeError):
    pass


class NonUniformEdge(BergeError):
    pass


class DuplicateEdge(BergeError):
    pass


class VertexOutOfRange(BergeError):
    pass


class SameVertex(BergeError):
    pass


class FormatError(BergeError):
    pass


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def rotate_mask(mask: int, t: int, n: int) -> int:
    """Cyclically shift every vertex of ``mask`` by ``t`` modulo ``n``."""
    t %= n
    if t == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << t) | (mask >> (n - t))) & full


@dataclass(frozen=True)
class Hypergraph:
    """An ``r``-uniform hypergraph on vertices ``0..n-1`` with ordered, distinct edges."""

    n: int
    r: int
    edge_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise VertexOutOfRange(f"vertex count {self.n} outside supported range 1..{MAX_VERTICES}")
        if not 2 <= self.r <= self.n:
            raise BadUniformity(f"uniformity {self.r} outside 2..n={self.n}")
        full = (1 << self.n) - 1
        seen = set()
        for j, m in enumerate(self.edge_masks):
            if m & ~full:
                raise VertexOutOfRange(f"edge {j} uses a vertex outside 0..{self.n - 1}")
            if m.bit_count() != self.r:
                raise NonUniformEdge(f"edge {j} has {m.bit_count()} vertices, expected {self.r}")
            if m in seen:
                raise DuplicateEdge(f"edge {j} repeats an earlier edge")
            seen.add(m)

    @property
    def edge_count(self) -> int:
        return len(self.edge_masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def members(self, j: int) -> tuple[int, ...]:
        return tuple(bits(self.edge_masks[j]))

    def covers(self, j: int, v: int) -> bool:
        return bool(self.edge_masks[j] >> v & 1)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise VertexOutOfRange("adjacency length differs from vertex count")
        for v, m in enumerate(self.adj):
            if m >> v & 1:
                raise VertexOutOfRange(f"self-loop at vertex {v}")
            for u in bits(m):
                if u >= self.n or not self.adj[u] >> v & 1:
                    raise VertexOutOfRange(f"adjacency not symmetric at {v},{u}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * n
        for u, v in pairs:
            if u == v:
                raise SameVertex(f"loop edge {u},{v}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge {u},{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if v > u:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2


@dataclass(frozen=True)
class BipartiteIncidence:
    """Vertex/edge incidence of a hypergraph as a bipartite structure.

    Left vertices are the hypergraph vertices, right vertices its edge
    indices; left ``v`` is adjacent to right ``j`` iff ``v`` lies in edge
    ``j``.  A cycle of length ``2*l`` here corresponds to a Berge cycle of
    length ``l`` in the hypergraph.
    """

    n_left: int
    right_masks: tuple[int, ...]

    @property
    def n_right(self) -> int:
        return len(self.right_masks)

    def right_degree(self, j: int) -> int:
        return self.right_masks[j].bit_count()

    def left_degree(self, v: int) -> int:
        return sum(1 for m in self.right_masks if m >> v & 1)

    def adjacent(self, v: int, j: int) -> bool:
        return bool(self.right_masks[j] >> v & 1)

    def as_graph(self) -> SimpleGraph:
        """Plain graph view: left vertices ``0..n-1``, right vertices ``n..n+m-1``."""
        n, m = self.n_left, self.n_right
        pairs = [(v, n + j) for j in range(m) for v in bits(self.right_masks[j])]
        return SimpleGraph.from_edges(n + m, pairs)


def make_hypergraph(n: int, r: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and build a hypergraph from explicit vertex sets, preserving edge order."""
    masks = []
    for idx, edge in enumerate(edges):
        vs = list(edge)
        for v in vs:
            if not isinstance(v, int) or not 0 <= v < n:
                raise VertexOutOfRange(f"edge {idx} contains vertex {v!r} outside 0..{n - 1}")
        m = mask_of(vs)
        if m.bit_count() != len(vs) or len(vs) != r:
            raise NonUniformEdge(f"edge {idx} does not have exactly {r} distinct vertices")
        masks.append(m)
    return Hypergraph(n, r, tuple(masks))


def degree(H: Hypergraph, v: int) -> int:
    """Number of edges containing ``v``."""
    if not 0 <= v < H.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{H.n - 1}")
    return sum(1 for m in H.edge_masks if m >> v & 1)


def codegree(H: Hypergraph, u: int, v: int) -> int:
    """Number of edges containing both ``u`` and ``v``."""
    if not (0 <= u < H.n and 0 <= v < H.n):
        raise VertexOutOfRange(f"pair {u},{v} outside 0..{H.n - 1}")
    if u == v:
        raise SameVertex("co-degree needs two distinct vertices")
    pair = (1 << u) | (1 << v)
    return sum(1 for m in H.edge_masks if m & pair == pair)


def min_degree(H: Hypergraph) -> int:
    return min(degree(H, v) for v in range(H.n))


def degree_threshold(n: int, r: int) -> int:
    """Minimum-degree bound above which an r-uniform n-vertex hypergraph is pancyclic.

    Two clauses: ``C(floor((n-1)/2), r-1) + 1`` for ``r <= floor((n-1)/2)``
    and ``r`` for ``r >= n/2``; the binomial clause takes precedence at the
    boundary.
    """
    if not 3 <= r < n:
        raise BadUniformity(f"threshold defined for 3 <= r < n, got r={r}, n={n}")
    half = (n - 1) // 2
    if r <= half:
        return math.comb(half, r - 1) + 1
    return r


def incidence_graph(H: Hypergraph) -> BipartiteIncidence:
    return BipartiteIncidence(H.n, H.edge_masks)


def shadow2(H: Hypergraph) -> SimpleGraph:
    """Graph with an edge for every vertex pair covered by some hyperedge."""
    adj = [0] * H.n
    for m in H.edge_masks:
        for v in bits(m):
            adj[v] |= m & ~(1 << v)
    return SimpleGraph(H.n, tuple(adj))


def to_text(H: Hypergraph) -> str:
    """Serialize to the line format ``n m r`` followed by one sorted edge per line."""
    lines = [f"{H.n} {H.edge_count} {H.r}"]
    for j in range(H.edge_count):
        lines.append(" ".join(str(v) for v in H.members(j)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    """Parse the text format; ``#`` starts a comment line, blank lines are skipped."""
    rows = []
    for ln in text.splitlines():
        stripped = ln.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append(stripped)
    if not rows:
        raise FormatError("empty hypergraph file")
    head = rows[0].split()
    if len(head) != 3:
        raise FormatError(f"header must be 'n m r', got {rows[0]!r}")
    try:
        n, m, r = (int(tok) for tok in head)
    except ValueError as exc:
        raise FormatError(f"non-integer header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        try:
            vs = [int(tok) for tok in row.split()]
        except ValueError as exc:
            raise FormatError(f"non-integer vertex in {row!r}") from exc
        if len(vs) != r:
            raise FormatError(f"edge line {row!r} should list {r} vertices")
        if any(b <= a for a, b in zip(vs, vs[1:])):
            raise FormatError(f"edge line {row!r} must be strictly increasing")
        edges.append(vs)
    return make_hypergraph(n, r, edges)
