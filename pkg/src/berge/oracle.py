"""Exact Berge-cycle decision procedures and the hamiltonian frame structure.

The searches are complete backtracking over vertex sequences with an
incremental bipartite-matching feasibility check (a Hall-style prune) between
the consecutive-pair slots fixed so far and the still-distinct edges.  A
node-expansion cap turns an overlong search into :class:`BudgetExceeded`,
never into a silent "absent".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import BergeError, Hypergraph, SimpleGraph, bits, shadow2


class LengthOutOfRange(BergeError):
    pass


class InvalidFrame(BergeError):
    pass


class BudgetExceeded(BergeError):
    """Raised when a search exceeds its node-expansion cap; outcome is unknown."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} node expansions")
        self.nodes = nodes


@dataclass(frozen=True)
class BergeCycle:
    """Alternating witness: ``edge_ids[i]`` must contain ``{vertices[i], vertices[i+1]}``."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def witness_str(cycle: BergeCycle) -> str:
    toks = []
    for v, e in zip(cycle.vertices, cycle.edge_ids):
        toks.append(str(v))
        toks.append(str(e))
    return " ".join(toks)


def parse_witness(text: str) -> BergeCycle:
    toks = text.split()
    if len(toks) % 2 or not toks:
        raise LengthOutOfRange(f"witness must alternate vertex/edge tokens: {text!r}")
    nums = [int(t) for t in toks]
    return BergeCycle(tuple(nums[0::2]), tuple(nums[1::2]))


def validate_berge_cycle(H: Hypergraph, cand: BergeCycle) -> tuple[str, ...]:
    """Return the violated invariant clauses (empty tuple means the witness is valid)."""
    bad: list[str] = []
    vs, es = cand.vertices, cand.edge_ids
    k = len(vs)
    if k < 2:
        bad.append(f"length {k} below 2")
    if len(es) != k:
        bad.append(f"{len(es)} edges for {k} vertices")
    if len(set(vs)) != len(vs):
        bad.append("repeated vertex")
    if len(set(es)) != len(es):
        bad.append("repeated edge")
    if any(not 0 <= v < H.n for v in vs):
        bad.append("vertex out of range")
    if any(not 0 <= e < H.edge_count for e in es):
        bad.append("edge id out of range")
    if bad:
        return tuple(bad)
    for i in range(k):
        pair = (1 << vs[i]) | (1 << vs[(i + 1) % k])
        if H.edge_masks[es[i]] & pair != pair:
            bad.append(f"edge {es[i]} misses pair {vs[i]},{vs[(i + 1) % k]}")
    return tuple(bad)


class _IncrementalMatcher:
    """Pair-slot to edge matching that supports push/pop with exact undo."""

    def __init__(self, edge_masks: Sequence[int]):
        self.masks = edge_masks
        self.pairs: list[int] = []
        self.assigned: list[int | None] = []
        self.owner: dict[int, int] = {}
        self._log: list[tuple[list[tuple[int, int | None]], int]] = []
        self._unchecked = 0
        self._cover_cache: dict[int, tuple[int, ...]] = {}

    def _cover(self, pm: int) -> tuple[int, ...]:
        got = self._cover_cache.get(pm)
        if got is None:
            got = tuple(j for j, em in enumerate(self.masks) if em & pm == pm)
            self._cover_cache[pm] = got
        return got

    def _try(self, slot: int, banned: set[int], trail: list[tuple[int, int | None]]) -> bool:
        for j in self._cover(self.pairs[slot]):
            if j in banned:
                continue
            banned.add(j)
            prev = self.owner.get(j)
            if prev is None or self._try(prev, banned, trail):
                self.owner[j] = slot
                self.assigned[slot] = j
                trail.append((j, prev))
                return True
        return False

    def _revert(self, trail: list[tuple[int, int | None]]) -> None:
        for j, prev in reversed(trail):
            cur = self.owner[j]
            if self.assigned[cur] == j:
                # a later trail entry may already have moved this slot on
                self.assigned[cur] = None
            if prev is None:
                del self.owner[j]
            else:
                self.owner[j] = prev
                self.assigned[prev] = j

    def push(self, pair_mask: int, check: bool) -> bool:
        before = self._unchecked
        self.pairs.append(pair_mask)
        self.assigned.append(None)
        self._unchecked += 1
        trail: list[tuple[int, int | None]] = []
        if check:
            base = len(self.pairs) - self._unchecked
            for slot in range(base, len(self.pairs)):
                if self.assigned[slot] is None and not self._try(slot, set(), trail):
                    self._revert(trail)
                    self.pairs.pop()
                    self.assigned.pop()
                    self._unchecked = before
                    return False
            self._unchecked = 0
        self._log.append((trail, before))
        return True

    def pop(self) -> None:
        trail, before = self._log.pop()
        self._revert(trail)
        self.pairs.pop()
        self.assigned.pop()
        self._unchecked = before


class _CycleSearch:
    """Backtracking Berge-cycle search; smallest-vertex-first, smallest-edge-first."""

    def __init__(self, H: Hypergraph, cap: int | None = None, prune_stride: int = 1):
        self.H = H
        self.cap = cap
        self.stride = max(1, prune_stride)
        self.nodes = 0
        self.shadow = shadow2(H).adj

    def find(self, length: int) -> BergeCycle | None:
        H = self.H
        if not 2 <= length <= H.n:
            raise LengthOutOfRange(f"cycle length {length} outside 2..{H.n}")
        if length > H.edge_count:
            return None
        for v0 in range(H.n - length + 1):
            matcher = _IncrementalMatcher(H.edge_masks)
            found = self._extend([v0], 1 << v0, v0, length, matcher)
            if found is not None:
                return found
        return None

    def _extend(
        self,
        path: list[int],
        used: int,
        v0: int,
        length: int,
        matcher: _IncrementalMatcher,
    ) -> BergeCycle | None:
        if len(path) == length:
            pm = (1 << path[-1]) | (1 << v0)
            if matcher.push(pm, check=True):
                assigned = tuple(matcher.assigned)
                assert all(e is not None for e in assigned)
                return BergeCycle(tuple(path), assigned)  # type: ignore[arg-type]
            return None
        last = path[-1]
        # candidates must be shadow-adjacent, unused, and above the anchor vertex
        cands = self.shadow[last] & ~used
        cands &= -1 << (v0 + 1)
        closing = len(path) == length - 1 and length >= 3
        for u in bits(cands):
            if closing and u < path[1]:
                continue  # orientation canon: second vertex below last
            self.nodes += 1
            if self.cap is not None and self.nodes > self.cap:
                raise BudgetExceeded(self.nodes)
            pm = (1 << last) | (1 << u)
            if matcher.push(pm, check=len(path) % self.stride == 0):
                path.append(u)
                found = self._extend(path, used | (1 << u), v0, length, matcher)
                if found is not None:
                    return found
                path.pop()
                matcher.pop()
        return None


def find_berge_cycle(
    H: Hypergraph, length: int, cap: int | None = None, prune_stride: int = 1
) -> BergeCycle | None:
    """Exact: a validating witness of the given length, or ``None`` when absent."""
    return _CycleSearch(H, cap, prune_stride).find(length)


@dataclass(frozen=True)
class HamiltonianFrame:
    """A hypergraph relabeled along a hamiltonian Berge cycle.

    ``base`` has the cycle in vertex order ``0, 1, ..., n-1`` with
    ``cycle_edge_ids[i]`` covering ``{i, i+1 mod n}``; every other edge is an
    extra edge.  ``to_input`` maps frame labels back to the labels of whatever
    hypergraph the frame was derived from (identity for directly built
    frames).
    """

    base: Hypergraph
    cycle_edge_ids: tuple[int, ...]
    to_input: tuple[int, ...] | None = None
    extra_edge_ids: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        H = self.base
        n = H.n
        if len(self.cycle_edge_ids) != n:
            raise InvalidFrame(f"{len(self.cycle_edge_ids)} cycle edges for {n} vertices")
        if len(set(self.cycle_edge_ids)) != n:
            raise InvalidFrame("cycle edge ids repeat")
        for i, e in enumerate(self.cycle_edge_ids):
            if not 0 <= e < H.edge_count:
                raise InvalidFrame(f"cycle edge id {e} out of range")
            pair = (1 << i) | (1 << ((i + 1) % n))
            if H.edge_masks[e] & pair != pair:
                raise InvalidFrame(f"cycle edge {e} misses pair {i},{(i + 1) % n}")
        ti = self.to_input
        if ti is None:
            ti = tuple(range(n))
            object.__setattr__(self, "to_input", ti)
        if sorted(ti) != list(range(n)):
            raise InvalidFrame("to_input is not a permutation")
        on_cycle = set(self.cycle_edge_ids)
        extra = tuple(j for j in range(H.edge_count) if j not in on_cycle)
        object.__setattr__(self, "extra_edge_ids", extra)
        per_vertex = tuple(
            tuple(j for j in extra if H.edge_masks[j] >> v & 1) for v in range(n)
        )
        object.__setattr__(self, "_extra_at", per_vertex)
        unions = []
        for v in range(n):
            u = 0
            for j in per_vertex[v]:
                u |= H.edge_masks[j]
            unions.append(u)
        object.__setattr__(self, "_extra_union", tuple(unions))

    @property
    def extra_set(self) -> frozenset[int]:
        return frozenset(self.extra_edge_ids)

    def extra_at(self, v: int) -> tuple[int, ...]:
        """Ids of extra edges containing ``v``, ascending."""
        return self._extra_at[v]  # type: ignore[attr-defined]

    def extra_union(self, v: int) -> int:
        """Bitmask of all vertices covered by extra edges through ``v``."""
        return self._extra_union[v]  # type: ignore[attr-defined]

    def extra_degree(self, v: int) -> int:
        return len(self.extra_at(v))

    def cycle(self) -> BergeCycle:
        return BergeCycle(tuple(range(self.base.n)), self.cycle_edge_ids)

    def map_out(self, cycle: BergeCycle) -> BergeCycle:
        """Translate a witness from frame labels to the parent's labels."""
        ti = self.to_input
        assert ti is not None
        return BergeCycle(tuple(ti[v] for v in cycle.vertices), cycle.edge_ids)

    def relabeled(self, offset: int, reflect: bool = False) -> "HamiltonianFrame":
        """Rotate (optionally reflect) the cycle order; result maps back to ``self``.

        New position ``i`` holds old vertex ``offset + i`` (or ``offset - i``
        when reflecting).  Edge ids are stable across the relabeling.
        """
        H = self.base
        n = H.n
        if reflect:
            to_parent = tuple((offset - i) % n for i in range(n))
        else:
            to_parent = tuple((offset + i) % n for i in range(n))
        new_of = [0] * n
        for i, p in enumerate(to_parent):
            new_of[p] = i
        masks = []
        for m in H.edge_masks:
            mm = 0
            for v in bits(m):
                mm |= 1 << new_of[v]
            masks.append(mm)
        if reflect:
            cyc = tuple(self.cycle_edge_ids[(offset - i - 1) % n] for i in range(n))
        else:
            cyc = tuple(self.cycle_edge_ids[(offset + i) % n] for i in range(n))
        return HamiltonianFrame(Hypergraph(n, H.r, tuple(masks)), cyc, to_parent)

    def with_cycle_edge(self, pos: int, edge_id: int) -> "HamiltonianFrame":
        """Swap the cycle edge at ``pos`` for ``edge_id`` (labels unchanged)."""
        ids = list(self.cycle_edge_ids)
        ids[pos] = edge_id
        return HamiltonianFrame(self.base, tuple(ids), tuple(range(self.base.n)))


def make_frame(H: Hypergraph, cycle_edge_ids: Iterable[int]) -> HamiltonianFrame:
    """Build a frame for a hypergraph already labeled along its hamiltonian cycle."""
    return HamiltonianFrame(H, tuple(cycle_edge_ids))


def find_hamiltonian_frame(H: Hypergraph, cap: int | None = None) -> HamiltonianFrame | None:
    """Search for a hamiltonian Berge cycle and return the canonically relabeled frame.

    Canonical form: input vertex 0 sits at position 0 and of the two
    orientations the lexicographically smaller vertex sequence is used.
    """
    w = find_berge_cycle(H, H.n, cap)
    if w is None:
        return None
    perm = w.vertices  # frame position i holds input vertex perm[i]
    pos = [0] * H.n
    for i, v in enumerate(perm):
        pos[v] = i
    masks = []
    for m in H.edge_masks:
        mm = 0
        for v in bits(m):
            mm |= 1 << pos[v]
        masks.append(mm)
    return HamiltonianFrame(Hypergraph(H.n, H.r, tuple(masks)), w.edge_ids, perm)


@dataclass(frozen=True)
class SpectrumReport:
    """Per-length classification over ``[lo, hi]`` with witnesses for present lengths."""

    n: int
    lo: int
    hi: int
    present: dict[int, BergeCycle]
    absent: frozenset[int]
    unknown: frozenset[int]
    nodes: int

    @property
    def is_pancyclic(self) -> bool:
        """True only when every length in the full range ``[2, n]`` was proven present."""
        return self.lo == 2 and self.hi == self.n and not self.absent and not self.unknown

    def serialize(self) -> str:
        lines = []
        for length in range(self.lo, self.hi + 1):
            if length in self.present:
                lines.append(f"{length} PRESENT {witness_str(self.present[length])}")
            elif length in self.absent:
                lines.append(f"{length} ABSENT")
            else:
                lines.append(f"{length} UNKNOWN")
        return "\n".join(lines) + "\n"


def spectrum(H: Hypergraph, lo: int, hi: int, cap: int | None = None) -> SpectrumReport:
    """Classify every length in ``[lo, hi]`` as present/absent/unknown, exactly."""
    if not 2 <= lo <= hi <= H.n:
        raise LengthOutOfRange(f"range {lo}..{hi} outside 2..{H.n}")
    present: dict[int, BergeCycle] = {}
    absent = []
    unknown = []
    nodes = 0
    for length in range(lo, hi + 1):
        search = _CycleSearch(H, cap)
        try:
            w = search.find(length)
        except BudgetExceeded:
            unknown.append(length)
            nodes += search.nodes
            continue
        nodes += search.nodes
        if w is None:
            absent.append(length)
        else:
            present[length] = w
    return SpectrumReport(H.n, lo, hi, present, frozenset(absent), frozenset(unknown), nodes)


def _is_bipartite(G: SimpleGraph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for u in bits(G.adj[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def graph_cycle_of_length(
    G: SimpleGraph, length: int, cap: int | None = None
) -> tuple[int, ...] | None:
    """Exact simple-cycle search in a graph; ``None`` means no such cycle exists."""
    if not 3 <= length <= G.n:
        raise LengthOutOfRange(f"graph cycle length {length} outside 3..{G.n}")
    if length % 2 and _is_bipartite(G):
        return None
    nodes = 0
    adj = G.adj

    def extend(path: list[int], used: int, v0: int) -> tuple[int, ...] | None:
        nonlocal nodes
        if len(path) == length:
            if adj[path[-1]] >> v0 & 1:
                return tuple(path)
            return None
        cands = adj[path[-1]] & ~used & (-1 << (v0 + 1))
        closing = len(path) == length - 1
        for u in bits(cands):
            if closing and u < path[1]:
                continue
            nodes += 1
            if cap is not None and nodes > cap:
                raise BudgetExceeded(nodes)
            path.append(u)
            got = extend(path, used | (1 << u), v0)
            if got is not None:
                return got
            path.pop()
        return None

    for v0 in range(G.n - length + 1):
        got = extend([v0], 1 << v0, v0)
        if got is not None:
            return got
    return None
