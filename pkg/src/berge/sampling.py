"""Seeded random hypergraph and frame samplers for sweeps and property suites.

Every sampler takes an explicit :class:`random.Random` so that a fixed seed
reproduces the exact instance sequence.
"""

from __future__ import annotations

import math
import random

from .core import BergeError, Hypergraph, mask_of
from .oracle import HamiltonianFrame, make_frame


class SamplerError(BergeError):
    pass


def _random_edge(n: int, r: int, rng: random.Random, include: tuple[int, ...] = ()) -> int:
    pool = [v for v in range(n) if v not in include]
    picked = rng.sample(pool, r - len(include))
    return mask_of(include) | mask_of(picked)


def _fresh_edge(
    n: int, r: int, rng: random.Random, seen: set[int], include: tuple[int, ...] = ()
) -> int:
    for _ in range(10_000):
        m = _random_edge(n, r, rng, include)
        if m not in seen:
            seen.add(m)
            return m
    raise SamplerError(f"could not find a fresh {r}-set through {include} in n={n}")


def random_frame(
    n: int,
    r: int,
    rng: random.Random,
    extra: int = 0,
    anchor_min: int = 0,
    min_everywhere: int = 0,
) -> HamiltonianFrame:
    """A hypergraph built around an explicit hamiltonian Berge cycle.

    The first n edges form the cycle skeleton (edge i covers {i, i+1}); extra
    edges are then added until vertex 0 lies in at least ``anchor_min`` of
    them, every vertex lies in at least ``min_everywhere`` of them, and
    ``extra`` additional random edges are present.
    """
    if not 2 <= r < n:
        raise SamplerError(f"sampler needs 2 <= r < n, got n={n}, r={r}")
    seen: set[int] = set()
    edges = [_fresh_edge(n, r, rng, seen, (i, (i + 1) % n)) for i in range(n)]
    extra_deg = [0] * n
    def add(include: tuple[int, ...]) -> None:
        m = _fresh_edge(n, r, rng, seen, include)
        edges.append(m)
        for v in range(n):
            if m >> v & 1:
                extra_deg[v] += 1
    while extra_deg[0] < anchor_min:
        add((0,))
    if min_everywhere:
        while True:
            v = min(range(n), key=lambda u: (extra_deg[u], u))
            if extra_deg[v] >= min_everywhere:
                break
            add((v,))
    for _ in range(extra):
        add(())
    H = Hypergraph(n, r, tuple(edges))
    return make_frame(H, range(n))


def random_hypergraph(n: int, r: int, m: int, rng: random.Random) -> Hypergraph:
    """m distinct uniformly random r-sets."""
    if m > math.comb(n, r):
        raise SamplerError(f"cannot place {m} distinct {r}-sets on {n} vertices")
    seen: set[int] = set()
    edges = [_fresh_edge(n, r, rng, seen) for _ in range(m)]
    return Hypergraph(n, r, tuple(edges))


def random_hypergraph_with_min_degree(
    n: int, r: int, target: int, rng: random.Random
) -> Hypergraph:
    """Hamiltonian skeleton plus random distinct r-sets until the degree target holds."""
    if target > math.comb(n - 1, r - 1):
        raise SamplerError(f"degree target {target} unreachable for n={n}, r={r}")
    frame = random_frame(n, r, rng)
    edges = list(frame.base.edge_masks)
    seen = set(edges)
    deg = [0] * n
    for m in edges:
        for v in range(n):
            if m >> v & 1:
                deg[v] += 1
    while True:
        v = min(range(n), key=lambda u: (deg[u], u))
        if deg[v] >= target:
            break
        m = _fresh_edge(n, r, rng, seen, (v,))
        edges.append(m)
        for u in range(n):
            if m >> u & 1:
                deg[u] += 1
    return Hypergraph(n, r, tuple(edges))
