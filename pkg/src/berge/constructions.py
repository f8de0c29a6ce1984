"""Generators for the extremal and spectrum-gap constructions."""

from __future__ import annotations

from itertools import combinations

from .core import BergeError, Hypergraph, make_hypergraph


class BadParameters(BergeError):
    pass


def construction1(n: int, r: int, bridge: bool = False) -> Hypergraph:
    """Two r-uniform cliques sharing one vertex (n odd) or disjoint (n even).

    For even n an optional bridging edge (the lexicographically smallest
    r-set meeting both sides) may be added.
    """
    if not 2 <= r <= (n - 1) // 2:
        raise BadParameters(f"construction 1 needs 2 <= r <= (n-1)//2, got n={n}, r={r}")
    if bridge and n % 2:
        raise BadParameters("bridging edge only allowed for even n")
    if n % 2:
        side1 = list(range((n + 1) // 2))
        side2 = list(range((n - 1) // 2, n))
    else:
        side1 = list(range(n // 2))
        side2 = list(range(n // 2, n))
    edges = [set(c) for c in combinations(side1, r)]
    edges += [set(c) for c in combinations(side2, r)]
    if bridge:
        edges.append(set(range(r - 1)) | {n // 2})
    return make_hypergraph(n, r, edges)


def construction2(n: int, r: int, extra: bool = False) -> Hypergraph:
    """All r-sets with at most one vertex outside the small side.

    The small side has ``(n-1)//2`` vertices; for even n one extra edge with
    two vertices of the big side (lexicographically smallest) may be added.
    """
    if not 2 <= r <= (n - 1) // 2:
        raise BadParameters(f"construction 2 needs 2 <= r <= (n-1)//2, got n={n}, r={r}")
    if extra and n % 2:
        raise BadParameters("extra edge only allowed for even n")
    m = (n - 1) // 2
    small = list(range(m))
    big = list(range(m, n))
    edges = [set(c) for c in combinations(small, r)]
    for c in combinations(small, r - 1):
        for v in big:
            edges.append(set(c) | {v})
    if extra:
        edges.append(set(range(r - 2)) | {m, m + 1})
    return make_hypergraph(n, r, edges)


def construction3(n: int, r: int) -> Hypergraph:
    """The tight cycle with its first edge removed: n-1 edges, so never hamiltonian."""
    if not (2 * r >= n and 2 <= r < n):
        raise BadParameters(f"construction 3 needs n/2 <= r < n, got n={n}, r={r}")
    base = tight_cycle(n, r)
    return Hypergraph(n, r, base.edge_masks[1:])


def construction4(k: int, r: int) -> Hypergraph:
    """Necklace of k cliques on r+1 vertices, consecutive cliques sharing a hub.

    Hubs sit at positions 0, r, 2r, ...; the clique between hubs i*r and
    (i+1)*r occupies the r+1 consecutive vertices starting at i*r.
    """
    if k < 3 or r < 3:
        raise BadParameters(f"construction 4 needs k >= 3 and r >= 3, got k={k}, r={r}")
    n = k * r
    edges = []
    for i in range(k):
        block = [(i * r + t) % n for t in range(r + 1)]
        edges.extend(set(c) for c in combinations(block, r))
    return make_hypergraph(n, r, edges)


def tight_cycle(n: int, r: int) -> Hypergraph:
    """Edges are the n windows of r consecutive vertices; r-regular."""
    if not 2 <= r < n:
        raise BadParameters(f"tight cycle needs 2 <= r < n, got n={n}, r={r}")
    edges = [{(i + t) % n for t in range(r)} for i in range(n)]
    return make_hypergraph(n, r, edges)
