"""Brute-force reference oracles, kept independent of the package's search code.

These enumerate vertex sequences outright and assign edges by plain
recursion, with no matching-based pruning, so they can arbitrate the real
searches.
"""

from itertools import permutations


def berge_cycle_exists(H, length):
    if not 2 <= length <= H.n:
        raise ValueError(f"length {length} outside 2..{H.n}")
    edges = [set(H.members(j)) for j in range(H.edge_count)]
    if length > len(edges):
        return False

    def assign(seq, idx, used):
        if idx == length:
            return True
        a, b = seq[idx], seq[(idx + 1) % length]
        for j, e in enumerate(edges):
            if j not in used and a in e and b in e:
                used.add(j)
                if assign(seq, idx + 1, used):
                    return True
                used.discard(j)
        return False

    for seq in permutations(range(H.n), length):
        if seq[0] != min(seq):
            continue
        if length >= 3 and seq[1] > seq[-1]:
            continue
        if assign(seq, 0, set()):
            return True
    return False


def graph_cycle_exists(adj_sets, length):
    """adj_sets: list of neighbour sets per vertex."""
    n = len(adj_sets)
    if not 3 <= length <= n:
        raise ValueError(f"length {length} outside 3..{n}")

    def extend(path, used):
        if len(path) == length:
            return path[0] in adj_sets[path[-1]]
        for u in sorted(adj_sets[path[-1]]):
            if u in used or u < path[0]:
                continue
            if len(path) == length - 1 and u < path[1]:
                continue
            path.append(u)
            used.add(u)
            if extend(path, used):
                return True
            path.pop()
            used.discard(u)
        return False

    for v0 in range(n - length + 1):
        if extend([v0], {v0}):
            return True
    return False
