"""Bipartite maximum matching via augmenting paths (Kuhn's algorithm)."""

from __future__ import annotations

from typing import Sequence


def maximum_matching(adjacency: Sequence[Sequence[int]]) -> list[int | None]:
    """Match each left index to one of its right candidates, injectively.

    ``adjacency[i]`` lists the right ids usable by left ``i``; candidates are
    tried in the given order, so passing ascending ids keeps the result
    deterministic.  Returns the assigned right id per left index (``None``
    where unmatched); the assignment is a maximum matching.
    """
    owner: dict[int, int] = {}
    assigned: list[int | None] = [None] * len(adjacency)

    def try_assign(i: int, banned: set[int]) -> bool:
        for j in adjacency[i]:
            if j in banned:
                continue
            banned.add(j)
            prev = owner.get(j)
            if prev is None or try_assign(prev, banned):
                owner[j] = i
                assigned[i] = j
                return True
        return False

    for i in range(len(adjacency)):
        try_assign(i, set())
    return assigned
