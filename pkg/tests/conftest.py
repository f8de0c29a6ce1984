import itertools

import pytest
from hypothesis import settings

settings.register_profile("det", derandomize=True, max_examples=150, deadline=None)
settings.load_profile("det")

from berge import make_hypergraph, make_frame


def cycle_skeleton(n, r, forced=None, avoid=()):
    """Edge sets e_0..e_{n-1} with e_i covering {i, i+1}, all distinct.

    ``forced`` pins specific cycle edges; ``avoid`` lists sets that must not
    appear (so extra edges added later stay distinct).
    """
    forced = forced or {}
    seen = {frozenset(s) for s in avoid}
    out = []
    for i in range(n):
        if i in forced:
            e = frozenset(forced[i])
            assert {i, (i + 1) % n} <= e and len(e) == r and e not in seen
            seen.add(e)
            out.append(set(e))
            continue
        base = {i, (i + 1) % n}
        fill = [v for v in range(n) if v not in base]
        for combo in itertools.combinations(fill, r - 2):
            cand = frozenset(base | set(combo))
            if cand not in seen:
                seen.add(cand)
                out.append(set(cand))
                break
        else:
            raise AssertionError(f"no distinct fill for cycle edge {i}")
    return out


def framed(n, r, extras, forced=None):
    """Hypergraph from a skeleton plus the given extra edges, wrapped in a frame."""
    extras = [set(e) for e in extras]
    ce = cycle_skeleton(n, r, forced=forced, avoid=extras)
    H = make_hypergraph(n, r, ce + extras)
    return make_frame(H, range(n))


@pytest.fixture
def make_framed():
    return framed
