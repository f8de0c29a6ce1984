import math

import pytest

from berge import (
    codegree,
    degree,
    degree_threshold,
    find_berge_cycle,
    find_hamiltonian_frame,
    min_degree,
    spectrum,
)
from berge.constructions import (
    BadParameters,
    construction1,
    construction2,
    construction3,
    construction4,
    tight_cycle,
)


def test_construction1_odd_shares_one_vertex():
    H = construction1(9, 4)
    assert H.edge_count == 2 * math.comb(5, 4)
    assert min_degree(H) == 4 == degree_threshold(9, 4) - 1
    # the shared vertex sits in both cliques
    assert degree(H, 4) == 8


def test_construction1_even_disjoint_and_bridge():
    H = construction1(10, 4, bridge=False)
    assert H.edge_count == 2 * math.comb(5, 4)
    assert all(codegree(H, u, v) == 0 for u in range(5) for v in range(5, 10))
    Hb = construction1(10, 4, bridge=True)
    assert Hb.edge_count == H.edge_count + 1
    assert Hb.members(H.edge_count) == (0, 1, 2, 5)
    with pytest.raises(BadParameters):
        construction1(9, 4, bridge=True)
    with pytest.raises(BadParameters):
        construction1(9, 5)


def test_construction2_degrees_on_big_side():
    H = construction2(9, 4)
    assert H.edge_count == math.comb(4, 4) + math.comb(4, 3) * 5
    for v in range(4, 9):
        assert degree(H, v) == math.comb(4, 3) == degree_threshold(9, 4) - 1
    He = construction2(10, 4, extra=True)
    extra_edge = He.members(He.edge_count - 1)
    assert sum(1 for v in extra_edge if v >= 4) == 2
    with pytest.raises(BadParameters):
        construction2(9, 4, extra=True)


def test_construction3_structure():
    H = construction3(6, 3)
    assert H.edge_count == 5
    assert min_degree(H) == 2 == degree_threshold(6, 3) - 1
    H8 = construction3(8, 4)
    assert H8.edge_count == 7 and H8.r == 4
    with pytest.raises(BadParameters):
        construction3(9, 4)  # needs r >= n/2


def test_constructions_are_not_hamiltonian():
    for H in (construction1(9, 4), construction2(9, 4), construction3(6, 3)):
        assert find_hamiltonian_frame(H) is None
    for H in (construction1(10, 4, bridge=True), construction2(10, 4, extra=True)):
        assert find_hamiltonian_frame(H) is None


def test_construction4_shape():
    H = construction4(3, 3)
    assert H.n == 9 and H.edge_count == 12
    # hubs at 0, 3, 6 belong to two blocks each
    assert degree(H, 0) == 8 and degree(H, 1) == 4
    with pytest.raises(BadParameters):
        construction4(2, 3)
    with pytest.raises(BadParameters):
        construction4(3, 2)


def test_construction4_small_is_pancyclic():
    rep = spectrum(construction4(3, 3), 2, 9)
    assert rep.is_pancyclic


def test_construction4_band_boundaries():
    # k = 6, r = 3: lengths up to r+1 and from k upward must exist
    H = construction4(6, 3)
    for length in (2, 3, 4, 6, 18):
        assert find_berge_cycle(H, length) is not None
    assert find_berge_cycle(H, 5) is None


def test_tight_cycle_properties():
    H = tight_cycle(6, 3)
    assert H.edge_count == 6
    assert all(degree(H, v) == 3 for v in range(6))
    five = tight_cycle(5, 2)
    assert five.edge_count == 5 and five.r == 2
    with pytest.raises(BadParameters):
        tight_cycle(4, 4)
