import math

import pytest
from hypothesis import given, strategies as st

from berge import (
    BadUniformity,
    DuplicateEdge,
    NonUniformEdge,
    SameVertex,
    VertexOutOfRange,
    codegree,
    degree,
    degree_threshold,
    from_text,
    incidence_graph,
    make_hypergraph,
    min_degree,
    shadow2,
    to_text,
)
from berge.constructions import construction3, construction4, tight_cycle


def test_make_hypergraph_triangle():
    H = make_hypergraph(3, 2, [{0, 1}, {1, 2}, {0, 2}])
    assert H.edge_count == 3
    assert H.members(0) == (0, 1)


def test_make_hypergraph_tight_cycle_windows():
    H = make_hypergraph(6, 3, [{i, (i + 1) % 6, (i + 2) % 6} for i in range(6)])
    assert [degree(H, v) for v in range(6)] == [3] * 6


def test_make_hypergraph_rejections():
    with pytest.raises(DuplicateEdge):
        make_hypergraph(4, 3, [{0, 1, 2}, {0, 1, 2}])
    with pytest.raises(NonUniformEdge):
        make_hypergraph(4, 3, [{0, 1}])
    with pytest.raises(VertexOutOfRange):
        make_hypergraph(4, 3, [{0, 1, 7}])
    with pytest.raises(BadUniformity):
        make_hypergraph(4, 1, [])
    with pytest.raises(BadUniformity):
        make_hypergraph(4, 5, [])
    with pytest.raises(VertexOutOfRange):
        make_hypergraph(65, 2, [])


def test_degree_examples():
    H = tight_cycle(6, 3)
    assert degree(H, 0) == 3
    single = make_hypergraph(4, 3, [{0, 1, 2}])
    assert degree(single, 3) == 0
    k54 = make_hypergraph(5, 4, [set(range(5)) - {v} for v in range(5)])
    assert all(degree(k54, v) == 4 for v in range(5))
    with pytest.raises(VertexOutOfRange):
        degree(H, 6)


def test_codegree_examples():
    H = tight_cycle(6, 3)
    assert codegree(H, 0, 1) == 2
    disjoint = make_hypergraph(6, 3, [{0, 1, 2}, {3, 4, 5}])
    assert codegree(disjoint, 0, 3) == 0
    k54 = make_hypergraph(5, 4, [set(range(5)) - {v} for v in range(5)])
    assert codegree(k54, 0, 1) == 3
    with pytest.raises(SameVertex):
        codegree(H, 2, 2)


def test_min_degree_examples():
    assert min_degree(tight_cycle(6, 3)) == 3
    assert min_degree(construction3(6, 3)) == 2
    assert min_degree(make_hypergraph(3, 3, [{0, 1, 2}])) == 1


def test_degree_threshold_clauses():
    assert degree_threshold(21, 10) == math.comb(10, 9) + 1 == 11
    assert degree_threshold(20, 10) == 10
    assert degree_threshold(9, 4) == 5
    with pytest.raises(BadUniformity):
        degree_threshold(9, 2)
    with pytest.raises(BadUniformity):
        degree_threshold(9, 9)


def test_degree_threshold_monotone_in_n():
    for r in range(3, 10):
        prev = None
        for n in range(r + 1, 65):
            if r > (n - 1) // 2:
                continue  # binomial clause only
            val = degree_threshold(n, r)
            if prev is not None:
                assert val >= prev
            prev = val


def test_incidence_graph_shapes():
    single = make_hypergraph(3, 3, [{0, 1, 2}])
    inc = incidence_graph(single)
    assert inc.n_right == 1 and inc.right_degree(0) == 3
    assert all(inc.left_degree(v) == 1 for v in range(3))

    tight = tight_cycle(6, 3)
    inc = incidence_graph(tight)
    assert inc.n_left == 6 and inc.n_right == 6
    assert all(inc.right_degree(j) == 3 for j in range(6))

    k43 = make_hypergraph(4, 3, [set(range(4)) - {v} for v in range(4)])
    inc = incidence_graph(k43)
    assert all(inc.right_degree(j) == 3 for j in range(4))
    assert all(inc.left_degree(v) == 3 for v in range(4))


def test_incidence_edge_count_is_m_times_r():
    H = construction4(3, 3)
    inc = incidence_graph(H)
    total = sum(inc.right_degree(j) for j in range(inc.n_right))
    assert total == H.edge_count * H.r


def test_shadow2_examples():
    tri = shadow2(make_hypergraph(3, 3, [{0, 1, 2}]))
    assert tri.edge_count() == 3
    empty = shadow2(make_hypergraph(4, 2, []))
    assert empty.edge_count() == 0
    # necklace of three blocks glued at hubs 0, 3, 6
    sh = shadow2(construction4(3, 3))
    blocks = [{0, 1, 2, 3}, {3, 4, 5, 6}, {6, 7, 8, 0}]
    expected = set()
    for b in blocks:
        for u in b:
            for v in b:
                if u < v:
                    expected.add((u, v))
    assert set(sh.edges()) == expected


def test_shadow_contains_clique_of_every_edge():
    H = construction4(3, 3)
    sh = shadow2(H)
    for j in range(H.edge_count):
        mem = H.members(j)
        for a in mem:
            for b in mem:
                if a != b:
                    assert sh.has_edge(a, b)


@st.composite
def small_hypergraphs(draw):
    n = draw(st.integers(min_value=3, max_value=7))
    r = draw(st.integers(min_value=2, max_value=min(4, n)))
    import itertools

    universe = list(itertools.combinations(range(n), r))
    m = draw(st.integers(min_value=1, max_value=min(8, len(universe))))
    chosen = draw(st.permutations(universe))[:m]
    return make_hypergraph(n, r, [set(c) for c in chosen])


@given(small_hypergraphs())
def test_degree_codegree_identity(H):
    # summing co-degrees over partners counts each incident edge r-1 times
    for v in range(H.n):
        total = sum(codegree(H, v, u) for u in range(H.n) if u != v)
        assert total == degree(H, v) * (H.r - 1)


def test_text_round_trip_preserves_everything():
    H = construction4(3, 3)
    text = to_text(H)
    again = from_text(text)
    assert again == H
    assert to_text(again) == text


def test_text_comments_and_errors():
    H2 = from_text("# comment\n3 1 2\n\n0 2\n")
    assert H2.members(0) == (0, 2)
    from berge import FormatError

    with pytest.raises(FormatError):
        from_text("3 1 2\n2 0\n")  # not increasing
    with pytest.raises(FormatError):
        from_text("3 2 2\n0 1\n")  # wrong edge count
    with pytest.raises(FormatError):
        from_text("")
