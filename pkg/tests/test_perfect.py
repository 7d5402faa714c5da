import pytest
from hypothesis import given, settings

from idealgraph.graph import BitGraph, build_graph
from idealgraph.perfect import (
    c5_from_label_pattern,
    find_hole,
    find_odd_antihole,
    is_induced_cycle,
    is_perfect_closed_form,
    perfectness_report,
)
from oracles import brute_force_hole, complement_adj
from test_search import small_graphs


def cycle(k):
    return [(1 << ((i + 1) % k)) | (1 << ((i - 1) % k)) for i in range(k)]


@pytest.mark.parametrize("k", [5, 7, 9])
def test_plain_odd_cycles(k):
    g = BitGraph(tuple(cycle(k)))
    assert sorted(find_hole(g, k)) == list(range(k))
    assert find_hole(g, k - 2) is None


@pytest.mark.parametrize("k", [7, 9])
def test_plain_odd_antiholes(k):
    g = BitGraph(tuple(complement_adj(cycle(k))))
    assert find_hole(g, k) is None
    assert sorted(find_odd_antihole(g, k)) == list(range(k))


@settings(max_examples=300, deadline=None)
@given(small_graphs(10))
def test_hole_search_matches_enumeration(adj):
    g = BitGraph(tuple(adj))
    got = find_hole(g, 9)
    want = next((k for k in (5, 7, 9) if brute_force_hole(adj, k)), None)
    if want is None:
        assert got is None
    else:
        assert len(got) == want
        assert is_induced_cycle(adj, got)


@settings(max_examples=150, deadline=None)
@given(small_graphs(10))
def test_antihole_search_matches_enumeration(adj):
    g = BitGraph(tuple(adj))
    comp = complement_adj(adj)
    got = find_odd_antihole(g, 9)
    want = next((k for k in (5, 7, 9) if brute_force_hole(comp, k)), None)
    if want is None:
        assert got is None
    else:
        assert len(got) == want and is_induced_cycle(comp, got)


def test_boundary_2310():
    g = build_graph(2310, 2310)
    assert not is_perfect_closed_form(g.pair)
    hole = find_hole(g, 5)
    assert len(hole) == 5 and is_induced_cycle(g.adj, hole)
    built = c5_from_label_pattern(g)
    assert built is not None and len(built) == 5 and is_induced_cycle(g.adj, built)
    rep = perfectness_report(g, 5)
    assert rep.hole_found and rep.has_c5 and rep.consistent
    anti = find_odd_antihole(g, 5)
    assert anti is not None and is_induced_cycle(g.complement().adj, anti)


@pytest.mark.parametrize("m, n", [(900, 900), (2310, 210), (12, 12), (12, 2), (210, 210)])
def test_no_short_holes_when_s_prime_small(m, n):
    g = build_graph(m, n)
    assert is_perfect_closed_form(g.pair)
    rep = perfectness_report(g, 9)
    assert rep.hole is None and rep.antihole is None
    assert rep.consistent
    assert c5_from_label_pattern(g) is None


def test_report_rejects_even_limit():
    with pytest.raises(ValueError):
        perfectness_report(build_graph(12, 12), 6)
    with pytest.raises(ValueError):
        perfectness_report(build_graph(12, 12), 3)
