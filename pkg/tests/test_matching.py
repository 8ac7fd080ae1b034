import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from bergecover import generators as G
from bergecover.errors import EvenCircuit, NoMatching, OddComponent, VertexNotOnCircuit
from bergecover.graphcore import Circuit, Multigraph, circuits_of
from bergecover.matching import (enumerate_pms, is_matching, is_perfect_matching,
                                 maximal_alternating_paths, pm_of_circuit_minus_vertex,
                                 pm_through_edge, split_even_circuits, three_edge_coloring)

from conftest import bridged_cubic


def brute_pms(g):
    # every subset of size n/2, filtered
    return sorted(frozenset(c) for c in itertools.combinations(range(g.m), g.n // 2)
                  if is_perfect_matching(g, c))


def test_k4_pairings():
    g = G.k4()
    pairs = {frozenset(e for e, ends in enumerate(g.ends) if ends in p)
             for p in ({(0, 1), (2, 3)}, {(0, 2), (1, 3)}, {(0, 3), (1, 2)})}
    for p in pairs:
        assert is_perfect_matching(g, p)
    assert set(enumerate_pms(g)) == pairs


def test_theta_single_edges():
    g = G.theta()
    assert is_perfect_matching(g, {0})
    assert enumerate_pms(g) == [frozenset({e}) for e in range(3)]


def test_petersen_four_edges_never_perfect(petersen):
    for c in itertools.combinations(range(15), 4):
        assert not is_perfect_matching(petersen, c)


def test_petersen_has_six_pms(petersen):
    pms = enumerate_pms(petersen)
    assert len(pms) == 6
    assert all(is_perfect_matching(petersen, m) for m in pms)
    assert sorted(pms, key=sorted) == sorted(brute_pms(petersen), key=sorted)


@pytest.mark.parametrize("name,params", [("prism", ()), ("gp", (7, 2)), ("moebius_kantor", ())])
def test_enumeration_matches_brute_force(name, params):
    g = G.gen(name, *params)
    assert sorted(enumerate_pms(g), key=sorted) == sorted(brute_pms(g), key=sorted)


def test_is_matching_rejects_shared_vertex():
    g = G.k4()
    assert is_matching(g, {0})
    assert not is_matching(g, {0, 1})


def test_pm_of_induced_subgraph(petersen):
    # outer 5-circuit minus vertex 0: edges (1,2), (3,4)
    assert is_perfect_matching(petersen, {1, 3}, vertices={1, 2, 3, 4})
    assert not is_perfect_matching(petersen, {1, 3}, vertices={0, 1, 2, 3, 4})


def test_pm_through_edge_theta():
    assert pm_through_edge(G.theta(), 1) == {1}


def test_every_petersen_edge_in_some_pm(petersen):
    pms = enumerate_pms(petersen)
    for e in range(15):
        m = pm_through_edge(petersen, e)
        assert e in m and m in pms


def test_pm_through_edge_next_to_bridge():
    # each side of the bridge has 5 vertices, so every PM uses the bridge
    g = bridged_cubic()
    pms = enumerate_pms(g)
    assert pms and all(14 in m for m in pms)
    for e in (0, 1):
        assert not any(e in m for m in pms)
        with pytest.raises(NoMatching):
            pm_through_edge(g, e)


def test_three_edge_coloring_known():
    assert three_edge_coloring(G.k4()) is not None
    assert three_edge_coloring(G.petersen()) is None
    col = three_edge_coloring(G.gp(7, 2))
    assert col is not None
    g = G.gp(7, 2)
    assert all(is_perfect_matching(g, m) for m in col)
    assert frozenset().union(*col) == g.edge_ids()


def test_split_four_cycle():
    g = G.k4()
    four = [e for e, ends in enumerate(g.ends) if ends in {(0, 1), (1, 2), (2, 3), (0, 3)}]
    a, b = split_even_circuits(g, four)
    assert {frozenset(g.ends[e] for e in a), frozenset(g.ends[e] for e in b)} == {
        frozenset({(0, 1), (2, 3)}), frozenset({(1, 2), (0, 3)})}


def test_split_two_squares_keeps_canonical_first_edges():
    g = G.gp(4, 1)
    outer, inner = range(4), range(8, 12)
    a, b = split_even_circuits(g, list(outer) + list(inner))
    assert {0, 8} <= a
    assert is_matching(g, a) and is_matching(g, b)
    assert a | b == set(outer) | set(inner) and not a & b


def test_split_odd_rejected(petersen):
    with pytest.raises(OddComponent):
        split_even_circuits(petersen, range(5))


def test_split_sym_diff_petersen(petersen):
    pms = enumerate_pms(petersen)
    for x, y in itertools.combinations(pms, 2):
        a, b = split_even_circuits(petersen, x ^ y)
        assert is_matching(petersen, a) and is_matching(petersen, b)
        assert a | b == x ^ y


def test_alternating_single_edge():
    (p,) = maximal_alternating_paths(G.k4(), {0}, set(), set())
    assert len(p) == 1


def test_alternating_circuit_minus_edge():
    g = G.gp(5, 1)          # prism over a pentagon, hamiltonian
    cols = three_edge_coloring(g)
    a, b = next((x, y) for x, y in itertools.permutations(cols, 2)
                if len(circuits_of(g, x | y)) == 1)
    drop = min(a)
    (p,) = maximal_alternating_paths(g, a, b, {drop})
    assert len(p) == g.n - 1


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_alternating_paths_partition_and_alternate(seed):
    g = G.petersen()
    r = random.Random(seed)
    pms = enumerate_pms(g)
    x, y = r.sample(pms, 2)
    a, b = x - y, y - x
    # one edge per circuit of a ^ b must go, otherwise there is no path
    forbidden = frozenset(min(c.edges) for c in circuits_of(g, a | b))
    forbidden |= frozenset(r.sample(sorted(a | b), r.randint(0, 3)))
    paths = maximal_alternating_paths(g, a, b, forbidden)
    assert frozenset().union(*(p.edge_set for p in paths)) == (a | b) - forbidden
    for p in paths:
        sides = [e in a for e in p.edges]
        assert all(s != t for s, t in zip(sides, sides[1:]))


def test_circuit_minus_vertex_small():
    tri = Circuit((0, 1, 2), (10, 11, 12))
    assert pm_of_circuit_minus_vertex(tri, 0) == {11}
    five = Circuit((0, 1, 2, 3, 4), (0, 1, 2, 3, 4))
    assert pm_of_circuit_minus_vertex(five, 0) == {1, 3}


def test_circuit_minus_vertex_errors():
    with pytest.raises(EvenCircuit):
        pm_of_circuit_minus_vertex(Circuit((0, 1, 2, 3), (0, 1, 2, 3)), 0)
    with pytest.raises(VertexNotOnCircuit):
        pm_of_circuit_minus_vertex(Circuit((0, 1, 2), (0, 1, 2)), 7)


def test_nine_circuit_minus_each_vertex():
    g = Multigraph.from_edges(9, [(i, (i + 1) % 9) for i in range(9)])
    c = circuits_of(g, g.edge_ids())[0]
    for u in range(9):
        m = pm_of_circuit_minus_vertex(c, u)
        assert is_perfect_matching(g, m, set(range(9)) - {u})
