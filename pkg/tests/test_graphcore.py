import itertools
import random

import pytest
from hypothesis import given, strategies as st

from bergecover import generators as G
from bergecover.errors import DegreeError, Disconnected, NotTwoRegular, ParseError
from bergecover.graphcore import (Circuit, Multigraph, Path, assert_cubic, bridges, check_circuit,
                                  circuit_through, circuits_of, emit_edgelist, is_connected,
                                  is_cubic, parse_edgelist, parse_graph6, paths_of, segments,
                                  sym_diff)
from bergecover.matching import enumerate_pms

from conftest import bridged_cubic


def test_theta_and_k4_are_cubic():
    assert_cubic(G.theta())
    assert_cubic(G.k4())


def test_single_edge_not_cubic():
    with pytest.raises(DegreeError) as err:
        assert_cubic(Multigraph.from_edges(2, [(0, 1)]))
    assert (err.value.vertex, err.value.degree) == (0, 1)


def test_loops_rejected():
    with pytest.raises(ValueError):
        Multigraph.from_edges(1, [(0, 0)])


def test_ends_are_normalised():
    g = Multigraph.from_edges(3, [(2, 0), (1, 2)])
    assert g.ends == ((0, 2), (1, 2))


def test_theta_two_circuit():
    (c,) = circuits_of(G.theta(), {0, 1})
    assert c.vertex_set == {0, 1} and len(c) == 2
    assert c == Circuit((0, 1), (0, 1))


def test_k4_four_cycle():
    g = G.k4()
    four = [e for e, (a, b) in enumerate(g.ends) if (a, b) in {(0, 1), (1, 2), (2, 3), (0, 3)}]
    (c,) = circuits_of(g, four)
    assert len(c) == 4
    assert c.vertices == (0, 1, 2, 3)


def _walk_components(g, s):
    """Plain component walk used as a reference for circuits_of."""
    left = set(s)
    out = []
    while left:
        e = min(left)
        comp, todo = set(), [e]
        while todo:
            x = todo.pop()
            if x in comp:
                continue
            comp.add(x)
            ends = set(g.ends[x])
            todo.extend(y for y in left if y not in comp and set(g.ends[y]) & ends)
        left -= comp
        out.append(frozenset(comp))
    return sorted(out, key=sorted)


def test_petersen_two_pm_circuits_match_walk(petersen):
    # any two Petersen PMs share one edge, so the 2-regular part is a ^ b
    pms = enumerate_pms(petersen)
    for a, b in itertools.combinations(pms, 2):
        assert len(a & b) == 1
        got = sorted((c.edge_set for c in circuits_of(petersen, a ^ b)), key=sorted)
        assert got == _walk_components(petersen, a ^ b)


def test_circuits_of_rejects_degree_three(petersen):
    with pytest.raises(NotTwoRegular):
        circuits_of(petersen, petersen.edge_ids())


def test_circuit_canonical_form():
    c = Circuit((2, 0, 1), (4, 3, 5))
    k = c.canonical()
    assert k.vertices[0] == 0
    assert k.edge_set == c.edge_set and k.vertex_set == c.vertex_set
    assert k.edges[0] < k.edges[-1]


@given(st.integers(3, 12), st.integers(0, 100), st.booleans(), st.randoms(use_true_random=False))
def test_canonical_circuit_is_rotation_invariant(k, shift, flip, r):
    vs = list(range(k))
    r.shuffle(vs)
    es = list(range(10, 10 + k))
    r.shuffle(es)
    c = Circuit(tuple(vs), tuple(es))
    s = shift % k
    rot = Circuit(tuple(vs[s:] + vs[:s]), tuple(es[s:] + es[:s]))
    if flip:
        rot = Circuit(tuple(reversed(rot.vertices)), tuple(rot.edges[-2::-1] + rot.edges[-1:]))
    assert rot.canonical() == c.canonical()


def test_path_canonical_orientation():
    p = Path((5, 3, 1), (7, 2))
    assert p.canonical().vertices == (1, 3, 5)
    assert p.canonical().edges == (2, 7)
    assert p.interior == {3}


def test_sym_diff_basics():
    x = frozenset({1, 4, 9})
    assert sym_diff(set(), x) == x
    assert sym_diff(x, x) == frozenset()


@given(st.sets(st.integers(0, 30), max_size=10), st.sets(st.integers(0, 30), max_size=10),
       st.sets(st.integers(0, 30), max_size=10))
def test_sym_diff_algebra(a, b, c):
    ref = frozenset(e for e in a | b if (e in a) != (e in b))
    assert sym_diff(a, b) == ref
    assert sym_diff(a, b) == sym_diff(b, a)
    assert sym_diff(sym_diff(a, b), c) == sym_diff(a, sym_diff(b, c))


def test_petersen_has_no_bridge(petersen):
    assert bridges(petersen) == frozenset()


def test_k4_minus_edge_gadgets():
    def gadget(o):
        return [(o, o + 2), (o, o + 3), (o + 1, o + 2), (o + 1, o + 3), (o + 2, o + 3)]
    g = Multigraph.from_edges(8, gadget(0) + gadget(4) + [(0, 4)])
    assert bridges(g) == {10}


def test_bridges_disconnected():
    with pytest.raises(Disconnected):
        bridges(Multigraph.from_edges(4, [(0, 1), (2, 3)]))


def test_parallel_edges_are_never_bridges():
    assert bridges(G.theta()) == frozenset()


@pytest.mark.parametrize("seed", range(12))
def test_bridges_agree_with_deletion(seed):
    g = G.random_cubic(10, random.Random(seed), bridgeless=False)
    if not is_connected(g):
        return
    slow = frozenset(e for e in g.edge_ids() if not is_connected(g, removed={e}))
    assert bridges(g) == slow


def test_bridged_cubic_fixture():
    g = bridged_cubic()
    assert is_cubic(g)
    assert bridges(g) == {14}


def test_edgelist_theta():
    g = parse_edgelist("2 3\n0 1\n0 1\n0 1\n")
    assert g == G.theta()
    assert emit_edgelist(g) == "2 3\n0 1\n0 1\n0 1\n"


def test_edgelist_comments_and_blank_lines():
    g = parse_edgelist("# theta\n2 3\n\n0 1\n# parallel\n0 1\n0 1\n")
    assert g.m == 3


@pytest.mark.parametrize("text", [
    "", "2\n0 1\n", "2 2\n0 1\n", "2 1\n1 0\n", "2 1\n0 2\n", "2 1\n0 x\n", "2 1\n0 0\n",
])
def test_edgelist_rejects(text):
    with pytest.raises(ParseError):
        parse_edgelist(text)


def test_graph6_k4():
    g = parse_graph6("C~")
    assert (g.n, g.m) == (4, 6)


def test_graph6_petersen():
    g = parse_graph6(">>graph6<<IheA@GUAo\n")
    assert (g.n, g.m) == (10, 15)
    assert all(g.degree(v) == 3 for v in range(10))


@pytest.mark.parametrize("text", ["", "C", "~~", "C~~~", "C\x10"])
def test_graph6_malformed(text):
    with pytest.raises(ParseError):
        parse_graph6(text)


def test_circuit_through_and_segments(petersen):
    outer = frozenset(range(5))
    c = circuit_through(petersen, outer | frozenset(range(10, 15)), vertex=0)
    assert c.edge_set == outer
    segs = segments(c, {0, 2})
    assert [len(p) for p in segs] == [1, 2]
    assert frozenset().union(*(p.edge_set for p in segs)) == {1, 3, 4}


def test_paths_of_and_circuit_check(petersen):
    ps = paths_of(petersen, {0, 1, 3})
    assert [p.vertices for p in ps] == [(0, 1, 2), (3, 4)]
    assert check_circuit(petersen, Circuit((0, 1, 2, 3, 4), (0, 1, 2, 3, 4)))
    assert not check_circuit(petersen, Circuit((0, 1, 2), (0, 1, 2)))
    with pytest.raises(ValueError):
        paths_of(petersen, range(5))
