"""Three perfect matchings covering the circuit edges outside a fixed matching.

Setting: a bridgeless cubic graph with a 2-factor of two odd circuits
``c1, c2``, an edge ``u1u2`` between them and the perfect matching ``m``
that holds ``u1u2`` and otherwise only circuit edges. ``C3`` and ``C4`` are
the circuits of ``G - m`` through ``u1`` and ``u2``. A circuit ``c`` through
``u1`` must satisfy

1. ``(E(c1) - m) - E(c)`` perfectly matches ``c1 - V(c)``;
2. ``{} != E(c) & E(c2) <= E(c2) - m`` and ``E(c) & E(c2) & E(C4) = {}``;
3. every segment of ``c`` between its ``c2`` edges that avoids ``u1`` is
   perfectly matched, off ``c2``, by its edges in ``E(c1) - m``.
"""

from __future__ import annotations

from ..errors import PreconditionViolated
from ..graphcore import (Circuit, Multigraph, bridges, check_circuit, circuit_through,
                         is_cubic, paths_of, segments)
from ..matching import first_pm, is_perfect_matching, pm_of_circuit_minus_vertex
from ..contraction import contract, lift_by_parity, lift_circuit
from .common import (bridge_edge, check_two_factor, odd_two_factor_matching,
                     split_or_fail, walk_until)
from .two_pm import lemma_two_pm
from .types import Side, assumption


def three_pm_problem(g: Multigraph, c1: Circuit, c2: Circuit, u1u2: int, m, c: Circuit):
    """First violated hypothesis as ``(clause, detail)``, or None."""
    m = frozenset(m)
    u1, u2 = bridge_edge(g, c1, c2, u1u2)
    if m != odd_two_factor_matching(c1, c2, u1u2, u1, u2):
        return "M", "m is not the matching through u1u2 inside the circuits"
    rest = g.edge_ids() - m
    c3 = circuit_through(g, rest, vertex=u1)
    c4 = circuit_through(g, rest, vertex=u2)
    if c3 == c4:
        return "C3!=C4", "u1 and u2 lie on one circuit of G - M"
    if not check_circuit(g, c) or u1 not in c.vertex_set:
        return "C", "c is not a circuit through u1"
    ce = c.edge_set
    e1, e2 = c1.edge_set, c2.edge_set
    off1 = c1.vertex_set - c.vertex_set
    if not is_perfect_matching(g, (e1 - m) - ce, off1):
        return 1, "(E(C1) - M) - E(C) does not perfectly match C1 - V(C)"
    on2 = ce & e2
    if not on2:
        return 2, "E(C) & E(C2) is empty"
    if on2 & m:
        return 2, "E(C) & E(C2) meets M"
    if on2 & c4.edge_set:
        return 2, "E(C) & E(C2) meets C4"
    for q in segments(c, on2):
        if u1 in q.vertex_set:
            continue
        if not is_perfect_matching(g, q.edge_set & (e1 - m), q.vertex_set - c2.vertex_set):
            return 3, f"segment {q.vertices} is not matched by E(C1) - M"
    return None


def lemma_three_pm(g: Multigraph, c1: Circuit, c2: Circuit, u1u2: int, m, c: Circuit) -> list[frozenset]:
    m = frozenset(m)
    if not is_cubic(g):
        raise PreconditionViolated("cubic", "graph is not cubic")
    check_two_factor(g, c1, c2)
    if len(c1) % 2 == 0 or len(c2) % 2 == 0:
        raise PreconditionViolated("2-factor", "both circuits must be odd")
    if bridges(g):
        raise PreconditionViolated("bridgeless", "graph has a bridge")
    problem = three_pm_problem(g, c1, c2, u1u2, m, c)
    if problem:
        raise PreconditionViolated(*problem)

    u1, u2 = bridge_edge(g, c1, c2, u1u2)
    e1, e2 = c1.edge_set, c2.edge_set
    mm1 = (e1 | e2) - m
    mm2 = m
    c4 = circuit_through(g, g.edge_ids() - m, vertex=u2)

    sd = c.edge_set ^ e2
    c5 = circuit_through(g, sd, vertex=u1)
    assumption(is_perfect_matching(g, (e1 & mm1) - c5.edge_set, c1.vertex_set - c5.vertex_set),
               g, "(E(C1) & M1) - E(C5) does not perfectly match C1 - V(C5)")

    if u2 in c5.vertex_set:
        out = _u2_on_c5(g, c1, c2, c, c4, u1u2, mm1, sd)
    else:
        out = _u2_off_c5(g, c1, c2, c5, u1, u2, mm1, mm2)
    for x in out:
        assumption(is_perfect_matching(g, x), g, "lemma output is not a perfect matching")
    assumption(mm1 <= frozenset().union(*out), g, "lemma output misses circuit edges")
    return out


def _u2_on_c5(g, c1, c2, c, c4, u1u2, mm1, sd):
    n1, n2 = split_or_fail(g, sd, "E(C) ^ E(C2)")
    keep = (c1.edge_set & mm1) - c.edge_set
    m4, m5 = n1 | keep, n2 | keep
    # a perfect matching of G[{u1u2} | E(C1) | E(C4)] exists by the argument
    sub_edges = {u1u2} | c1.edge_set | c4.edge_set
    n3 = first_pm(g, allowed=sub_edges, vertices=g.vertices_of(sub_edges))
    assumption(n3 is not None, g, "G[{u1u2} | E(C1) | E(C4)] has no perfect matching")
    m6 = n3 | ((c2.edge_set & mm1) - c4.edge_set)
    assumption(c.edge_set & c2.edge_set <= m6, g, "third matching misses E(C) & E(C2)")
    return [m4, m5, m6]


def _u2_off_c5(g, c1, c2, c5, u1, u2, mm1, mm2):
    shared = c5.edge_set & c2.edge_set
    assumption(bool(shared), g, "C5 has no edge of C2")
    p1 = paths_of(g, shared)
    cut = frozenset().union(*(p.edge_set for p in p1))
    p2 = _first_containing(segments(c5, cut), u1)
    p3 = _first_containing(segments(c2, cut), u2)
    assumption(len(p1) == len(p2) == len(p3), g, "path families differ in size")
    for p in p1:
        assumption(len(p.edge_set & mm2) == len(p.edge_set & mm1) + 1, g,
                   "a C5 & C2 component does not end in M edges")

    ctr = contract(g, {"A1": p1, "A2": p2, "A3": p3})
    a1, a2, a3 = (frozenset(ctr.groups[k]) for k in ("A1", "A2", "A3"))
    try:
        res = lemma_two_pm(ctr.aux, a1, a2, a3, {ctr.groups["A2"][0]}, ctr.groups["A3"][0])
    except PreconditionViolated as exc:
        assumption(False, ctr.aux, f"contracted graph unfit for the two-matching lemma: {exc}")
    f1, f2 = res.m4, res.m5
    e1set = lift_by_parity(ctr, f1 ^ f2)
    n4, n5 = split_or_fail(g, e1set, "lifted symmetric difference")

    if res.side is Side.CONTAINS_M3:
        base = mm1 - e1set
        return [base | n4, base | n5, mm2]

    both, either = f1 & f2, f1 | f2
    e2 = frozenset().union(
        *(ctr.provenance[a].edge_set for a in sorted(a1 & both)),
        *(ctr.provenance[a].edge_set for a in sorted(a3 - either)),
    )
    keep = (mm1 & c1.edge_set) - e1set
    m6 = n4 | (e2 & mm2) | keep
    m7 = n5 | (e2 & mm2) | keep
    c6 = lift_circuit(ctr, res.c_prime)
    assumption(u2 in c6.vertex_set and u1 not in c6.vertex_set, g, "C6 must hold u2 and miss u1")
    need = e2 & mm1
    on2 = mm1 & c2.edge_set
    if not c6.edge_set & c1.edge_set:
        x = (mm2 - c2.edge_set) | (on2 ^ c6.edge_set)
        return [m6, m7, x]
    # either direction along C6 from u2 yields a path T; take the first that works
    i = c6.vertices.index(u2)
    for _, fwd in sorted([(c6.edges[i], True), (c6.edges[i - 1], False)]):
        t = walk_until(c6, u2, c1.vertex_set, fwd)
        x = pm_of_circuit_minus_vertex(c1, t.vertices[-1]) | (on2 ^ t.edge_set)
        if is_perfect_matching(g, x) and need <= x:
            return [m6, m7, x]
    assumption(False, g, "no path T from u2 to C1 along C6 gives the third matching")


def _first_containing(paths, v):
    idx = next((i for i, p in enumerate(paths) if v in p.vertex_set), None)
    if idx is None:
        return paths
    return paths[idx:] + paths[:idx]
