"""Two perfect matchings from three whose pairwise unions are hamiltonian.

Given disjoint perfect matchings ``m1, m2, m3`` of a cubic graph with
``m1 | m2`` and ``m1 | m3`` hamiltonian circuits, a nonempty ``f`` inside
``m2`` and an edge ``alpha`` of ``m3``, build perfect matchings ``m4, m5``
such that

1. ``m4 & m5 <= m3 <= m4 | m5`` or ``m4 & m5 <= m1 <= m4 | m5``;
2. exactly one circuit ``C`` of ``m4 | m5`` meets ``f``, and it holds ``alpha``;
3. when ``m1 <= m4 | m5`` a second circuit ``C'`` through ``alpha`` has
   ``m2 & E(C) & E(C') = {}``, ``m3 - (m4 | m5) <= m3 - E(C')`` and
   ``m3 - E(C')`` perfectly matches ``G - V(C')``.

The construction recurses on a strictly smaller auxiliary graph obtained by
contracting the alternating paths around one circuit.
"""

from __future__ import annotations

from ..errors import PreconditionViolated
from ..graphcore import Multigraph, circuit_through, circuits_of, is_cubic
from ..matching import is_perfect_matching, maximal_alternating_paths
from ..contraction import contract, lift_by_parity, lift_circuit
from ..oracle import check_two_pm
from .types import Side, TwoPmResult, assumption


def lemma_two_pm(g: Multigraph, m1, m2, m3, f, alpha: int) -> TwoPmResult:
    m1, m2, m3, f = map(frozenset, (m1, m2, m3, f))
    problem = _precondition_problem(g, m1, m2, m3, f, alpha)
    if problem:
        raise PreconditionViolated(*problem)
    return _two_pm(g, m1, m2, m3, f, alpha, depth=0)


def _precondition_problem(g, m1, m2, m3, f, alpha):
    if not is_cubic(g):
        return "cubic", "graph is not cubic"
    for name, m in (("m1", m1), ("m2", m2), ("m3", m3)):
        if not is_perfect_matching(g, m):
            return "matchings", f"{name} is not a perfect matching"
    if m1 & m2 or m1 & m3 or m2 & m3:
        return "matchings", "matchings are not pairwise disjoint"
    for name, s in (("m1|m2", m1 | m2), ("m1|m3", m1 | m3)):
        cs = circuits_of(g, s)
        if len(cs) != 1 or len(cs[0]) != g.n:
            return "hamiltonian", f"{name} is not a hamiltonian circuit"
    if not f or not f <= m2:
        return "F", "F must be a nonempty subset of m2"
    if alpha not in m3:
        return "alpha", "alpha must lie in m3"
    return None


def _two_pm(g: Multigraph, m1, m2, m3, f, alpha: int, depth: int) -> TwoPmResult:
    assumption(depth <= g.n // 2 + 1, g, "recursion depth exceeded n/2")
    if depth:
        problem = _precondition_problem(g, m1, m2, m3, f, alpha)
        assumption(problem is None, g, f"recursive instance invalid: {problem}")

    c1 = circuit_through(g, m2 | m3, edge=alpha)
    if g.n == 2 or f <= c1.edge_set:
        res = TwoPmResult(m2, m3, Side.CONTAINS_M3, c1)
        return _checked(g, m1, m2, m3, f, alpha, res)

    e1 = (m3 - c1.edge_set) | (m2 & c1.edge_set)
    rest = g.edge_ids() - e1
    c2 = circuit_through(g, rest, edge=alpha)
    f_out = f - c1.edge_set
    if f_out <= c2.edge_set:
        res = TwoPmResult(m1, rest - m1, Side.CONTAINS_M1, c2, c1)
        return _checked(g, m1, m2, m3, f, alpha, res)

    f_far = f_out - c2.edge_set
    c3 = circuit_through(g, rest, edge=min(f_far))
    c3_edges = c3.edge_set
    outer = maximal_alternating_paths(g, m1, m3, forbidden=c3_edges)
    inner = maximal_alternating_paths(g, m1, m3, forbidden=g.edge_ids() - c3_edges)
    for p in outer:
        assumption(len(p.edge_set & m3) == len(p.edge_set & m1) + 1, g,
                   f"outer path {p} does not end in m3 edges")
    for p in inner:
        assumption(len(p.edge_set & m1) == len(p.edge_set & m3) + 1, g,
                   f"path {p} on C3 does not end in m1 edges")
    assumption(len(outer) == len(inner), g,
               f"path families differ in size ({len(outer)} vs {len(inner)})")
    s = next(i for i, p in enumerate(outer) if alpha in p.edge_set)

    kept = m2 & c3_edges
    ctr = contract(g, {"outer": outer, "inner": inner}, kept)
    aux = ctr.aux
    assumption(aux.n < g.n, g, "auxiliary graph is not smaller")
    a6 = frozenset(ctr.groups["inner"])
    a8 = frozenset(ctr.groups["outer"])
    a7 = frozenset(ctr.kept)
    f_aux = ctr.kept_to_aux(f & c3_edges)
    alpha_aux = ctr.groups["outer"][s]

    sub = _two_pm(aux, a6, a7, a8, f_aux, alpha_aux, depth + 1)
    m9, m10 = sub.m4, sub.m5
    sd = m9 ^ m10
    # kept edges in the symmetric difference lift to themselves
    e3 = lift_by_parity(ctr, sd - a7) | ctr.lift_edges(sd & a7)

    inter, union = m9 & m10, m9 | m10
    if inter <= a6 <= union:
        assumption(sub.c_prime is not None, aux, "recursion covers M6 but gave no C'")
        m11, side = m1, Side.CONTAINS_M1
    else:
        assumption(inter <= a8 <= union, aux, "recursion satisfies neither containment")
        m11, side = m3, Side.CONTAINS_M3
    m12 = e3 ^ m11
    assumption(is_perfect_matching(g, m12), g, "lifted M12 is not a perfect matching")

    c4 = lift_circuit(ctr, sub.c)
    c5 = lift_circuit(ctr, sub.c_prime) if side is Side.CONTAINS_M1 else None
    return _checked(g, m1, m2, m3, f, alpha, TwoPmResult(m11, m12, side, c4, c5))


def _checked(g, m1, m2, m3, f, alpha, res: TwoPmResult) -> TwoPmResult:
    fails = check_two_pm(g, m1, m2, m3, f, alpha, res)
    assumption(not fails, g, "two-matching postcondition failed: " + "; ".join(fails))
    return res
