"""Cover of order at most 5 for cubic graphs with a circuit missing one vertex."""

from __future__ import annotations

from ..errors import NoHamiltonianCircuit, PreconditionViolated
from ..graphcore import Circuit, Multigraph, assert_cubic, check_circuit, circuit_through, segments
from ..matching import is_perfect_matching, pm_of_circuit_minus_vertex
from ..contraction import contract
from ..oracle import hamiltonian_circuit, verify_cover
from .common import odd_two_factor_matching, split_or_fail
from .three_pm import lemma_three_pm
from .types import Cover, assumption


def cover_near_hamiltonian(g: Multigraph, v: int, circuit: Circuit | None = None) -> Cover:
    """Five perfect matchings covering ``g``, given that ``g - v`` is hamiltonian.

    ``circuit`` may supply the hamiltonian circuit of ``g - v``; otherwise
    the backtracking oracle finds one.
    """
    assert_cubic(g)
    if not 0 <= v < g.n:
        raise PreconditionViolated("v", f"vertex {v} not in graph")
    c = circuit if circuit is not None else hamiltonian_circuit(g, {v})
    if c is None:
        raise NoHamiltonianCircuit(v)
    if not check_circuit(g, c) or c.vertex_set != frozenset(range(g.n)) - {v}:
        raise PreconditionViolated("circuit", "supplied circuit is not hamiltonian in G - v")

    every = g.edge_ids()
    u = min(g.other(e, v) for e in g.incident(v))
    uv = min(e for e in g.incident(v) if g.other(e, v) == u)
    n1 = pm_of_circuit_minus_vertex(c, u)
    n2 = c.edge_set - n1
    m1 = n1 | {uv}
    comp = every - m1
    c1 = circuit_through(g, comp, vertex=u)
    c2 = circuit_through(g, comp, vertex=v)
    if c1 == c2:
        a, b = split_or_fail(g, comp, "2-factor through u and v")
        return _finish(g, [m1, a, b], "3-edge-colouring: u and v share a circuit of G - M1")

    ce, e1, e2 = c.edge_set, c1.edge_set, c2.edge_set
    m2 = (e1 - ce) | (e2 & ce) | (every - (ce | e1 | e2))
    assumption(is_perfect_matching(g, m2), g, "M2 is not a perfect matching")

    paths = segments(c, (e1 | e2) & ce)
    for p in paths:
        assumption(len(p.edge_set & n1) == len(p.edge_set & n2) + 1, g,
                   f"segment {p.vertices} does not end in N1 edges")
    ctr = contract(g, {"alpha": paths}, e1 | e2 | {uv})
    aux = ctr.aux
    alphas = frozenset(ctr.groups["alpha"])
    a1, a2 = ctr.circuit_to_aux(c1), ctr.circuit_to_aux(c2)
    uv_aux = ctr.kept_to_aux({uv})
    (uv_aux,) = uv_aux
    ua, va = ctr.aux_vertex(u), ctr.aux_vertex(v)
    assumption(len(a1) % 2 == 1 and len(a2) % 2 == 1, g, "C1 and C2 are not both odd")
    m_aux = odd_two_factor_matching(a1, a2, uv_aux, ua, va)
    rest = aux.edge_ids() - m_aux
    c3 = circuit_through(aux, rest, vertex=ua)
    c4 = circuit_through(aux, rest, vertex=va)
    if c3 == c4:
        a, b = split_or_fail(g, every - m2, "2-factor G - M2")
        return _finish(g, [m2, a, b], "3-edge-colouring: G - M2 has only even circuits")

    assumption(bool(c3.edge_set & a2.edge_set), aux, "C3 has no edge of C2 in G'")
    try:
        three = lemma_three_pm(aux, a1, a2, uv_aux, m_aux, c3)
    except PreconditionViolated as exc:
        assumption(False, aux, f"C3 does not meet the three-matching hypotheses: {exc}")

    lifted = []
    for mp in three:
        x = set(ctr.lift_edges(mp - alphas))
        for a in ctr.groups["alpha"]:
            x |= ctr.provenance[a].edge_set & (n1 if a in mp else n2)
        lifted.append(frozenset(x))
    return _finish(g, [m1, m2, *lifted], "near-hamiltonian: three-matching lemma on G'")


def _finish(g: Multigraph, ms, note: str) -> Cover:
    cover = Cover(tuple(ms), note)
    report = verify_cover(g, cover)
    assumption(report.valid, g, f"constructed cover invalid ({note}): "
               f"pm={report.is_pm} uncovered={sorted(report.uncovered)}")
    return cover
