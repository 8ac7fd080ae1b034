"""Cover of order at most 5 for bridgeless cubic graphs with a 2-factor of two circuits.

Naming follows one fixed frame: ``c1, c2`` the two circuits, ``u1u2`` the
smallest-id edge between them, ``m3`` the chords (edges off the 2-factor),
``m2`` the perfect matching meeting ``m3`` only in ``u1u2`` and
``m1 = (E(c1) | E(c2)) - m2``. ``c3``/``c4`` are the circuits of ``G - m2``
through ``u1``/``u2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionViolated
from ..graphcore import (Circuit, Multigraph, Path, assert_cubic, bridges, check_circuit,
                         circuit_through, circuits_of, paths_of, segments)
from ..matching import first_pm, is_perfect_matching, iter_pms, pm_of_circuit_minus_vertex
from ..contraction import contract, lift_by_parity, lift_circuit
from .common import check_two_factor, odd_two_factor_matching, split_or_fail, walk_until
from .near_hamiltonian import _finish
from .three_pm import lemma_three_pm
from .two_pm import lemma_two_pm
from .types import Cover, Side, assumption


@dataclass(frozen=True)
class TwoFactorContext:
    g: Multigraph
    c1: Circuit
    c2: Circuit
    u1: int
    u2: int
    u1u2: int
    m1: frozenset
    m2: frozenset
    m3: frozenset
    c3: Circuit
    c4: Circuit
    c5: Circuit
    q: Path


def _frame(g: Multigraph, c1: Circuit, c2: Circuit, u1u2: int | None):
    e1, e2 = c1.edge_set, c2.edge_set
    m3 = g.edge_ids() - (e1 | e2)
    joining = [e for e in sorted(m3) if set(g.ends[e]) & c1.vertex_set and set(g.ends[e]) & c2.vertex_set]
    if u1u2 is None:
        u1u2 = joining[0]
    elif u1u2 not in joining:
        raise PreconditionViolated("u1u2", f"edge {u1u2} does not join the two circuits")
    u1, u2 = g.ends[u1u2] if g.ends[u1u2][0] in c1.vertex_set else g.ends[u1u2][::-1]
    m2 = odd_two_factor_matching(c1, c2, u1u2, u1, u2)
    m1 = (e1 | e2) - m2
    rest = g.edge_ids() - m2
    c3 = circuit_through(g, rest, vertex=u1)
    c4 = circuit_through(g, rest, vertex=u2)
    return u1, u2, u1u2, m1, m2, m3, c3, c4


def _find_c5(g, c1, c2, u1u2, m2, m3, skip=()):
    rest = g.edge_ids() - m2
    for e in sorted(m3 - {u1u2}):
        cand = circuit_through(g, rest, edge=e)
        if cand in skip:
            continue
        if cand.edge_set & c1.edge_set and cand.edge_set & c2.edge_set:
            return cand
    return None


def two_factor_context(g: Multigraph, c1: Circuit, c2: Circuit,
                       u1u2: int | None = None) -> TwoFactorContext | None:
    """The fixed frame around two odd circuits, or None when no C5 exists.

    Unlike ``cover_two_factor`` this does not stop at the shortcut branches.
    """
    assert_cubic(g)
    check_two_factor(g, c1, c2)
    if len(c1) % 2 == 0 or len(c2) % 2 == 0:
        raise PreconditionViolated("2-factor", "both circuits must be odd")
    u1, u2, u1u2, m1, m2, m3, c3, c4 = _frame(g, c1, c2, u1u2)
    c5 = _find_c5(g, c1, c2, u1u2, m2, m3, skip=(c3, c4))
    if c5 is None:
        return None
    q = next(p for p in segments(c1, c5.edge_set & c1.edge_set) if u1 in p.vertex_set)
    return TwoFactorContext(g, c1, c2, u1, u2, u1u2, m1, m2, m3, c3, c4, c5, q)


def cover_two_factor(g: Multigraph, c1: Circuit, c2: Circuit, u1u2: int | None = None) -> Cover:
    """Cover of order at most 5 from the 2-factor ``c1 + c2``.

    ``u1u2`` picks the chord joining the circuits; the smallest id by default.
    """
    assert_cubic(g)
    if bridges(g):
        raise PreconditionViolated("bridgeless", "graph has a bridge")
    check_two_factor(g, c1, c2)
    every = g.edge_ids()
    e1, e2 = c1.edge_set, c2.edge_set
    if len(c1) % 2 == 0 and len(c2) % 2 == 0:
        a, b = split_or_fail(g, e1 | e2, "even 2-factor")
        return _finish(g, [every - (e1 | e2), a, b], "3-edge-colouring: both circuits even")
    assumption(len(c1) % 2 == 1 and len(c2) % 2 == 1, g, "circuits of mixed parity")

    u1, u2, u1u2, m1, m2, m3, c3, c4 = _frame(g, c1, c2, u1u2)
    if c3 == c4:
        a, b = split_or_fail(g, every - m2, "2-factor G - M2")
        return _finish(g, [m2, a, b], "3-edge-colouring: u1 and u2 share a circuit of G - M2")

    if c3.edge_set & e2:
        three = _three_pm_claimed(g, c1, c2, u1u2, m2, c3)
        return _finish(g, [m2, m3, *three], "two-factor: C3 meets C2")
    if c4.edge_set & e1:
        three = _three_pm_claimed(g, c2, c1, u1u2, m2, c4)
        return _finish(g, [m2, m3, *three], "two-factor: C4 meets C1")

    c5 = _find_c5(g, c1, c2, u1u2, m2, m3)
    assumption(c5 is not None, g, "no circuit of G - M2 meets both C1 and C2")
    q = next(p for p in segments(c1, c5.edge_set & e1) if u1 in p.vertex_set)
    ctx = TwoFactorContext(g, c1, c2, u1, u2, u1u2, m1, m2, m3, c3, c4, c5, q)

    sd = e1 ^ c5.edge_set
    parts = circuits_of(g, sd)
    c6 = next(c for c in parts if u1 in c.vertex_set)
    others = [c for c in parts if c != c6 and c.edge_set & e2]
    if not others:
        return _tagged(claim2_cover(ctx, c6, c3), "C6/C3")
    c7 = others[0]

    p2 = paths_of(g, c7.edge_set & e1)
    for p in p2:
        assumption(len(p.edge_set & m2) == len(p.edge_set & m1) + 1, g,
                   "a C7 & C1 component does not end in M2 edges")
    cut = frozenset().union(*(p.edge_set for p in p2))
    p3 = segments(c7, cut)
    p4 = _rotate_to(segments(c1, cut), u1)
    assumption(len(p2) == len(p3) == len(p4), g, "path families differ in size")
    ctr = contract(g, {"B1": p2, "B2": p3, "B3": p4})
    b1, b2, b3 = (frozenset(ctr.groups[k]) for k in ("B1", "B2", "B3"))
    b2_meet = frozenset(a for a in ctr.groups["B2"] if ctr.provenance[a].edge_set & e2)
    res = _two_pm_claimed(ctr.aux, b1, b2, b3, b2_meet, ctr.groups["B3"][0])
    c8 = lift_circuit(ctr, res.c)
    assumption(u1 in c8.vertex_set, g, "C8 misses u1")

    if res.side is Side.CONTAINS_M3:
        three = _three_pm_claimed(g, c1, c2, u1u2, m2, c8)
        return _finish(g, [m2, m3, *three], "two-factor: C8 route to the three-matching lemma")

    e3 = lift_by_parity(ctr, res.m4 ^ res.m5)
    r = (e1 - e3) & m2
    x, y = split_or_fail(g, e3 - c8.edge_set, "E3 - E(C8)")
    n8, n9 = x | r, y | r
    off = c1.vertex_set - c8.vertex_set
    assumption(is_perfect_matching(g, n8, off) and is_perfect_matching(g, n9, off), g,
               "N8/N9 are not perfect matchings of G[V(C1)] - V(C8)")
    assumption(e1 - (c8.edge_set | n8 | n9) == (e1 - e3) & m1, g,
               "E(C1) - (E(C8) | N8 | N9) differs from (E(C1) - E3) & M1")
    c9 = lift_circuit(ctr, res.c_prime)
    return _tagged(claim2_cover(ctx, c8, c9, n8, n9), "C8/C9")


def _tagged(cover: Cover, route: str) -> Cover:
    return Cover(cover.matchings, f"{cover.provenance_note} (circuits {route})")


def claim1_matching(ctx: TwoFactorContext) -> frozenset:
    """A perfect matching holding ``(m1 & E(c1)) - (E(Q) | E(C5))``."""
    g, c1, c2, c5, q = ctx.g, ctx.c1, ctx.c2, ctx.c5, ctx.q
    m1c1 = ctx.m1 & c1.edge_set
    need = m1c1 - (q.edge_set | c5.edge_set)
    if not need:
        return first_pm(g)
    u3, u4 = q.ends
    stop3 = c2.vertex_set | {u4}
    stop4 = c2.vertex_set | {u3}
    # which way to walk from u3 or u4 is not pinned down; both are tried
    t1s = [walk_until(c5, u3, stop3, fwd) for fwd in (True, False)]
    t2s = [walk_until(c5, u4, stop4, fwd) for fwd in (True, False)]
    cands = []
    for t1 in t1s:
        end = t1.vertices[-1]
        if end in c2.vertex_set:
            cands.append(_via_c2(ctx, q, u3, t1))
        elif end == u4:
            cands.append((ctx.m2 - c1.edge_set) | (m1c1 ^ (q.edge_set | t1.edge_set)))
    for t2 in t2s:
        if t2.vertices[-1] in c2.vertex_set:
            cands.append(_via_c2(ctx, q, u4, t2))
    for x in cands:
        if is_perfect_matching(g, x) and need <= x:
            return x
    assumption(False, g, "no walk along C5 yields the required perfect matching")


def _via_c2(ctx: TwoFactorContext, q: Path, end: int, t: Path) -> frozenset:
    i, j = q.vertices.index(ctx.u1), q.vertices.index(end)
    lo, hi = min(i, j), max(i, j)
    t3 = frozenset(q.edges[lo:hi])
    return (((ctx.m1 & ctx.c1.edge_set) ^ (t.edge_set | t3))
            | pm_of_circuit_minus_vertex(ctx.c2, t.vertices[-1]))


def claim2_problem(ctx: TwoFactorContext, c: Circuit, c_prime: Circuit, n2=None, n3=None):
    """First violated hypothesis of the five-matching claim, or None.

    Returns ``(clause, detail, (n2, n3))``; when ``n2``/``n3`` are omitted a
    suitable pair is searched among perfect matchings of ``G[V(C1)] - V(C)``.
    """
    g, e1, e2 = ctx.g, ctx.c1.edge_set, ctx.c2.edge_set
    for name, x in (("C", c), ("C'", c_prime)):
        if not check_circuit(g, x):
            return "circuits", f"{name} is not a circuit", None
    if ctx.u1 not in c.vertex_set or ctx.u1 not in c_prime.vertex_set:
        return 1, "u1 must lie on both circuits", None
    d1 = c.edge_set & e2
    c5_2 = ctx.c5.edge_set & e2
    if not d1 or not d1 <= c5_2 or not (c_prime.edge_set & e2) <= c5_2 or d1 & c_prime.edge_set:
        return 2, "C2-edge containments fail", None
    qs = _rotate_to(segments(c, d1), ctx.u1)
    if not ctx.q.edge_set <= qs[0].edge_set:
        return 3, "E(Q) is not inside the first segment", None
    for qi in qs[1:]:
        if not is_perfect_matching(g, ctx.m2 & qi.edge_set, qi.vertex_set - ctx.c2.vertex_set):
            return 3, f"segment {qi.vertices} not matched by M2", None
    target = (ctx.m1 & e1) - c_prime.edge_set
    off = ctx.c1.vertex_set - c.vertex_set

    def ok4(a, b):
        return e1 - (c.edge_set | a | b) <= target

    if n2 is None or n3 is None:
        pms = list(iter_pms(g, vertices=off))
        pair = next(((a, b) for i, a in enumerate(pms) for b in pms[i:] if ok4(a, b)), None)
        if pair is None:
            return 4, "no pair N2, N3 exists", None
        n2, n3 = pair
    elif not (is_perfect_matching(g, n2, off) and is_perfect_matching(g, n3, off) and ok4(n2, n3)):
        return 4, "N2/N3 fail", None
    if not is_perfect_matching(g, target, ctx.c1.vertex_set - c_prime.vertex_set):
        return 5, "(M1 & E(C1)) - E(C') does not match C1 - V(C')", None
    if not is_perfect_matching(g, c_prime.edge_set - ctx.m1, c_prime.vertex_set - {ctx.u1}):
        return 5, "E(C') - M1 is not a perfect matching of C' - u1", None
    return None, "", (frozenset(n2), frozenset(n3))


def claim2_cover(ctx: TwoFactorContext, c: Circuit, c_prime: Circuit, n2=None, n3=None) -> Cover:
    clause, detail, pair = claim2_problem(ctx, c, c_prime, n2, n3)
    if clause is not None:
        raise PreconditionViolated(clause, detail)
    n2, n3 = pair
    g, m1, m2, m3 = ctx.g, ctx.m1, ctx.m2, ctx.m3
    d1 = c.edge_set & ctx.c2.edge_set
    p1 = _rotate_to(segments(ctx.c2, d1), ctx.u2)
    qs = _rotate_to(segments(c, d1), ctx.u1)
    assumption(len(p1) == len(qs), g, "segment families differ in size")
    ctr = contract(g, {"D2": p1, "D3": qs}, d1)
    dd1 = frozenset(ctr.kept)
    dd2, dd3 = frozenset(ctr.groups["D2"]), frozenset(ctr.groups["D3"])
    res = _two_pm_claimed(ctr.aux, dd1, dd2, dd3, {ctr.groups["D2"][0]}, ctr.groups["D3"][0])
    f1, f2 = res.m4, res.m5
    both, either = f1 & f2, f1 | f2
    e2set = ctr.lift_edges(f1 ^ f2)
    n4, n5 = split_or_fail(g, e2set, "lifted E2")

    def lifted(ids, mask, keep: bool):
        out = set()
        for a in ids:
            es = ctr.provenance[a].edge_set
            out |= (es & mask) if keep else (es - mask)
        return frozenset(out)

    outside = ctr.aux.edge_ids() - either
    if res.side is Side.CONTAINS_M3:
        n6 = lifted(dd2 & outside, m1, True) | lifted(dd3 & both, m2, False)
        x = (m1 ^ (c_prime.edge_set | ctx.c4.edge_set)) | {ctx.u1u2}
        return _finish(g, [m2, m3, n2 | n4 | n6, n3 | n5 | n6, x], "two-factor: five-matching claim, D3 side")
    n7 = lifted(dd2 & outside, m1, True) | ctr.lift_edges(both) | lifted(dd3 & outside, m2, True)
    m8 = ((m1 & ctx.c1.edge_set) ^ ctx.c3.edge_set) | (m2 - ctx.c1.edge_set)
    m9 = claim1_matching(ctx)
    return _finish(g, [m3, n2 | n4 | n7, n3 | n5 | n7, m8, m9], "two-factor: five-matching claim, D1 side")


def _rotate_to(paths, v):
    idx = next((i for i, p in enumerate(paths) if v in p.vertex_set), 0)
    return paths[idx:] + paths[:idx]


def _three_pm_claimed(g, c1, c2, u1u2, m, c):
    try:
        return lemma_three_pm(g, c1, c2, u1u2, m, c)
    except PreconditionViolated as exc:
        assumption(False, g, f"circuit should meet the three-matching hypotheses: {exc}")


def _two_pm_claimed(aux, m1, m2, m3, f, alpha):
    try:
        return lemma_two_pm(aux, m1, m2, m3, f, alpha)
    except PreconditionViolated as exc:
        assumption(False, aux, f"contracted graph unfit for the two-matching lemma: {exc}")
