"""Brute-force oracles: cover validity, minimum cover order, hamiltonicity.

Deliberately exponential; meant for desk-scale instances only. Nothing here
calls into the constructive procedures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NoPerfectMatching
from .graphcore import Circuit, Multigraph, circuits_of
from .matching import is_perfect_matching, iter_pms


@dataclass
class CoverReport:
    is_pm: list[bool]
    uncovered: frozenset
    order: int

    @property
    def valid(self) -> bool:
        return all(self.is_pm) and not self.uncovered

    def to_text(self) -> str:
        lines = [f"valid {'true' if self.valid else 'false'}", f"order {self.order}"]
        for i, ok in enumerate(self.is_pm):
            lines.append(f"matching {i} {'pm' if ok else 'not-pm'}")
        lines.append("uncovered" + "".join(f" {e}" for e in sorted(self.uncovered)))
        return "\n".join(lines) + "\n"


def verify_cover(g: Multigraph, matchings) -> CoverReport:
    """Check a cover given as a ``Cover`` or a plain sequence of edge sets."""
    ms = [frozenset(m) for m in getattr(matchings, "matchings", matchings)]
    covered = frozenset().union(*ms) if ms else frozenset()
    return CoverReport(
        is_pm=[is_perfect_matching(g, m) for m in ms],
        uncovered=g.edge_ids() - covered,
        order=len(set(ms)),
    )


def min_cover_order(g: Multigraph, cap: int = 6) -> int | None:
    """Exact minimum number of perfect matchings covering E(g); None if above ``cap``."""
    pms = [sum(1 << e for e in pm) for pm in iter_pms(g)]
    if not pms:
        raise NoPerfectMatching("graph has no perfect matching")
    full = (1 << g.m) - 1
    if g.m == 0:
        return 0
    containing = [[p for p in pms if p >> e & 1] for e in range(g.m)]
    if any(not c for c in containing):
        return None

    def search(covered: int, budget: int) -> bool:
        if covered == full:
            return True
        if budget == 0:
            return False
        # branch on the uncovered edge with fewest options
        best = None
        for e in range(g.m):
            if not covered >> e & 1 and (best is None or len(containing[e]) < len(containing[best])):
                best = e
        return any(search(covered | p, budget - 1) for p in containing[best])

    for k in range(1, cap + 1):
        if search(0, k):
            return k
    return None


def hamiltonian_circuit(g: Multigraph, removed: Iterable[int] = ()) -> Circuit | None:
    """A hamiltonian circuit of ``g - removed`` by backtracking, or None."""
    removed = frozenset(removed)
    verts = [v for v in range(g.n) if v not in removed]
    if len(verts) < 2:
        return None
    start = verts[0]
    target = len(verts)
    adj = {v: [(e, g.other(e, v)) for e in g.incident(v) if g.other(e, v) not in removed] for v in verts}
    if any(len(a) < 2 for a in adj.values()):
        return None
    on_path = {start}
    vs, es = [start], []

    def free_degree_ok(v: int) -> bool:
        # every unvisited neighbour must keep two usable neighbours
        for _, w in adj[v]:
            if w in on_path:
                continue
            usable = sum(1 for _, x in adj[w] if x not in on_path or x == start or x == v)
            if usable < 2:
                return False
        return True

    def rec(v: int) -> bool:
        if len(vs) == target:
            for e, w in adj[v]:
                if w == start and (target > 2 or e != es[0]):
                    es.append(e)
                    return True
            return False
        for e, w in adj[v]:
            if w in on_path:
                continue
            on_path.add(w)
            vs.append(w)
            es.append(e)
            if free_degree_ok(w) and rec(w):
                return True
            on_path.discard(w)
            vs.pop()
            es.pop()
        return False

    if not rec(start):
        return None
    return Circuit(tuple(vs), tuple(es)).canonical()


def is_hypohamiltonian(g: Multigraph) -> bool:
    if hamiltonian_circuit(g) is not None:
        return False
    return all(hamiltonian_circuit(g, {v}) is not None for v in range(g.n))


def find_two_factor_two_circuits(g: Multigraph) -> tuple[Circuit, Circuit] | None:
    """First 2-factor with exactly two circuits, as complement of a perfect matching."""
    every = g.edge_ids()
    for pm in iter_pms(g):
        cs = circuits_of(g, every - pm)
        if len(cs) == 2:
            return cs[0], cs[1]
    return None


def check_two_pm(g: Multigraph, m1, m2, m3, f, alpha: int, result) -> list[str]:
    """Independent postcondition check for the two-matching lemma.

    Uses only ``circuits_of`` and ``is_perfect_matching``; returns the list of
    failed clauses (empty when all hold).
    """
    m1, m2, m3, f = map(frozenset, (m1, m2, m3, f))
    m4, m5 = frozenset(result.m4), frozenset(result.m5)
    fails = []
    if not is_perfect_matching(g, m4) or not is_perfect_matching(g, m5):
        fails.append("m4/m5 not perfect matchings")
        return fails
    inter, union = m4 & m5, m4 | m5
    side3 = inter <= m3 <= union
    side1 = inter <= m1 <= union
    if not (side3 or side1):
        fails.append("clause 1: neither containment holds")
    cs = circuits_of(g, m4 ^ m5)
    meeting = [c for c in cs if c.edge_set & f]
    if len(meeting) != 1:
        fails.append(f"clause 2: {len(meeting)} circuits meet F")
    elif alpha not in meeting[0].edge_set:
        fails.append("clause 2: the circuit meeting F misses alpha")
    elif result.c is not None and result.c.edge_set != meeting[0].edge_set:
        fails.append("clause 2: reported circuit differs")
    if m1 <= union:
        cp = result.c_prime
        if cp is None:
            fails.append("clause 3: M1 covered but no C' given")
        else:
            cprime_ok = _is_circuit(g, cp)
            c_edges = meeting[0].edge_set if len(meeting) == 1 else frozenset()
            if not cprime_ok:
                fails.append("clause 3: C' is not a circuit of G")
            if alpha not in cp.edge_set:
                fails.append("clause 3: alpha not on C'")
            if m2 & c_edges & cp.edge_set:
                fails.append("clause 3: M2 meets both C and C'")
            if not (m3 - union) <= (m3 - cp.edge_set):
                fails.append("clause 3: M3 - (M4|M5) not inside M3 - E(C')")
            rest = m3 - cp.edge_set
            if not is_perfect_matching(g, rest, set(range(g.n)) - cp.vertex_set):
                fails.append("clause 3: M3 - E(C') not a perfect matching of G - V(C')")
    return fails


def _is_circuit(g: Multigraph, c: Circuit) -> bool:
    # a single circuit is exactly one component of its own edge set
    try:
        cs = circuits_of(g, c.edge_set)
    except Exception:
        return False
    return len(cs) == 1 and cs[0].vertex_set == c.vertex_set
