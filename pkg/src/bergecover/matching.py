"""Perfect-matching primitives and alternating-path machinery.

All searches are plain backtracking on the lowest-indexed uncovered vertex,
trying incident edges in increasing id order, so results are reproducible.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (EvenCircuit, NoMatching, NotTwoRegular, OddComponent,
                     VertexNotOnCircuit)
from .graphcore import Circuit, Multigraph, Path, circuits_of, paths_of


def is_matching(g: Multigraph, s: Iterable[int]) -> bool:
    seen: set[int] = set()
    for e in s:
        a, b = g.ends[e]
        if a in seen or b in seen:
            return False
        seen.update((a, b))
    return True


def is_perfect_matching(g: Multigraph, s: Iterable[int], vertices: Iterable[int] | None = None) -> bool:
    """True iff ``s`` covers every vertex of ``vertices`` (default: all) exactly once.

    With ``vertices`` given, ``s`` must also stay inside that vertex set, i.e.
    it is a perfect matching of the subgraph induced by ``vertices``.
    """
    target = set(range(g.n)) if vertices is None else set(vertices)
    seen: set[int] = set()
    for e in s:
        a, b = g.ends[e]
        if a in seen or b in seen or a not in target or b not in target:
            return False
        seen.update((a, b))
    return seen == target


def iter_pms(g: Multigraph, *, allowed: Iterable[int] | None = None,
             vertices: Iterable[int] | None = None,
             forced: Iterable[int] = ()) -> Iterator[frozenset]:
    """Yield perfect matchings of the subgraph on ``vertices`` using ``allowed`` edges.

    ``forced`` edges are placed first; none is yielded if they conflict.
    """
    allowed = None if allowed is None else frozenset(allowed)
    verts = sorted(range(g.n) if vertices is None else set(vertices))
    inside = set(verts)
    covered: set[int] = set()
    chosen: list[int] = []
    for e in forced:
        a, b = g.ends[e]
        if a in covered or b in covered or a not in inside or b not in inside:
            return
        if allowed is not None and e not in allowed:
            return
        covered.update((a, b))
        chosen.append(e)
    if (len(verts) - len(covered)) % 2:
        return

    def rec(i: int) -> Iterator[frozenset]:
        while i < len(verts) and verts[i] in covered:
            i += 1
        if i == len(verts):
            yield frozenset(chosen)
            return
        v = verts[i]
        covered.add(v)
        for e in g.incident(v):
            if allowed is not None and e not in allowed:
                continue
            w = g.other(e, v)
            if w in covered or w not in inside:
                continue
            covered.add(w)
            chosen.append(e)
            yield from rec(i + 1)
            chosen.pop()
            covered.discard(w)
        covered.discard(v)

    yield from rec(0)


def first_pm(g: Multigraph, **kw) -> frozenset | None:
    return next(iter_pms(g, **kw), None)


def enumerate_pms(g: Multigraph) -> list[frozenset]:
    return list(iter_pms(g))


def pm_through_edge(g: Multigraph, e: int) -> frozenset:
    pm = first_pm(g, forced=(e,))
    if pm is None:
        raise NoMatching(f"no perfect matching contains edge {e}")
    return pm


def split_even_circuits(g: Multigraph, s: Iterable[int]) -> tuple[frozenset, frozenset]:
    """Split a disjoint union of even circuits into two matchings.

    On each circuit the class holding its canonical first edge goes to the
    first matching.
    """
    try:
        cs = circuits_of(g, s)
    except NotTwoRegular as exc:
        raise OddComponent(f"component through vertex {exc.vertex} is not a circuit") from None
    n1, n2 = [], []
    for c in cs:
        if len(c) % 2:
            raise OddComponent(f"circuit through vertex {c.vertices[0]} has odd length {len(c)}")
        n1.extend(c.edges[0::2])
        n2.extend(c.edges[1::2])
    return frozenset(n1), frozenset(n2)


def three_edge_coloring(g: Multigraph) -> tuple[frozenset, frozenset, frozenset] | None:
    """Exact search: a perfect matching whose complementary 2-factor is all even."""
    every = g.edge_ids()
    for pm in iter_pms(g):
        try:
            a, b = split_even_circuits(g, every - pm)
        except OddComponent:
            continue
        return pm, a, b
    return None


def maximal_alternating_paths(g: Multigraph, a: Iterable[int], b: Iterable[int],
                              forbidden: Iterable[int] = ()) -> list[Path]:
    """Inclusion-maximal A-B alternating paths of ``g - forbidden``.

    ``a`` and ``b`` must be disjoint matchings, so these are exactly the path
    components of ``(a | b) - forbidden``. A circuit component has no unique
    maximal path and raises ValueError.
    """
    a, b = frozenset(a), frozenset(b)
    if a & b:
        raise ValueError("the two matchings share edges")
    if not (is_matching(g, a) and is_matching(g, b)):
        raise ValueError("arguments must be matchings")
    return paths_of(g, (a | b) - frozenset(forbidden))


def pm_of_circuit_minus_vertex(c: Circuit, u: int) -> frozenset:
    k = len(c.edges)
    if k % 2 == 0:
        raise EvenCircuit(f"circuit has even length {k}")
    if u not in c.vertex_set:
        raise VertexNotOnCircuit(f"vertex {u} is not on the circuit")
    i = c.vertices.index(u)
    return frozenset(c.edges[(i + 1 + 2 * j) % k] for j in range((k - 1) // 2))
