"""Small helpers shared by the constructive procedures."""

from __future__ import annotations

from ..errors import OddComponent, PreconditionViolated
from ..graphcore import Circuit, Multigraph, Path, check_circuit
from ..matching import pm_of_circuit_minus_vertex, split_even_circuits
from .types import assumption


def split_or_fail(g: Multigraph, s, what: str) -> tuple[frozenset, frozenset]:
    try:
        return split_even_circuits(g, s)
    except OddComponent as exc:
        assumption(False, g, f"{what}: {exc}")


def walk_until(c: Circuit, start: int, stop: frozenset, forward: bool) -> Path:
    """Walk ``c`` from ``start`` until the first vertex of ``stop``."""
    k = len(c.vertices)
    i = c.vertices.index(start)
    vs, es = [start], []
    for step in range(1, k + 1):
        if forward:
            es.append(c.edges[(i + step - 1) % k])
            v = c.vertices[(i + step) % k]
        else:
            es.append(c.edges[(i - step) % k])
            v = c.vertices[(i - step) % k]
        vs.append(v)
        if v in stop:
            return Path(tuple(vs), tuple(es))
    raise ValueError("stop set not reached")


def bridge_edge(g: Multigraph, c1: Circuit, c2: Circuit, u1u2: int) -> tuple[int, int]:
    """Ends ``(u1, u2)`` of an edge joining ``c1`` to ``c2``."""
    a, b = g.ends[u1u2]
    if a in c1.vertex_set and b in c2.vertex_set:
        return a, b
    if b in c1.vertex_set and a in c2.vertex_set:
        return b, a
    raise PreconditionViolated("u1u2", f"edge {u1u2} does not join the two circuits")


def odd_two_factor_matching(c1: Circuit, c2: Circuit, u1u2: int, u1: int, u2: int) -> frozenset:
    """The perfect matching holding ``u1u2`` and otherwise only circuit edges."""
    return (pm_of_circuit_minus_vertex(c1, u1) | pm_of_circuit_minus_vertex(c2, u2)
            | {u1u2})


def check_two_factor(g: Multigraph, c1: Circuit, c2: Circuit) -> None:
    for name, c in (("c1", c1), ("c2", c2)):
        if not check_circuit(g, c):
            raise PreconditionViolated("2-factor", f"{name} is not a circuit of the graph")
    if c1.vertex_set & c2.vertex_set or len(c1.vertex_set | c2.vertex_set) != g.n:
        raise PreconditionViolated("2-factor", "circuits are not a spanning vertex-disjoint pair")
