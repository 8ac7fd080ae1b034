"""Constructive perfect-matching covers of order at most 5.

``cover`` picks the first applicable route: a 3-edge-colouring, a vertex
whose deletion leaves a hamiltonian graph, or a 2-factor with two circuits.
"""

from __future__ import annotations

from ..errors import Disconnected, PreconditionViolated, Unsupported
from ..graphcore import Multigraph, bridges, is_cubic
from ..matching import three_edge_coloring
from ..oracle import find_two_factor_two_circuits, hamiltonian_circuit
from .near_hamiltonian import _finish, cover_near_hamiltonian
from .three_pm import lemma_three_pm, three_pm_problem
from .two_factor import (TwoFactorContext, claim1_matching, claim2_cover, claim2_problem,
                         cover_two_factor, two_factor_context)
from .two_pm import lemma_two_pm
from .types import Cover, Side, TwoPmResult, parse_cover

__all__ = [
    "Cover", "Side", "TwoPmResult", "TwoFactorContext", "claim1_matching", "claim2_cover",
    "check_hypotheses", "claim2_problem", "cover", "cover_near_hamiltonian", "cover_two_factor", "lemma_three_pm",
    "lemma_two_pm", "parse_cover", "three_pm_problem", "two_factor_context",
]


def check_hypotheses(g: Multigraph) -> None:
    if not is_cubic(g):
        raise PreconditionViolated("cubic", "graph is not cubic")
    try:
        if bridges(g):
            raise PreconditionViolated("bridgeless", "graph has a bridge")
    except Disconnected:
        raise PreconditionViolated("connected", "graph is not connected") from None


def cover(g: Multigraph) -> Cover:
    check_hypotheses(g)
    col = three_edge_coloring(g)
    if col is not None:
        return _finish(g, list(col), "3-edge-colouring")
    for v in range(g.n):
        c = hamiltonian_circuit(g, {v})
        if c is not None:
            return cover_near_hamiltonian(g, v, c)
    pair = find_two_factor_two_circuits(g)
    if pair is not None:
        return cover_two_factor(g, *pair)
    raise Unsupported("no construction applies: not 3-edge-colourable, "
                      "no vertex-deleted hamiltonian circuit, no 2-factor with two circuits")
