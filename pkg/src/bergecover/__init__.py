"""Perfect matching covers of bridgeless cubic graphs, with exact checkers."""

from .berge import Cover, cover, cover_near_hamiltonian, cover_two_factor
from .graphcore import Circuit, Multigraph, Path, parse_edgelist, parse_graph6, emit_edgelist
from .oracle import min_cover_order, verify_cover

__all__ = [
    "Circuit", "Cover", "Multigraph", "Path", "cover", "cover_near_hamiltonian", "cover_two_factor",
    "emit_edgelist", "min_cover_order", "parse_edgelist", "parse_graph6", "verify_cover",
]
