"""Auxiliary graphs obtained by replacing paths with surrogate edges.

A :class:`Contraction` keeps enough provenance to move edge sets and circuits
back and forth between the parent graph and the auxiliary graph.

Auxiliary ids are dense: kept edges first (in parent-id order), then the
surrogates family by family, path by path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import NotCubicAux, NotSurrogate
from .graphcore import Circuit, Multigraph, Path, check_path


@dataclass(frozen=True)
class Contraction:
    parent: Multigraph
    aux: Multigraph
    vertex_map: tuple[int, ...]           # aux vertex -> parent vertex
    kept: Mapping[int, int]               # aux edge id -> parent edge id
    provenance: Mapping[int, Path]        # surrogate aux id -> parent path
    groups: Mapping[str, tuple[int, ...]]  # family name -> surrogate ids in path order

    def aux_vertex(self, v: int) -> int:
        return self.vertex_map.index(v)

    def kept_to_aux(self, parent_edges: Iterable[int]) -> frozenset:
        inv = {p: a for a, p in self.kept.items()}
        return frozenset(inv[e] for e in parent_edges)

    def lift_edges(self, aux_edges: Iterable[int]) -> frozenset:
        """Parent edges behind a set of aux edges (kept ones translated, surrogates expanded)."""
        out = set()
        for e in aux_edges:
            if e in self.kept:
                out.add(self.kept[e])
            else:
                out.update(self.provenance[e].edges)
        return frozenset(out)

    def circuit_to_aux(self, c: Circuit) -> Circuit:
        """Translate a parent circuit made only of kept edges."""
        inv = {p: a for a, p in self.kept.items()}
        return Circuit(tuple(self.aux_vertex(v) for v in c.vertices),
                       tuple(inv[e] for e in c.edges)).canonical()


def contract(parent: Multigraph, families: Mapping[str, Sequence[Path]],
             kept: Iterable[int] = (), *, require_cubic: bool = True) -> Contraction:
    kept = sorted(set(kept))
    for name, paths in families.items():
        used: set[int] = set()
        for p in paths:
            if not check_path(parent, p):
                raise ValueError(f"family {name}: not a path of the parent graph: {p}")
            if used & p.vertex_set:
                raise ValueError(f"family {name}: paths are not vertex-disjoint")
            used |= p.vertex_set
    verts = set()
    for e in kept:
        verts.update(parent.ends[e])
    for paths in families.values():
        for p in paths:
            verts.update(p.ends)
    vmap = tuple(sorted(verts))
    index = {v: i for i, v in enumerate(vmap)}

    pairs = []
    kept_map = {}
    for e in kept:
        a, b = parent.ends[e]
        kept_map[len(pairs)] = e
        pairs.append((index[a], index[b]))
    provenance = {}
    groups = {}
    for name, paths in families.items():
        ids = []
        for p in paths:
            a, b = p.ends
            provenance[len(pairs)] = p
            ids.append(len(pairs))
            pairs.append((index[a], index[b]))
        groups[name] = tuple(ids)
    aux = Multigraph.from_edges(len(vmap), pairs)
    if require_cubic:
        for v in range(aux.n):
            if aux.degree(v) != 3:
                raise NotCubicAux(v, aux.degree(v), f"parent vertex {vmap[v]}")
    return Contraction(parent, aux, vmap, kept_map, provenance, groups)


def lift_by_parity(c: Contraction, chosen: Iterable[int]) -> frozenset:
    """Union of the provenance paths of the chosen surrogate edges."""
    out = set()
    for e in chosen:
        if e not in c.provenance:
            raise NotSurrogate(e)
        out.update(c.provenance[e].edges)
    return frozenset(out)


def lift_circuit(c: Contraction, aux_circuit: Circuit) -> Circuit:
    """Expand every surrogate of an aux circuit into its path, oriented by the walk."""
    vs: list[int] = []
    es: list[int] = []
    k = len(aux_circuit.edges)
    for i, e in enumerate(aux_circuit.edges):
        x = c.vertex_map[aux_circuit.vertices[i]]
        y = c.vertex_map[aux_circuit.vertices[(i + 1) % k]]
        if e in c.kept:
            vs.append(x)
            es.append(c.kept[e])
            continue
        p = c.provenance[e]
        if p.vertices[0] != x:
            p = p.reversed()
        if p.vertices[0] != x or p.vertices[-1] != y:
            raise ValueError(f"surrogate {e} does not join {x} and {y}")
        vs.extend(p.vertices[:-1])
        es.extend(p.edges)
    return Circuit(tuple(vs), tuple(es)).canonical()
