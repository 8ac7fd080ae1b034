"""Deterministic graph families and seeded random instance builders.

Edge-id layouts (stable, so golden files do not drift):

* ``gp(n, k)``: vertices ``0..n-1`` outer, ``n..2n-1`` inner. Ids: outer
  circuit ``(i, i+1)`` first, then spokes ``(i, n+i)``, then inner edges
  ``(n+i, n+(i+k) mod n)``, each block in order of ``i``.
* ``flower(n)``: for ``i < n`` the claw centre is ``i``, its leaves are
  ``b_i = n+i``, ``c_i = 2n+i``, ``d_i = 3n+i``. Ids: the three claw edges
  per ``i``, then the ``b`` circuit, then the ``2n``-circuit
  ``c_0 .. c_{n-1} d_0 .. d_{n-1}``.
* ``prism``: triangles ``0 1 2`` and ``3 4 5`` then rungs ``(i, i+3)``.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import BadParams
from .graphcore import Multigraph, bridges, circuits_of, is_connected
from .matching import is_perfect_matching


def theta() -> Multigraph:
    return Multigraph.from_edges(2, [(0, 1)] * 3)


def k4() -> Multigraph:
    return Multigraph.from_edges(4, combinations(range(4), 2))


def prism() -> Multigraph:
    return Multigraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                     (0, 3), (1, 4), (2, 5)])


def gp(n: int, k: int) -> Multigraph:
    if n < 3 or not 1 <= k or not 2 * k < n:
        raise BadParams(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    outer = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    inner = [(n + i, n + (i + k) % n) for i in range(n)]
    return Multigraph.from_edges(2 * n, outer + spokes + inner)


def petersen() -> Multigraph:
    return gp(5, 2)


def moebius_kantor() -> Multigraph:
    return gp(8, 3)


def flower(n: int) -> Multigraph:
    if n < 5 or n % 2 == 0:
        raise BadParams(f"flower snark J{n} needs odd n >= 5")
    b, c, d = (lambda i: n + i % n), (lambda i: 2 * n + i % n), (lambda i: 3 * n + i % n)
    claws = [e for i in range(n) for e in ((i, b(i)), (i, c(i)), (i, d(i)))]
    bcyc = [(b(i), b(i + 1)) for i in range(n)]
    cd = [c(i) for i in range(n)] + [d(i) for i in range(n)]
    cdcyc = [(cd[j], cd[(j + 1) % (2 * n)]) for j in range(2 * n)]
    return Multigraph.from_edges(4 * n, claws + bcyc + cdcyc)


FAMILIES = {
    "theta": (theta, 0),
    "k4": (k4, 0),
    "prism": (prism, 0),
    "petersen": (petersen, 0),
    "moebius_kantor": (moebius_kantor, 0),
    "gp": (gp, 2),
    "flower": (flower, 1),
}


def gen(name: str, *params: int) -> Multigraph:
    try:
        fn, arity = FAMILIES[name]
    except KeyError:
        raise BadParams(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
    if len(params) != arity:
        raise BadParams(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def relabel(g: Multigraph, rng: random.Random) -> tuple[Multigraph, dict[int, int]]:
    """Random vertex permutation and edge-id shuffle; returns the graph and old->new ids."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    order = list(range(g.m))
    rng.shuffle(order)
    h = Multigraph.from_edges(g.n, [(perm[g.ends[e][0]], perm[g.ends[e][1]]) for e in order])
    return h, {old: new for new, old in enumerate(order)}


def random_cubic(n: int, rng: random.Random, *, simple: bool = False, bridgeless: bool = True,
                 tries: int = 10_000) -> Multigraph:
    """Connected cubic multigraph from the pairing model, loops rejected."""
    if n < 2 or n % 2:
        raise BadParams("cubic graphs need an even number of vertices >= 2")
    for _ in range(tries):
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        pairs = [(points[2 * i], points[2 * i + 1]) for i in range(len(points) // 2)]
        if any(a == b for a, b in pairs):
            continue
        if simple and len({(min(p), max(p)) for p in pairs}) != len(pairs):
            continue
        g = Multigraph.from_edges(n, pairs)
        if not is_connected(g):
            continue
        if bridgeless and bridges(g):
            continue
        return g
    raise BadParams(f"no suitable cubic graph on {n} vertices found")


def random_two_circuit_cubic(a: int, b: int, rng: random.Random, *, tries: int = 10_000) -> Multigraph:
    """Bridgeless cubic graph whose 2-factor ``0..a-1`` / ``a..a+b-1`` has two circuits.

    Ids: first circuit, second circuit, then the chord matching.
    """
    if a < 2 or b < 2 or (a + b) % 2:
        raise BadParams("circuit lengths must be >= 2 with even sum")
    c1 = [(i, (i + 1) % a) for i in range(a)] if a > 2 else [(0, 1), (0, 1)]
    c2 = [(a + i, a + (i + 1) % b) for i in range(b)] if b > 2 else [(a, a + 1), (a, a + 1)]
    for _ in range(tries):
        verts = list(range(a + b))
        rng.shuffle(verts)
        chords = [(verts[2 * i], verts[2 * i + 1]) for i in range((a + b) // 2)]
        g = Multigraph.from_edges(a + b, c1 + c2 + chords)
        if is_connected(g) and not bridges(g):
            return g
    raise BadParams(f"no bridgeless two-circuit graph for lengths {a}, {b}")


def random_two_pm_instance(n: int, rng: random.Random, *, tries: int = 10_000):
    """Random input for the two-matching lemma on ``n`` vertices.

    Returns ``(g, m1, m2, m3, f, alpha)``: ``m1 | m2`` is the hamiltonian
    circuit ``0 1 .. n-1``, ``m3`` is a random perfect matching chosen so that
    ``m1 | m3`` is hamiltonian too; vertices and ids are shuffled afterwards.
    """
    if n < 2 or n % 2:
        raise BadParams("need even n >= 2")
    ham = [(i, (i + 1) % n) for i in range(n)] if n > 2 else [(0, 1), (0, 1)]
    for _ in range(tries):
        verts = list(range(n))
        rng.shuffle(verts)
        chords = [(verts[2 * i], verts[2 * i + 1]) for i in range(n // 2)]
        base = Multigraph.from_edges(n, ham + chords)
        cs = circuits_of(base, frozenset(range(0, n, 2)) | frozenset(range(n, n + n // 2)))
        if len(cs) != 1 or len(cs[0]) != n:
            continue
        g, idmap = relabel(base, rng)
        m1 = frozenset(idmap[e] for e in range(0, n, 2))
        m2 = frozenset(idmap[e] for e in range(1, n, 2))
        m3 = frozenset(idmap[e] for e in range(n, n + n // 2))
        fs = sorted(m2)
        f = frozenset(rng.sample(fs, rng.randint(1, len(fs))))
        alpha = rng.choice(sorted(m3))
        assert is_perfect_matching(g, m1) and is_perfect_matching(g, m2) and is_perfect_matching(g, m3)
        return g, m1, m2, m3, f, alpha
    raise BadParams(f"no instance found for n={n}")


def random_near_hamiltonian(n: int, rng: random.Random, *, tries: int = 10_000) -> Multigraph:
    """Cubic graph where ``0 1 .. n-2`` is a hamiltonian circuit of ``G - (n-1)``.

    Bridges are allowed. Ids: the circuit, then the three edges at ``n-1``,
    then the chords.
    """
    if n < 4 or n % 2:
        raise BadParams("need even n >= 4")
    k = n - 1
    circ = [(i, (i + 1) % k) for i in range(k)]
    for _ in range(tries):
        verts = list(range(k))
        rng.shuffle(verts)
        hub = [(v, k) for v in sorted(verts[:3])]
        rest = verts[3:]
        chords = [(rest[2 * i], rest[2 * i + 1]) for i in range(len(rest) // 2)]
        g = Multigraph.from_edges(n, circ + hub + chords)
        if is_connected(g):
            return g
    raise BadParams(f"no near-hamiltonian graph on {n} vertices")
