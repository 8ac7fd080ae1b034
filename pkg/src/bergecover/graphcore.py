"""Multigraphs with identity-carrying edges, circuits, paths and text formats.

Every edge set in the package is a ``frozenset`` of edge ids. Parallel edges
are told apart only by their id, so endpoint pairs are never used as keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DegreeError, Disconnected, NotTwoRegular, ParseError

EdgeSet = frozenset


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph on vertices ``0..n-1``; edge ``i`` is ``ends[i]``.

    Endpoints are stored with the smaller vertex first.
    """

    n: int
    ends: tuple[tuple[int, int], ...]
    _inc: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        norm = []
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (a, b) in enumerate(self.ends):
            if a == b:
                raise ValueError(f"edge {eid} is a loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge {eid} has an endpoint outside 0..{self.n - 1}")
            a, b = min(a, b), max(a, b)
            norm.append((a, b))
            inc[a].append(eid)
            inc[b].append(eid)
        object.__setattr__(self, "ends", tuple(norm))
        object.__setattr__(self, "_inc", tuple(tuple(x) for x in inc))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        return cls(n, tuple((int(a), int(b)) for a, b in pairs))

    @property
    def m(self) -> int:
        return len(self.ends)

    def edge_ids(self) -> frozenset:
        return frozenset(range(len(self.ends)))

    def incident(self, v: int) -> tuple[int, ...]:
        return self._inc[v]

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def other(self, e: int, v: int) -> int:
        a, b = self.ends[e]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an end of edge {e}")

    def vertices_of(self, edges: Iterable[int]) -> frozenset:
        out = set()
        for e in edges:
            out.update(self.ends[e])
        return frozenset(out)


@dataclass(frozen=True)
class Circuit:
    """Cyclic walk; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1 mod k]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def canonical(self) -> "Circuit":
        k = len(self.vertices)
        i = min(range(k), key=self.vertices.__getitem__)
        fwd, back = self.edges[i], self.edges[i - 1]
        if fwd < back or k == 1:
            vs = self.vertices[i:] + self.vertices[:i]
            es = self.edges[i:] + self.edges[:i]
        else:
            vs = tuple(self.vertices[(i - j) % k] for j in range(k))
            es = tuple(self.edges[(i - 1 - j) % k] for j in range(k))
        return Circuit(vs, es)


@dataclass(frozen=True)
class Path:
    """Open walk ``v0 e0 v1 ... e_{k-1} v_k`` with distinct vertices."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def interior(self) -> frozenset:
        return frozenset(self.vertices[1:-1])

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1], self.edges[::-1])

    def canonical(self) -> "Path":
        a, b = self.vertices[0], self.vertices[-1]
        if a < b or (a == b and self.edges[0] <= self.edges[-1]):
            return self
        return self.reversed()


def assert_cubic(g: Multigraph) -> None:
    for v in range(g.n):
        if g.degree(v) != 3:
            raise DegreeError(v, g.degree(v))


def is_cubic(g: Multigraph) -> bool:
    return all(g.degree(v) == 3 for v in range(g.n))


def sym_diff(a: Iterable[int], b: Iterable[int]) -> frozenset:
    return frozenset(a) ^ frozenset(b)


def _incidence(g: Multigraph, s: frozenset) -> dict[int, list[int]]:
    inc: dict[int, list[int]] = {}
    for e in sorted(s):
        a, b = g.ends[e]
        inc.setdefault(a, []).append(e)
        inc.setdefault(b, []).append(e)
    return inc


def circuits_of(g: Multigraph, s: Iterable[int]) -> list[Circuit]:
    """Decompose a 2-regular edge set into canonical circuits, sorted by minimum vertex."""
    s = frozenset(s)
    inc = _incidence(g, s)
    for v in sorted(inc):
        if len(inc[v]) != 2:
            raise NotTwoRegular(v, len(inc[v]))
    seen: set[int] = set()
    out = []
    for start in sorted(inc):
        if start in seen:
            continue
        vs, es = [start], []
        prev_e, v = None, start
        while True:
            seen.add(v)
            e = inc[v][0] if inc[v][0] != prev_e else inc[v][1]
            es.append(e)
            w = g.other(e, v)
            if w == start:
                break
            vs.append(w)
            prev_e, v = e, w
        out.append(Circuit(tuple(vs), tuple(es)).canonical())
    out.sort(key=lambda c: c.vertices[0])
    return out


def circuit_through(g: Multigraph, s: Iterable[int], *, vertex: int | None = None,
                    edge: int | None = None) -> Circuit | None:
    """The circuit of the 2-regular set ``s`` through ``vertex`` or ``edge``."""
    for c in circuits_of(g, s):
        if vertex is not None and vertex in c.vertex_set:
            return c
        if edge is not None and edge in c.edge_set:
            return c
    return None


def paths_of(g: Multigraph, s: Iterable[int]) -> list[Path]:
    """Components of an edge set of maximum degree 2 that are paths.

    Raises ValueError if a component is a circuit. Paths are canonical and
    sorted by start vertex.
    """
    s = frozenset(s)
    inc = _incidence(g, s)
    for v, es in inc.items():
        if len(es) > 2:
            raise ValueError(f"vertex {v} has {len(es)} edges in the set")
    seen_e: set[int] = set()
    out = []
    for start in sorted(inc):
        if len(inc[start]) != 1 or inc[start][0] in seen_e:
            continue
        vs, es = [start], []
        v, prev_e = start, None
        while True:
            nxt = [e for e in inc[v] if e != prev_e]
            if not nxt:
                break
            e = nxt[0]
            es.append(e)
            seen_e.add(e)
            v = g.other(e, v)
            vs.append(v)
            prev_e = e
        out.append(Path(tuple(vs), tuple(es)).canonical())
    if len(seen_e) != len(s):
        raise ValueError("edge set contains a circuit component")
    out.sort(key=lambda p: (p.vertices[0], p.edges[0]))
    return out


def segments(c: Circuit, cut: Iterable[int]) -> list[Path]:
    """Paths of length >= 1 into which the edges ``cut`` separate circuit ``c``.

    Each path follows the orientation of ``c``; the list is in circuit order
    starting from the first segment after a cut edge.
    """
    cut = frozenset(cut)
    k = len(c.edges)
    idx = [i for i in range(k) if c.edges[i] in cut]
    if not idx:
        raise ValueError("no cut edge lies on the circuit")
    out = []
    for j, i in enumerate(idx):
        nxt = idx[(j + 1) % len(idx)]
        span = (nxt - i - 1) % k if len(idx) > 1 else k - 1
        if span == 0:
            continue
        vs = [c.vertices[(i + 1) % k]]
        es = []
        for r in range(span):
            pos = (i + 1 + r) % k
            es.append(c.edges[pos])
            vs.append(c.vertices[(pos + 1) % k])
        out.append(Path(tuple(vs), tuple(es)))
    return out


def check_circuit(g: Multigraph, c: Circuit) -> bool:
    k = len(c.vertices)
    if k < 2 or len(c.edges) != k or len(set(c.vertices)) != k or len(set(c.edges)) != k:
        return False
    for i, e in enumerate(c.edges):
        if set(g.ends[e]) != {c.vertices[i], c.vertices[(i + 1) % k]}:
            return False
    return True


def check_path(g: Multigraph, p: Path) -> bool:
    k = len(p.edges)
    if k < 1 or len(p.vertices) != k + 1 or len(set(p.vertices)) != k + 1:
        return False
    return all(set(g.ends[e]) == {p.vertices[i], p.vertices[i + 1]} for i, e in enumerate(p.edges))


def is_connected(g: Multigraph, removed: Iterable[int] = ()) -> bool:
    if g.n == 0:
        return True
    removed = frozenset(removed)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for e in g.incident(v):
            if e in removed:
                continue
            w = g.other(e, v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def bridges(g: Multigraph) -> frozenset:
    """Cut edges by iterative low-link DFS; parent is skipped by edge id."""
    if g.n == 0:
        return frozenset()
    disc = [-1] * g.n
    low = [0] * g.n
    out = set()
    timer = 0
    disc[0] = low[0] = timer
    timer += 1
    # frames: (vertex, edge used to enter, iterator position)
    stack = [(0, -1, 0)]
    while stack:
        v, pe, i = stack[-1]
        inc = g.incident(v)
        if i < len(inc):
            stack[-1] = (v, pe, i + 1)
            e = inc[i]
            if e == pe:
                continue
            w = g.other(e, v)
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, e, 0))
            else:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] > disc[u]:
                    out.add(pe)
    if any(d == -1 for d in disc):
        raise Disconnected("graph is not connected")
    return frozenset(out)


def parse_edgelist(text: str) -> Multigraph:
    """Parse the ``n m`` / ``a b`` edge-list format (ids in file order)."""
    header = None
    pairs: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(lineno, "negative vertex or edge count")
            header = (a, b, lineno)
            continue
        if not a < b:
            raise ParseError(lineno, f"edge endpoints must satisfy a < b, got {a} {b}")
        if b >= header[0] or a < 0:
            raise ParseError(lineno, f"vertex out of range 0..{header[0] - 1}")
        pairs.append((a, b))
    if header is None:
        raise ParseError(lineno, "missing 'n m' header")
    n, m, hline = header
    if len(pairs) != m:
        raise ParseError(hline, f"header announces {m} edges, found {len(pairs)}")
    return Multigraph.from_edges(n, pairs)


def emit_edgelist(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.ends)
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Multigraph:
    """Parse a graph6 string (simple graphs); edges sorted by (min, max) endpoint."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in s]
    if not data or any(not 0 <= x <= 63 for x in data):
        raise ParseError(1, "invalid graph6 characters")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise ParseError(1, "malformed graph6 size header")
    body = data[pos:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(1, f"graph6 body length {len(body)} does not match n={n}")
    bits = []
    for x in body:
        bits.extend((x >> (5 - k)) & 1 for k in range(6))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    pairs.sort()
    return Multigraph.from_edges(n, pairs)
