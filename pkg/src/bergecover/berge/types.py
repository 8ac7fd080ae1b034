from __future__ import annotations

import enum
from dataclasses import dataclass

from ..errors import AssumptionViolated
from ..graphcore import Circuit, Multigraph, emit_edgelist


class Side(enum.Enum):
    CONTAINS_M3 = "ContainsM3"
    CONTAINS_M1 = "ContainsM1"


@dataclass(frozen=True)
class TwoPmResult:
    m4: frozenset
    m5: frozenset
    side: Side
    c: Circuit
    c_prime: Circuit | None = None


@dataclass(frozen=True)
class Cover:
    matchings: tuple[frozenset, ...]
    provenance_note: str = ""

    @property
    def order(self) -> int:
        return len(set(self.matchings))

    def to_text(self) -> str:
        lines = [f"cover {len(self.matchings)}"]
        lines.extend(" ".join(str(e) for e in sorted(m)) for m in self.matchings)
        return "\n".join(lines) + "\n"


def assumption(ok: bool, g: Multigraph, detail: str) -> None:
    """Raise AssumptionViolated carrying ``g`` when an internal claim fails."""
    if not ok:
        raise AssumptionViolated(detail, emit_edgelist(g))


def parse_cover(text: str) -> list[frozenset]:
    """Parse the ``cover k`` format: header, then one sorted id list per line."""
    from ..errors import ParseError

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(1, "empty cover text")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "cover" or not head[1].isdigit():
        raise ParseError(1, f"expected 'cover k', got {lines[0]!r}")
    k = int(head[1])
    if len(lines) - 1 != k:
        raise ParseError(1, f"header announces {k} matchings, found {len(lines) - 1}")
    out = []
    for i, line in enumerate(lines[1:], start=2):
        try:
            out.append(frozenset(int(tok) for tok in line.split()))
        except ValueError:
            raise ParseError(i, f"non-integer edge id in {line!r}") from None
    return out
