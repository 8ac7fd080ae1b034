"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BergeError(Exception):
    """Base class for all errors raised by this package."""


class DegreeError(BergeError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")
        self.vertex = vertex
        self.degree = degree


class NotTwoRegular(BergeError):
    def __init__(self, vertex: int, degree: int | None = None):
        msg = f"vertex {vertex} is not incident to exactly two edges of the set"
        if degree is not None:
            msg += f" (found {degree})"
        super().__init__(msg)
        self.vertex = vertex
        self.degree = degree


class Disconnected(BergeError):
    pass


class ParseError(BergeError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class NoMatching(BergeError):
    pass


class NoPerfectMatching(NoMatching):
    pass


class OddComponent(BergeError):
    pass


class EvenCircuit(BergeError):
    pass


class VertexNotOnCircuit(BergeError):
    pass


class NotCubicAux(BergeError):
    def __init__(self, vertex: int, degree: int, context: str = ""):
        msg = f"auxiliary graph vertex {vertex} has degree {degree}"
        if context:
            msg += f"; {context}"
        super().__init__(msg)
        self.vertex = vertex
        self.degree = degree
        self.context = context


class NotSurrogate(BergeError):
    def __init__(self, edge_id: int):
        super().__init__(f"edge {edge_id} is not a surrogate edge")
        self.edge_id = edge_id


class PreconditionViolated(BergeError):
    def __init__(self, clause, detail: str = ""):
        super().__init__(f"precondition {clause} violated" + (f": {detail}" if detail else ""))
        self.clause = clause
        self.detail = detail


class AssumptionViolated(BergeError):
    """An intermediate claim of a construction failed on a concrete input.

    ``graph_text`` carries the offending graph in edge-list format so the
    instance can be replayed.
    """

    def __init__(self, detail: str, graph_text: str | None = None):
        msg = detail
        if graph_text is not None:
            msg += "\n--- counterexample ---\n" + graph_text
        super().__init__(msg)
        self.detail = detail
        self.graph_text = graph_text


class NoHamiltonianCircuit(BergeError):
    def __init__(self, vertex: int):
        super().__init__(f"G - {vertex} has no hamiltonian circuit")
        self.vertex = vertex


class Unsupported(BergeError):
    pass


class BadParams(BergeError):
    pass
