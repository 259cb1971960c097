from __future__ import annotations


class Error(Exception):
    pass


class GraphError(Error):
    pass


class ParseError(GraphError, ValueError):
    def __init__(self, record: int, text: str, reason: str) -> None:
        super().__init__(record, text, reason)
        self.record = record
        self.text = text
        self.reason = reason

    def __str__(self) -> str:
        return f"record {self.record}: {self.reason}: {self.text!r}"


class EmptyGraph(GraphError, ValueError):
    def __init__(self) -> None:
        super().__init__()

    def __str__(self) -> str:
        return "no edge or vertex records"


class SelfLoop(GraphError, ValueError):
    def __init__(self, vertex: int, record: int | None = None) -> None:
        super().__init__(vertex, record)
        self.vertex = vertex
        self.record = record

    def __str__(self) -> str:
        where = f"record {self.record}: " if self.record is not None else ""
        return f"{where}self-loop at vertex {self.vertex}"


class DuplicateEdge(GraphError, ValueError):
    def __init__(self, edge: tuple[int, int], record: int | None = None) -> None:
        super().__init__(edge, record)
        self.edge = edge
        self.record = record

    def __str__(self) -> str:
        where = f"record {self.record}: " if self.record is not None else ""
        return f"{where}edge {self.edge[0]}-{self.edge[1]} repeats an earlier vertex pair"


class UnknownVertex(GraphError, LookupError):
    def __init__(self, vertex: int) -> None:
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self) -> str:
        return f"vertex {self.vertex} is not in the graph"


class NotPendant(GraphError, ValueError):
    def __init__(self, vertex: int, degree: int) -> None:
        super().__init__(vertex, degree)
        self.vertex = vertex
        self.degree = degree

    def __str__(self) -> str:
        return f"vertex {self.vertex} has degree {self.degree}, pendant vertex expected"


class CommonNeighbor(GraphError, ValueError):
    def __init__(self, edge_index: int, common: tuple[int, ...]) -> None:
        super().__init__(edge_index, common)
        self.edge_index = edge_index
        self.common = common

    def __str__(self) -> str:
        return f"edge #{self.edge_index} can't be contracted, endpoints share neighbours {list(self.common)}"


class IndexOutOfRange(Error, IndexError):
    def __init__(self, index: int, size: int) -> None:
        super().__init__(index, size)
        self.index = index
        self.size = size

    def __str__(self) -> str:
        return f"index {self.index} out of range for size {self.size}"


class DimensionMismatch(Error, ValueError):
    def __init__(self, what: str, expected: int | tuple[int, ...], got: int | tuple[int, ...]) -> None:
        super().__init__(what, expected, got)
        self.what = what
        self.expected = expected
        self.got = got

    def __str__(self) -> str:
        return f"{self.what}: expected {self.expected}, got {self.got}"


class NonFiniteValues(Error, ValueError):
    def __init__(self, what: str) -> None:
        super().__init__(what)
        self.what = what

    def __str__(self) -> str:
        return f"{self.what} contains non-finite values"


class NotSymmetric(Error, ValueError):
    def __init__(self, shape: tuple[int, int]) -> None:
        super().__init__(shape)
        self.shape = shape

    def __str__(self) -> str:
        return f"matrix of shape {self.shape} is not symmetric"


class VerificationFailure(Error, RuntimeError):
    """
    Raised when two independent computations of the same quantity disagree. Never an input problem.
    """

    def __init__(self, check: str, detail: str) -> None:
        super().__init__(check, detail)
        self.check = check
        self.detail = detail

    def __str__(self) -> str:
        return f"{self.check}: {self.detail}"


class InvalidVertexId(GraphError, ValueError):
    def __init__(self, vertex: int) -> None:
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self) -> str:
        return f"vertex id {self.vertex} is negative"


class InvalidComplex(GraphError, ValueError):
    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason

    def __str__(self) -> str:
        return self.reason


class InputError(Error, ValueError):
    """An input file couldn't be read or parsed, ``source`` is its path or ``-`` for standard input."""

    def __init__(self, source: str, reason: str) -> None:
        super().__init__(source, reason)
        self.source = source
        self.reason = reason

    def __str__(self) -> str:
        return f"{self.source}: {self.reason}"


class UsageError(Error, ValueError):
    def __init__(self, message: str, usage: str = "") -> None:
        super().__init__(message, usage)
        self.message = message
        self.usage = usage

    def __str__(self) -> str:
        return self.message
