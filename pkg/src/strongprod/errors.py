"""Exception hierarchy.

Every error carries a stable ``code`` (the class name) and the process exit
status the command line maps it to: 2 for malformed input, 3 for a violated
precondition, 4 for a failed certification.
"""

from __future__ import annotations


class StrongProdError(Exception):
    exit_code = 3

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self), "exit_code": self.exit_code}


# --- preconditions -----------------------------------------------------------

class InvalidVertex(StrongProdError, IndexError):
    pass


class NotConnected(StrongProdError):
    pass


class NotBipartite(StrongProdError):
    def __init__(self, message: str, cycle: list[int]):
        super().__init__(message)
        self.cycle = cycle


class NotBridgeless(StrongProdError):
    def __init__(self, message: str, bridge: tuple[int, int] | None = None):
        super().__init__(message)
        self.bridge = bridge


class NotATree(StrongProdError):
    pass


class EmptyFactor(StrongProdError):
    pass


class FactorTooSmall(StrongProdError):
    pass


class WrongEdgeKind(StrongProdError):
    pass


class InvalidCycleLength(StrongProdError):
    pass


class TooLarge(StrongProdError):
    pass


# --- malformed input ---------------------------------------------------------

class ParseError(StrongProdError):
    exit_code = 2

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["line"] = self.line
        d["column"] = self.column
        return d


class InvalidEdge(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


# --- certification -----------------------------------------------------------

class CertificationFailed(StrongProdError):
    exit_code = 4


class BoundViolated(CertificationFailed):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class RuleConflict(CertificationFailed):
    """More than one of the leaf/root rules matched the same square."""

    def __init__(self, message: str, square=None, rules=()):
        super().__init__(message)
        self.square = square
        self.rules = tuple(rules)
