"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class InjColorError(Exception):
    """Base class for all package errors."""


class GraphError(InjColorError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, vertex: int, line: int | None = None):
        self.vertex = vertex
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"self-loop at vertex {vertex}{where}")


class DuplicateEdge(GraphError):
    def __init__(self, u: int, v: int, line: int | None = None):
        self.edge = (u, v)
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate edge {u}-{v}{where}")


class ParseError(GraphError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class UncoloredVertex(InjColorError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is uncolored")


class MalformedComponent(InjColorError):
    pass


class EmptyGraph(InjColorError):
    pass


class TooLarge(InjColorError):
    pass


class Disconnected(InjColorError):
    pass


class PreconditionViolated(InjColorError):
    def __init__(self, vertex: int | None, reason: str = ""):
        self.vertex = vertex
        super().__init__(f"precondition violated at vertex {vertex}: {reason}")


class FallbackExceeded(InjColorError):
    """The exhaustive list-coloring path refused an instance above its size cap."""


class CaseMismatch(InjColorError):
    pass


class ExtensionImpossible(InjColorError):
    """A partial coloring could not be extended; a bug or a violated hypothesis."""


class StructureViolation(InjColorError):
    """A structural claim used by the K-subgraph reduction does not hold."""


class ConfigPresent(InjColorError):
    """A bounded reducible configuration exists where none was expected."""

    def __init__(self, config, message: str | None = None):
        self.config = config
        super().__init__(message or f"reducible configuration present: {config}")


class BoundedConfigPresent(ConfigPresent):
    pass


class DeficitFound(InjColorError):
    def __init__(self, vertex: int, charge, bound):
        self.vertex = vertex
        self.charge = charge
        self.bound = bound
        super().__init__(f"vertex {vertex} ends with charge {charge} < {bound}")


class HypothesisViolated(InjColorError):
    def __init__(self, mad, bound, component=None):
        self.mad = mad
        self.bound = bound
        self.component = component
        super().__init__(f"mad = {mad} is not < {bound}")


class Stalled(InjColorError):
    pass


class GenerationFailed(InjColorError):
    pass


class BadParameter(InjColorError, ValueError):
    pass
