"""Exception hierarchy shared by every module."""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class Graph6Error(GraphError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(GraphError, ValueError):
    pass


class DisconnectedGraphError(GraphError, ValueError):
    """Raised when an operation needs a connected graph.

    ``u`` and ``v`` are two vertices with no path between them.
    """

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.u = u
        self.v = v


class DomainError(GraphError, ValueError):
    """Input is outside the domain of the operation (wrong cyclomatic number, ...)."""


class ContractViolation(GraphError, ValueError):
    pass


class NumericalError(GraphError, ArithmeticError):
    pass


class PartitionError(GraphError, ValueError):
    pass


class ParameterError(GraphError, ValueError):
    pass


class ClassificationError(GraphError, RuntimeError):
    """A structural classifier found no match where the theory guarantees one."""


class ResourceGuardError(GraphError, RuntimeError):
    pass
