"""Exception hierarchy for coronares.

Every error raised by the library derives from CoronaresError so callers
(CLI, HTTP service) can map the whole family to one failure path.
"""


class CoronaresError(Exception):
    """Base class for all coronares errors."""


class InvalidVertex(CoronaresError):
    """An edge endpoint lies outside 1..n."""


class LoopEdge(CoronaresError):
    """An edge joins a vertex to itself."""


class EmptyGraph(CoronaresError):
    """A graph with zero vertices was requested."""


class TooSmall(CoronaresError):
    """The vertex count is below the minimum for the requested family."""


class DimMismatch(CoronaresError):
    """Matrix dimensions are not conformable for the requested operation."""


class Singular(CoronaresError):
    """Exact inversion was attempted on a singular matrix."""


class KernelMismatch(CoronaresError):
    """The rank-one shift is singular: the kernel is not the all-ones line."""


class NotConnected(CoronaresError):
    """A connected graph is required."""


class IsolatedVertex(CoronaresError):
    """The host graph has a vertex of degree zero."""


class NotRegular(CoronaresError):
    """Strict mode demanded a regular host graph."""


class ParseError(CoronaresError):
    """A graph spec or DOT document failed to parse.

    `position` is the character offset in the normalized input where
    parsing stopped.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position
