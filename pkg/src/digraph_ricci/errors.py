"""Exception hierarchy.

Two roots matter to callers: :class:`ValidationError` for malformed input
(bad graph, bad parameter) and :class:`UndefinedComputation` for requests
that are well-formed but have no defined answer (an infinite distance is
required, the graph is not strongly connected, ...). The CLI maps them to
exit codes 1 and 2.
"""


class DigraphRicciError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(DigraphRicciError, ValueError):
    pass


class UndefinedComputation(DigraphRicciError, ArithmeticError):
    pass


# -- graph construction -----------------------------------------------------


class LoopEdge(ValidationError):
    def __init__(self, u):
        super().__init__(f"loop edge ({u}, {u}) violates simpleness")
        self.u = u


class DuplicateEdge(ValidationError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v}) violates simpleness")
        self.u, self.v = u, v


class VertexOutOfRange(ValidationError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} out of range for graph with {n} vertices")
        self.v, self.n = v, n


class AntiParallelPair(ValidationError):
    def __init__(self, u, v):
        super().__init__(
            f"anti-parallel pair ({u}, {v}), ({v}, {u}); "
            "use the 'split' degree convention to allow it"
        )
        self.u, self.v = u, v


class DegreeConventionViolated(ValidationError):
    def __init__(self, x):
        super().__init__(f"vertex {x}: d != d_in + d_out, walk measure would not sum to 1")
        self.x = x


class InfiniteDistance(UndefinedComputation):
    def __init__(self, x, y):
        super().__init__(f"no directed path from {x} to {y}")
        self.x, self.y = x, y


class NotStronglyConnected(UndefinedComputation):
    def __init__(self, msg="graph is not strongly connected"):
        super().__init__(msg)


# -- measures and transport -------------------------------------------------


class AlphaOutOfRange(ValidationError):
    def __init__(self, alpha):
        super().__init__(f"alpha={alpha} is outside [0, 1]")
        self.alpha = alpha


class MassMismatch(ValidationError):
    def __init__(self, a, b):
        super().__init__(f"total masses differ: {a} vs {b}")


class InfiniteRequiredDistance(UndefinedComputation):
    def __init__(self, u, v):
        super().__init__(f"transport needs d({u}, {v}), which is infinite")
        self.u, self.v = u, v


class LipschitzViolation(ValidationError):
    def __init__(self, u, v, gap):
        super().__init__(f"potential violates f(u) - f(v) <= d(u, v) at ({u}, {v}) by {gap}")
        self.u, self.v = u, v


class SupportTooLarge(ValidationError):
    pass


# -- curvature ----------------------------------------------------------------


class SameVertex(ValidationError):
    def __init__(self, x):
        super().__init__(f"curvature needs two distinct vertices, got ({x}, {x})")


class LadderNotStabilized(UndefinedComputation):
    def __init__(self, k_max, trace):
        super().__init__(f"h(1 - 2^-k) did not repeat before k = {k_max}")
        self.k_max = k_max
        self.trace = trace


class LadderMismatch(DigraphRicciError, AssertionError):
    """The alpha ladder contradicts the exact limit (monotonicity or value)."""


# -- generators ---------------------------------------------------------------


class NTooSmall(ValidationError):
    pass


class CyclicParentMap(ValidationError):
    pass


class AntiParallelOffsets(ValidationError):
    pass


class EmptyOffsets(ValidationError):
    pass
