"""Exception types shared across packrho."""


class PackrhoError(Exception):
    """Base class for all packrho errors."""


class SizeLimitExceeded(PackrhoError):
    def __init__(self, n, limit, what="exhaustive search"):
        super().__init__(f"{what}: n={n} exceeds limit {limit}")
        self.n = n
        self.limit = limit


class SearchTimeout(PackrhoError):
    """Raised when a search budget runs out.

    ``partial`` holds the best result found so far; it is flagged as a
    lower (or upper) bound only and must not be reported as exact.
    """

    def __init__(self, budget, partial=None):
        super().__init__(f"search exceeded budget of {budget:g}s")
        self.budget = budget
        self.partial = partial


class DisconnectedInput(PackrhoError):
    pass


class WrongDiameter(PackrhoError):
    def __init__(self, expected, actual):
        super().__init__(f"expected diameter {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class BadParameters(PackrhoError, ValueError):
    pass


class UncoloredVertex(PackrhoError, ValueError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has no color")
        self.vertex = vertex


class NotAPackingColoring(PackrhoError):
    def __init__(self, violation):
        super().__init__(f"not a packing coloring: {violation}")
        self.violation = violation


class ParseError(PackrhoError, ValueError):
    def __init__(self, position, reason):
        super().__init__(f"{position}: {reason}")
        self.position = position
        self.reason = reason
