"""Error types shared across the package.

Every mathematically meaningful failure is one of these, so callers (and
the CLI) can tell a degenerate input apart from a usage mistake.
"""


class OpolyError(Exception):
    """Base class for all mathematical failures raised by this package."""


class ZeroFirstMoment(OpolyError):
    """An operation that divides by the first moment met u_0 = 0."""


class TruncationExhausted(OpolyError):
    """A result would need moments (or matrix entries) beyond the stored window."""


class NotQuasiDefinite(OpolyError):
    """A leading principal minor / norm vanished at the reported level.

    `level` is the first k at which the obstruction appears; `guard`
    optionally names the quantity that vanished.
    """

    def __init__(self, level, guard=None, message=None):
        self.level = level
        self.guard = guard
        if message is None:
            message = "quasi-definiteness fails at level %d" % level
            if guard:
                message += " (guard: %s)" % guard
        super().__init__(message)


class ZeroPivot(OpolyError):
    """An LU/UL elimination pivot vanished at the reported index."""

    def __init__(self, index, message=None):
        self.index = index
        if message is None:
            message = "zero pivot at index %d" % index
        super().__init__(message)


class DegenerateParameter(OpolyError):
    """A free parameter takes a value for which the transformation is undefined."""
