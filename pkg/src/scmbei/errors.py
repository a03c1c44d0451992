"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """An argument violates an operation's precondition (bad labels, disconnected graph, ...)."""


class NotApplicable(ValueError):
    """The hypotheses of a rule or formula do not hold for this input."""


class ResourceLimit(RuntimeError):
    """A configured budget (cutset size, variable count, basis size, coefficient size) was exceeded."""
