"""
Exceptions raised by discrete_wigner.

They derive from the builtin exceptions so callers catching ValueError or
RuntimeError keep working.
"""


class ValidationError(ValueError):
    """
    Raised when an input violates a documented precondition.
    """


class NegativeStateError(ValidationError):
    """
    Raised when a negative state of a given rank does not exist.
    """

    def __init__(self, rank, available):
        super(NegativeStateError, self).__init__(
            "Negative state rank %r requested but only %d negative eigenvalue%s available"
            % (rank, available, "" if available == 1 else "s")
        )
        self.rank = rank
        self.available = available


class ConfigError(ValidationError):
    """
    Raised when a sweep configuration does not follow the schema.
    """

    def __init__(self, message, key=None, line=None, column=None):
        location = []
        if key is not None:
            location.append("key %r" % key)
        if line is not None:
            location.append("line %d, column %d" % (line, column or 0))
        if location:
            message = "%s (%s)" % (message, ", ".join(location))
        super(ConfigError, self).__init__(message)
        self.key = key
        self.line = line
        self.column = column


class KernelViolationError(RuntimeError):
    """
    Raised when a channel kernel or Kraus set leaves its admissible range.
    """

    def __init__(self, message, t=None):
        if t is not None:
            message = "%s at t=%r" % (message, t)
        super(KernelViolationError, self).__init__(message)
        self.t = t
