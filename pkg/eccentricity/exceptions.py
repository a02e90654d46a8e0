class MespError(Exception):
    """Base class of every error raised by the eccentricity tooling."""


class GraphValidationError(MespError, ValueError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class PreconditionError(MespError, ValueError):
    pass


class CapExceededError(MespError):
    """An enumeration produced more paths than its cap allows."""

    def __init__(self, cap, count, pair=None):
        where = f" for pair {pair}" if pair is not None else ""
        super().__init__(f"more than {cap} shortest paths{where} (stopped at {count}); raise the cap")
        self.cap = cap
        self.count = count
        self.pair = pair


class InstanceTooLargeError(MespError):
    def __init__(self, n, limit):
        super().__init__(f"exact computation refused: {n} vertices exceeds the limit of {limit}")
        self.n = n
        self.limit = limit
