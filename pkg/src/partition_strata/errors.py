class InvalidArgument(ValueError):
    """Bad input to a public operation."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message, partition=None, n=None):
        super().__init__(message)
        self.partition = partition
        self.n = n
