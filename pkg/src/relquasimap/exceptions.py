class InputError(ValueError):
    """Arguments outside an operation's domain (mismatched n, bad edges, ...)."""


class VerificationError(RuntimeError):
    """Two computation routes disagree, or a positivity check failed.

    `counterexample` carries a JSON-friendly description of the first failure.
    """

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
