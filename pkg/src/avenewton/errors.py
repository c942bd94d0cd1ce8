import numpy as np


class AveError(Exception):
    """Base class for errors raised by avenewton."""


class SingularMatrix(AveError, np.linalg.LinAlgError):
    pass


class SingularJacobian(SingularMatrix):
    """A - diag(d) is singular for the sign pattern ``d``."""

    def __init__(self, pattern, message=None):
        self.pattern = np.asarray(pattern, dtype=np.int8)
        if message is None:
            message = f"A - diag(d) is singular for d = {self.pattern.tolist()}"
        super().__init__(message)


class NoConvergence(AveError):
    pass


class NotApplicable(AveError):
    pass


class TooLarge(AveError):
    pass


class InvalidKind(AveError, ValueError):
    pass
