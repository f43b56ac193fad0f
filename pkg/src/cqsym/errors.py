"""Shared exception types."""


class BoundExceededError(ValueError):
    """An enumeration bound (vertex count, color count, degree cap) was exceeded."""


class NotSymmetricError(ValueError):
    """A quasisymmetric function expected to be symmetric is not.

    Carries a witness: two compositions rearranging to the same partition
    whose coefficients differ.
    """

    def __init__(self, alpha, beta, message=None):
        self.alpha = tuple(alpha)
        self.beta = tuple(beta)
        if message is None:
            message = (
                f"not symmetric: compositions {self.alpha} and {self.beta} "
                "carry different coefficients"
            )
        super().__init__(message)
