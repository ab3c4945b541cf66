"""Exception types shared across the package."""


class TriharmError(Exception):
    """Base class for all package errors."""


class NotAPartition(TriharmError):
    """Parts are not a weakly decreasing sequence of positive integers."""


class NonTriangular(TriharmError):
    """Partition is not cut out by any line."""


class NTooSmall(TriharmError):
    """The requested number of variables n is below the valid range."""


class DegreeTooLarge(TriharmError):
    """Requested degree exceeds the configured expansion bound."""


class NonPolynomial(TriharmError):
    """A rational value expected to reduce to a polynomial did not."""


class NotSymmetric(TriharmError):
    """A coefficient expected to be symmetric under q,t swap is not."""


class NoStabilization(TriharmError):
    """The stable-form search hit its cap before finding a fixed point."""

    def __init__(self, tau, start, cap):
        self.tau = tau
        self.start = start
        self.cap = cap
        msg = "no fixed point for tau=%s scanning n=%d..%d" % (
            list(tau), start, cap)
        super().__init__(msg)
