from ordinal_lab.exceptions import OrdinalLabError


class ChainError(OrdinalLabError):
    """A sequence is not a strictly descending chain of its order."""


class ChainTransferError(ChainError):
    """A map sends two adjacent chain elements to a pair that is not strictly descending."""

    def __init__(self, message, index=None, upper=None, lower=None):
        super().__init__(message)
        self.index = index
        self.upper = upper
        self.lower = lower


class SearchError(OrdinalLabError):
    """Unknown search strategy or invalid search bounds."""
