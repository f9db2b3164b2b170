from ordinal_lab.exceptions import OrdinalLabError


class EmbeddingError(OrdinalLabError):
    """Values of an embedding are out of range or not strictly increasing."""


class OrderMembershipError(OrdinalLabError):
    """An element does not belong to the coded order it was used with."""


class OrderSpecError(OrdinalLabError):
    """An order description such as ``pow2(ordinal(w))`` could not be built."""


class SequenceError(OrdinalLabError):
    """A sequence meant as an element of 2^X is not strictly descending in X."""
