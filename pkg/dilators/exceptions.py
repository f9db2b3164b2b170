from ordinal_lab.exceptions import OrdinalLabError


class DilatorError(OrdinalLabError):
    """Unknown dilator, missing normal data, or a term that violates its invariants."""


class SupportError(DilatorError):
    """An element of an extension does not have full support."""
