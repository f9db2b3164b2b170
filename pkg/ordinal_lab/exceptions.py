class OrdinalLabError(Exception):
    """Base class for every error raised by the ordinal_lab apps."""
