"""Shared exception types."""


class IfgError(Exception):
    """Invalid input: bad formula text, bad structure file, bad arguments."""


class ParseError(IfgError):
    """Syntax error in a formula or input file, with position information."""


class GuardExceeded(IfgError):
    """A size or search-space guard was exceeded; the input is too large."""
