"""Exceptions shared across the package."""


class InputError(ValueError):
    """Malformed or non-conforming input: bad dimensions, bad JSON, bad names."""


class PreconditionError(ValueError):
    """A mathematical precondition failed; the message names a witness."""
