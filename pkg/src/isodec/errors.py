"""Exception types shared across the package.

The command-line front end maps these onto exit codes: ValidationError -> 2,
PreconditionError -> 3, InternalCheckError -> 4.
"""


class ValidationError(ValueError):
    """Malformed or inconsistent user input: files, CLI parameters, action data."""


class PreconditionError(ValueError):
    """A well-formed request outside an operation's mathematical domain."""


class InternalCheckError(RuntimeError):
    """A built-in cross-check failed.  Never expected on any input; indicates a bug."""
