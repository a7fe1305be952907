"""Exception types shared across the package, mapped to CLI exit codes."""


class InvalidInstanceError(ValueError):
    """Instance document is syntactically or semantically invalid."""


class InfeasibleInstanceError(Exception):
    """Some element cannot be served by any resource. CLI exit code 3."""


class SizeCapError(Exception):
    """Input exceeds the exhaustive-search size cap. CLI exit code 5."""


class ContractViolationError(Exception):
    """A runtime check of an oracle or learner contract failed.

    Signals a bug in a problem adapter or in the calling code, never bad
    user input.
    """


class PropertyFailureError(Exception):
    """A verify suite failed. CLI exit code 4."""
