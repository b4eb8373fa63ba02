"""Exception types shared across the package.

Exit-code mapping used by the CLI: ConfigError -> 2, NumericalAbort -> 3,
VerificationFailure -> 4.
"""


class ConfigError(ValueError):
    """Invalid configuration (bad value, out-of-domain position, schema violation)."""


class NumericalAbort(RuntimeError):
    """Solver produced a non-finite or non-admissible state; carries step context."""

    def __init__(self, message, step=None, field=None):
        if step is not None:
            message = f"step {step}: {message}"
        if field is not None:
            message = f"{message} (field: {field})"
        super().__init__(message)
        self.step = step
        self.field = field


class VerificationFailure(RuntimeError):
    """One or more built-in verification checks failed."""
