"""Exception hierarchy shared by the library and the CLI.

The CLI maps each family to an exit code: parse errors to 2, precondition
violations to 3, internal verification failures to 4.
"""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""

    stage: str | None = None


class ParseError(AlgebraError, ValueError):
    """Malformed element or matrix text."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NonIntegerConstantError(ParseError):
    """A Henriksen element whose constant term is not an integer."""


class PreconditionError(AlgebraError, ValueError):
    """An operation was called outside its domain."""


class RingMismatchError(PreconditionError):
    pass


class NotDivisibleError(PreconditionError):
    pass


class NotCoprimeError(PreconditionError):
    pass


class InternalVerificationError(AlgebraError, RuntimeError):
    """A computed object failed its own certificate check.

    On the three supported rings these are unreachable; they exist so that a
    violated ring assumption is loud instead of silently producing garbage.
    """


class ShiftNotFoundError(InternalVerificationError):
    pass


class StabilizationError(InternalVerificationError):
    pass


class SweepBoundError(InternalVerificationError):
    pass


class CertificationError(InternalVerificationError):
    pass


def with_stage(err: AlgebraError, stage: str) -> AlgebraError:
    """Return a copy of ``err`` whose message is prefixed by ``stage``."""
    if err.stage is not None:
        return err
    labelled = type(err).__new__(type(err))
    labelled.args = (f"[{stage}] {err}",)
    labelled.__dict__.update(err.__dict__)
    labelled.stage = stage
    return labelled
