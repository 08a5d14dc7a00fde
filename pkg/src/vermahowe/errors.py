"""Exception types shared across the package."""


class ModeError(ValueError):
    """An operation was asked of the wrong ground field (quantum vs classical)."""


class SpecializationSingular(ZeroDivisionError):
    """A numeric specialization hit a pole (or a forbidden parameter value)."""


class ParseError(ValueError):
    """Malformed textual input: scalars, braid words, partitions, patterns."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PurityError(ValueError):
    """A braid word is not pure on the partition required by the operation."""


class ConsistencyError(RuntimeError):
    """An exact identity that must hold by construction failed."""
