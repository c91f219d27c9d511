"""Exception types shared across the package.

Two families are kept apart because the CLI maps them to different exit
codes: malformed input (wrong shapes, bad token counts) versus well-formed
input that fails a mathematical precondition.
"""


class ShapeError(ValueError):
    """Input has the wrong shape or cannot be parsed."""


class PreconditionError(ArithmeticError):
    """Input is well formed but violates a mathematical precondition."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NotDecomposableError(PreconditionError):
    """A grade-2 vector is not a wedge of two integer vectors."""

    def __init__(self, reason: str, quadruple=None):
        super().__init__(reason)
        self.quadruple = quadruple


class UnsupportedGradeError(PreconditionError):
    """No inversion algorithm is available for this grade."""
