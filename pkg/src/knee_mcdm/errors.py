"""Exception and warning types shared across the package."""


class KneeMCDMError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KneeMCDMError):
    """Input is not a valid front file (bad syntax, wrong column count)."""


class NonFiniteValue(KneeMCDMError):
    """An objective value is NaN or infinite."""

    def __init__(self, solution_id: str, column: str):
        super().__init__(
            f"non-finite objective value for id={solution_id!r} in column {column!r}"
        )
        self.solution_id = solution_id
        self.column = column


class DuplicateId(KneeMCDMError):
    """Two solutions in one front share an id."""

    def __init__(self, solution_id: str):
        super().__init__(f"duplicate solution id {solution_id!r}")
        self.solution_id = solution_id


class EmptyFront(KneeMCDMError):
    """The front contains no solutions."""


class UnknownId(KneeMCDMError):
    """A solution id does not exist in the front."""

    def __init__(self, solution_id: str):
        super().__init__(f"unknown solution id {solution_id!r}")
        self.solution_id = solution_id


class DegenerateDimension(KneeMCDMError):
    """Requested a per-dimension quantity on a zero-spread dimension."""


class AllDimensionsDegenerate(KneeMCDMError):
    """Every objective has zero spread: all solutions coincide, selection is vacuous."""


class EquivalenceViolation(KneeMCDMError):
    """The selection rules disagreed on the winner class.

    Never expected on valid inputs; carries the differing winner sets so the
    disagreement can be inspected.
    """

    def __init__(self, message: str, winners: dict | None = None):
        super().__init__(message)
        self.winners = dict(winners or {})


class InvalidSpec(KneeMCDMError):
    """Front generator parameters are out of range."""


class NoExpectation(KneeMCDMError):
    """No qualitative selection outcome is defined for this front family."""


class DegenerateSpreadWarning(UserWarning):
    """A zero-spread dimension was excluded from scoring."""
