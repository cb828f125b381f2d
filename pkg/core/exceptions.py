"""Exception hierarchy shared by every toolkit app."""


class ToolkitError(Exception):
    """Root of all toolkit errors."""


class InvalidInput(ToolkitError):
    """The caller handed in data that violates a documented precondition."""


class ShapeError(InvalidInput):
    pass


class InvalidModulus(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class GroupTooLarge(InvalidInput):
    pass


class InvalidPresentation(InvalidInput):
    """A group presentation failed validation; ``violations`` lists every problem."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__('; '.join(str(v) for v in self.violations))


class SpecParseError(InvalidInput):
    """A document could not be parsed. ``location`` points into the document."""

    def __init__(self, message, location=''):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class NontrivialFixedSpace(InvalidInput):
    pass


class InconsistentRankOne(InvalidInput):
    pass


class NotQualifying(InvalidInput):
    pass


class HolonomyZero(InvalidInput):
    pass


class ZigzagViolation(InvalidInput):
    """An arrow sequence is not a zigzag cycle; ``clause`` names the failed condition."""

    def __init__(self, clause, index, message):
        self.clause = clause
        self.index = index
        super().__init__(f"{clause} (index {index}): {message}")


class SearchSpaceTooLarge(ToolkitError):
    """An exhaustive oracle refused to run past its configured cap."""


class NonIntegerResult(ToolkitError):
    """A character inner product did not come out as a nonnegative integer."""


class InternalError(ToolkitError):
    """A mathematically impossible state was reached: an upstream bug or bad input slipped through."""
