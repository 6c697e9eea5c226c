"""Exception hierarchy shared by the library and the CLI."""


class FuzzyRelationError(Exception):
    """Base class for every error raised by lukfre."""


class RangeError(FuzzyRelationError, ValueError):
    """A membership grade lies outside [0, 1]."""


class DimensionError(FuzzyRelationError, ValueError):
    """Array shapes do not agree."""


class InstanceSyntaxError(FuzzyRelationError, ValueError):
    """An instance document is malformed."""


class InconsistentSystemError(FuzzyRelationError):
    """The equation system has no solution (or an internal guard found a contradiction)."""


class EnumerationCapError(FuzzyRelationError):
    """An exhaustive enumeration would exceed its configured cap."""


class AssignmentError(FuzzyRelationError, ValueError):
    """An assignment vector is partial where a full one is needed, or picks an inadmissible column."""
