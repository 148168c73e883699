"""Exception types shared across the package."""

from __future__ import annotations


class IfnValidationError(ValueError):
    """An input does not form a valid intuitionistic fuzzy number."""


class KnotOrderError(IfnValidationError):
    """Knots are not monotone nondecreasing or fall outside [0, 1]."""


class LegConditionError(IfnValidationError):
    """Neither admissible arrangement of the two trapezoids holds."""


class PointwiseConsistencyError(LegConditionError):
    """The trapezoids touch at full height with degree sum above one.

    Subclasses LegConditionError: both checks guard the same structural
    requirement (nonmembership below the complement of membership) and
    callers that catch the broader type must catch this one too.
    """


class DomainError(ValueError):
    """A cut level lies outside its admissible range."""


class KindMismatchError(ValueError):
    """A scoring method was applied to an incompatible value shape."""


class CertificateInapplicableError(ValueError):
    """The equality certificate's hypotheses do not hold for this sequence."""


class ParseError(ValueError):
    """A document or literal could not be parsed."""


class CellValidationError(IfnValidationError):
    """A decision-matrix cell failed validation; carries its coordinates."""

    def __init__(self, alternative: str, attribute: str, reason: str):
        self.alternative = alternative
        self.attribute = attribute
        super().__init__(f"cell ({alternative}, {attribute}): {reason}")


class WeightSumError(ValueError):
    """Attribute weights do not sum to one."""


class DimensionError(ValueError):
    """A matrix argument is not square or does not match its labels."""


class IfnValidationWarning(UserWarning):
    """Raised-as-warning form of a validation failure in non-strict mode."""
