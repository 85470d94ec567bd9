class BetaNumerationError(Exception):
    """Base of every domain error; `code` is what the command line reports."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ParseError(BetaNumerationError):
    pass


class ReduciblePolynomial(BetaNumerationError):
    pass


class NoRootOutsideUnitDisk(BetaNumerationError):
    pass


class AmbiguousRootHint(BetaNumerationError):
    pass


class DivisionByZero(BetaNumerationError, ZeroDivisionError):
    pass


class FieldMismatch(BetaNumerationError):
    pass


class NotRealBase(BetaNumerationError):
    pass


class NotNegativeRealBase(BetaNumerationError):
    pass


class CoverageFails(BetaNumerationError):
    pass


class NotRepresentable(BetaNumerationError):
    pass


class NoRepeatWithinBudget(BetaNumerationError):
    pass


class ZeroRepresentation(BetaNumerationError):
    pass


class ComponentCountExceedsDegree(BetaNumerationError):
    pass


class InvalidAlphabet(BetaNumerationError):
    pass


class GaussianDigitsUnavailable(BetaNumerationError):
    pass


class DigitOutOfRange(BetaNumerationError):
    pass


class ValueNotPreserved(BetaNumerationError):
    pass


class NormalizerRangeExceeded(BetaNumerationError):
    pass


class NotCoprime(BetaNumerationError):
    pass


class HypothesisViolated(BetaNumerationError):
    pass
