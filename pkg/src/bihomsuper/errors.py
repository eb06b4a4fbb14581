"""Exception hierarchy.

Identity violations are never raised by checkers; they are reported.  The
exceptions below signal malformed input or a failed construction
precondition.
"""


class BiHomError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(BiHomError):
    pass


class Singular(BiHomError):
    pass


class InvertibilityRequired(BiHomError):
    """A construction needs alpha^-1 / beta^-1 but a map is singular."""


class VarietyMismatch(BiHomError):
    pass


class ParityViolation(BiHomError):
    pass


class AxiomViolation(BiHomError):
    """Input structure does not satisfy its axioms.

    The failing report is attached as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CertificationFailed(AxiomViolation):
    """A construction produced an output that failed its own checker."""


class OOperatorCheckFailed(AxiomViolation):
    pass


class CheckerFailed(AxiomViolation):
    pass


class WrongWeight(BiHomError):
    pass


class WeightNotZero(BiHomError):
    pass


class MissingModuleProduct(BiHomError):
    pass


class NotAMorphism(BiHomError):
    pass


class ImageNotWellDefined(BiHomError):
    pass


class DSquaredViolation(BiHomError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SearchSpaceTooLarge(BiHomError):
    pass


class ParseError(BiHomError):
    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append("line %d" % line)
        if field is not None:
            where.append("field %s" % field)
        if where:
            message = "%s (%s)" % (message, ", ".join(where))
        super().__init__(message)
        self.line = line
        self.field = field


class InvariantViolation(ParseError):
    pass


class UnknownName(BiHomError):
    pass
