"""Exception hierarchy.

Everything raised on purpose by the library derives from BentzooError, so
CLI code can map failures onto its exit-code contract without touching
individual call sites.
"""


class BentzooError(Exception):
    pass


class ParseError(BentzooError):
    """A function/partition file or a spec string could not be parsed."""


class FlavorMismatch(BentzooError):
    """Multivariate object used where a univariate one is required (or vice versa)."""


class VariantMismatch(BentzooError):
    """Star-group variant does not match the object it is combined with."""


class PreconditionError(BentzooError):
    """An operation's precondition was violated.

    `clause` names the violated clause so the CLI can report it verbatim.
    """

    def __init__(self, message, clause=None):
        super().__init__(message)
        self.clause = clause or message


class ZeroInversion(PreconditionError):
    pass


class ZeroC(PreconditionError):
    pass


class ZeroDirection(PreconditionError):
    pass


class LevelMismatch(PreconditionError):
    pass


class NotBent(PreconditionError):
    pass


class NotGbent(PreconditionError):
    pass


class DegenerateForm(PreconditionError):
    pass


class OddN(PreconditionError):
    pass


class KTooSmall(PreconditionError):
    pass


class SizeMismatch(PreconditionError):
    pass


class DependentAlphas(PreconditionError):
    pass


class SpanContainsOne(PreconditionError):
    pass


class BadExponent(PreconditionError):
    pass


class BadAlphas(PreconditionError):
    pass


class HConditionFailed(PreconditionError):
    pass


class ConditionFailed(PreconditionError):
    pass


class WrongPartCount(PreconditionError):
    pass


class NotAPartition(PreconditionError):
    pass


class VerificationFailed(BentzooError):
    """A construction's verified postcondition did not hold."""
