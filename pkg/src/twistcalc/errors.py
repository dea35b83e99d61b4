"""Exception hierarchy shared by every twistcalc module."""


class TwistCalcError(Exception):
    """Base class for all errors raised by this package."""


class ArityError(TwistCalcError):
    """Mismatched strand counts, variable counts, or an invalid arity."""


class DomainError(TwistCalcError):
    """Operation applied outside its mathematical domain."""


class DivisibilityError(TwistCalcError):
    """An exact division in the Laurent ring failed to be exact."""


class TorresViolationError(DivisibilityError):
    """Input polynomial inconsistent with the claimed linking data."""


class InvalidSurgeryError(TwistCalcError):
    """Surgery basis or gluing matrix is not unimodular."""


class MeridianSlopeError(TwistCalcError):
    """The meridional slope was supplied where a finite slope is required."""


class NotApplicableError(TwistCalcError):
    """The requested law does not cover the supplied family parameters."""


class EvidenceContradictionError(TwistCalcError):
    """Caller-asserted facts are mutually inconsistent."""


class InvalidCableError(TwistCalcError):
    """Cable parameters are not coprime or out of range."""


class InvalidParameterError(TwistCalcError):
    """Parameters outside the range in which an operation is defined."""


class ParseError(TwistCalcError):
    """Malformed textual input; carries a position when available."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
