"""Exception classes. Each carries the CLI exit code for its error class."""


class HdxError(Exception):
    exit_code = 1


class ParseError(HdxError):
    """Malformed input file or inline generator spec."""

    exit_code = 2


class NotPure(HdxError):
    """Maximal faces of differing dimension."""

    exit_code = 2


class BadDistribution(HdxError):
    """Top-face weights not positive or not summing to one."""

    exit_code = 2


class FaceNotInComplex(HdxError):
    exit_code = 2


class OutOfRange(HdxError):
    """Level or dimension outside the valid range for the operation."""

    exit_code = 2


class DimensionMismatch(HdxError):
    exit_code = 2


class WrongDimension(HdxError):
    """Operation requires a complex of a specific dimension."""

    exit_code = 2


class BadStart(HdxError):
    """Walk started from a face not in the relevant level."""

    exit_code = 2


class BadParams(HdxError):
    exit_code = 2


class TooLarge(HdxError):
    """Instance exceeds an enumeration or matrix-size cap."""

    exit_code = 3


class PropertyViolated(HdxError):
    """A verified property failed on the instance."""

    exit_code = 4


class NoExchange(PropertyViolated):
    """Graph does not satisfy the exchange property."""


class NotConnected(PropertyViolated):
    """Operation requires a connected graph."""


class DisconnectedLink(PropertyViolated):
    """A link's 1-skeleton is disconnected."""


class NumericalFailure(HdxError):
    """Eigensolver failed to converge or produced an invalid spectrum."""

    exit_code = 5
