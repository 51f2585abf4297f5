"""Exception types shared across the package."""


class ZkThetaError(Exception):
    """Base class for all package-specific errors."""


class ZeroConstantTerm(ZkThetaError):
    """Series inversion requested for a series with vanishing constant term."""


class OutOfTruncation(ZkThetaError):
    """Coefficient requested at or beyond the series truncation."""


class NegativeExponent(ZkThetaError):
    """Differentiation would produce a term with negative exponent."""


class GridViolation(ZkThetaError):
    """A nonzero coefficient landed off the expected exponent grid."""


class IndexOutOfRange(ZkThetaError):
    """Theta-function index outside 0..k."""


class InvalidLength(ZkThetaError):
    """Code/lattice length is not a positive multiple of 8."""


class PrecisionTooSmall(ZkThetaError):
    """Requested truncation too small for the requested coefficients."""


class RangeError(ZkThetaError):
    """Residue outside [0, 2k)."""


class TooLarge(ZkThetaError):
    """Enumeration would exceed the codeword-count guard."""


class SearchExhausted(ZkThetaError):
    """Randomized code search hit its trial budget without success."""


class NoBracket(ZkThetaError):
    """Root bracket for the saddle equation shows no sign change."""


class DomainError(ZkThetaError):
    """Numeric function evaluated outside its domain."""
