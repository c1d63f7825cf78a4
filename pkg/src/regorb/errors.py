"""Exception types shared across the package."""


class RegorbError(Exception):
    """Base class for all errors raised by this package."""


# -- field / polynomial layer -------------------------------------------------

class NonPrimeModulus(RegorbError):
    """The requested characteristic is not a prime number."""


class ReduciblePolynomial(RegorbError):
    """A defining polynomial failed its irreducibility check."""


class ZeroPolynomial(RegorbError):
    """The zero polynomial was passed where a nonzero one is required."""


class NotInvertible(RegorbError):
    """Multiplicative order or inverse requested for a non-unit."""


# -- matrix group layer -------------------------------------------------------

class SingularGenerator(RegorbError):
    """A generator matrix is not invertible."""


class CapExceeded(RegorbError):
    """Group closure enumeration exceeded the configured element cap."""


class SpaceCapExceeded(RegorbError):
    """The vector space is larger than the configured scan cap."""


# -- lookup tables / calculators ----------------------------------------------

class OutOfRange(RegorbError):
    """Parameters fall outside the validity range of a lookup."""


class DefiningCharacteristic(RegorbError):
    """A cross-characteristic lookup was queried in defining characteristic."""


class ExcludedPair(RegorbError):
    """(n, q) pair explicitly excluded from a degree-threshold statement."""


class ExcludedType(RegorbError):
    """Group type explicitly excluded from a counting statement."""


class ExcludedCase(RegorbError):
    """Case excluded from the fixed-space dimension menu."""


class DivisibilityViolation(RegorbError):
    """Character value incompatible with the (dimension, prime) constraints."""


class InconsistentMenuEntry(UserWarning):
    """A menu entry was discarded because it admits no eigenvalue multiset."""


# -- certificates -------------------------------------------------------------

class MissingEvidence(RegorbError):
    """A class entry lacks the evidence required by the chosen strategy."""


class NeverFails(RegorbError):
    """No dimension up to the configured ceiling yields a certificate."""


# -- input handling -----------------------------------------------------------

class ParseError(RegorbError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FieldMismatch(RegorbError):
    """Matrix entries or scalars do not live in the declared field."""
