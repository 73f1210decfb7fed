"""Domain error hierarchy.

Every error an operation can raise on mathematically invalid input derives
from :class:`DomainError`, so the CLI can map the whole family to exit
status 1 with a machine-readable payload.  Usage errors (bad flags, bad
syntax handled by argparse) are deliberately *not* part of this hierarchy.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""

    code = "domain-error"


class ParseError(DomainError):
    """Input text does not parse as a polynomial or rational."""

    code = "parse-error"


class NonzeroRemainder(DomainError):
    """Exact polynomial division left a remainder."""

    code = "nonzero-remainder"


class ZeroAtOne(DomainError):
    """Polynomial vanishes at 1 and cannot be normalized to unit mass."""

    code = "zero-at-one"


class EmptySupport(DomainError):
    """A measure needs at least one support point."""

    code = "empty-support"


class ZeroPolynomial(DomainError):
    """Operation undefined on the zero polynomial."""

    code = "zero-polynomial"


class PoleAtGamma(DomainError):
    """Tilt parameter is a root of the polynomial being tilted."""

    code = "pole-at-gamma"


class ZeroTotalMass(DomainError):
    """Tilted signed measure has total mass zero; cannot renormalize."""

    code = "zero-total-mass"


class NotInM(DomainError):
    """Polynomial has a root on the positive axis (or no positive
    normalization), so no positivity certificate can exist."""

    code = "not-in-m"


class CapExceeded(DomainError):
    """Certificate search hit the caller-supplied exponent cap."""

    code = "cap-exceeded"

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"no certificate with exponent <= {cap}")


class PreconditionViolated(DomainError):
    """Caller broke a documented operation precondition."""

    code = "precondition-violated"


class CapTooSmall(DomainError):
    """No witness exists on the requested denominator grid."""

    code = "cap-too-small"


class DegreeCapExceeded(DomainError):
    """Input degree exceeds the enumeration cap."""

    code = "degree-cap-exceeded"


class PrecisionNotReached(DomainError):
    """Numeric root refinement stalled above the requested tolerance."""

    code = "precision-not-reached"


class NotWellDefined(DomainError):
    """Map extension gave different values along different routes."""

    code = "not-well-defined"


class NotPolynomial(DomainError):
    """Map extension produced a genuine rational function."""

    code = "not-polynomial"


class MissingPairs(DomainError):
    """Sample table has no doubling or tripling pair to test."""

    code = "missing-pairs"


class OrbitCapExceeded(DomainError):
    """Quadratic orbit iteration exceeded the safety cap."""

    code = "orbit-cap-exceeded"


class SearchCapExceeded(DomainError):
    """Exponent search window cap reached without a valid approximation."""

    code = "search-cap-exceeded"

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"no approximation within window cap {cap}")


class OddCoefficient(DomainError):
    """Polynomial is not even, so the index-halving map is undefined."""

    code = "odd-coefficient"


class MissingGenerator(DomainError):
    """Candidate-map table does not determine the required polynomial."""

    code = "missing-generator"
