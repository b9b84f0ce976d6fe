"""Exception hierarchy for schublr.

Every error raised by the library derives from SchublrError, so callers (in
particular the CLI) can distinguish domain errors from genuine bugs.
"""


class SchublrError(Exception):
    """Base class for all schublr errors."""


class MalformedPermutation(SchublrError):
    """A word is not a permutation of 1..n (repeats, gaps, or bad values)."""


class MalformedPartition(SchublrError):
    """Partition text/values could not be parsed into nonnegative integers."""


class InvalidPositions(SchublrError):
    """Transposition positions violate 1 <= a < b."""


class NotACode(SchublrError):
    """A vector cannot be realized as a Lehmer code (negative entries)."""


class NotGrassmannian(SchublrError):
    """Permutation is not k-Grassmannian for the requested k."""


class TooManyParts(SchublrError):
    """Partition has more nonzero parts than the operation permits."""


class BadShape(SchublrError):
    """Parts are not weakly decreasing (e.g. two-row shape with m2 > m1)."""


class KTooSmall(SchublrError):
    """The variable bound k is below the minimum the identity requires."""


class DegreeExceedsVariables(SchublrError):
    """Elementary symmetric polynomial requested with degree above k."""


class ZeroPolynomial(SchublrError):
    """Leading monomial of the zero polynomial is undefined."""


class InternalNonDivisible(SchublrError):
    """A divided difference failed to divide exactly: an implementation bug."""


class NotSchubertSpanned(SchublrError):
    """Schubert-basis reduction failed to make progress on the input."""


class NegativeCoefficient(SchublrError):
    """A structure constant came out negative: an implementation bug."""


class BoundViolation(SchublrError):
    """A theorem bound failed during verification.

    Carries the full ScanReport (with witnesses) as the ``report`` attribute.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class MismatchedChains(SchublrError):
    """Chains compared for equivalence differ in base, bound, or length."""


class NotClassifiable(SchublrError):
    """A chain admits no representation of the indexed-case shape."""


class HypothesisNotMet(SchublrError):
    """A verifier was invoked outside its theorem's hypothesis."""
