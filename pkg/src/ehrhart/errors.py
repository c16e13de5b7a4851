"""Exception types shared across the package."""


class EhrhartError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(EhrhartError):
    """No points were supplied where at least one is required."""


class DimensionMismatch(EhrhartError):
    """A point or vector has the wrong number of coordinates."""


class DimensionDeficient(EhrhartError):
    """The affine hull of the input is smaller than the ambient space."""


class AmbientDimensionCap(EhrhartError):
    """Ambient dimension exceeds the configured cap (exhaustive algorithms
    blow up beyond desk scale; pass a larger max_dim to override)."""


class OriginNotInterior(EhrhartError):
    """The origin is not strictly interior, so the polar dual is unbounded."""


class ZeroDilation(EhrhartError):
    """Dilation by zero does not yield a polytope."""


class BudgetExceeded(EhrhartError):
    """The bounding box of the requested enumeration is too large."""


class DualNotLattice(EhrhartError):
    """The polar dual is not a lattice polytope, violating a precondition."""


class NonIntegerNormal(EhrhartError):
    """A half-space normal was required to be integral but is not."""


class NonIntegerDelta(EhrhartError):
    """A delta coefficient came out non-integral.  The division-free
    forward substitution cannot produce this; seeing it means a bug."""


class GenerationExhausted(EhrhartError):
    """Rejection sampling failed to produce a valid instance in the
    allotted number of attempts."""


class InternalInconsistency(EhrhartError):
    """Two independent computations of the same quantity disagree."""


class ParseError(EhrhartError):
    """Input text does not conform to the polytope JSON format."""
