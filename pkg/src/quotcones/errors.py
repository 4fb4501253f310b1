"""Exception types shared across the package."""


class QuotconesError(Exception):
    """Base class for all library errors."""


class FieldMismatch(QuotconesError):
    """Scalars from two different ground fields were combined."""


class DegenerateInput(QuotconesError):
    """An operation received input outside its mathematical domain."""


class ShapeError(QuotconesError):
    """Matrix or vector dimensions are inconsistent with the declared grading."""


class ParamError(QuotconesError):
    """Quot-scheme parameters violate the standing hypotheses."""


class UnsupportedRegime(QuotconesError):
    """The requested computation is undefined in this parameter regime."""


class DegenerateCone(QuotconesError):
    """Cone rays are parallel or zero."""


class NotUnital(QuotconesError):
    """Truncated class inversion needs degree-0 part equal to 1."""


class NotInjective(QuotconesError):
    """The matrix is not generically injective."""


class NotSurjective(QuotconesError):
    """The matrix is not generically surjective."""


class InternalInconsistency(QuotconesError):
    """Recovered data violates an invariant; signals a bug, never expected."""


class GenericityFailure(QuotconesError):
    """Random sampling failed to reach a generic configuration within the retry budget."""


class DirectrixUndefined(QuotconesError):
    """The splitting is not generic enough for a well-defined directrix."""


class Underdetermined(QuotconesError):
    """Linear system does not pin down a unique divisor class."""


class Inconsistent(QuotconesError):
    """Overdetermined linear system has no solution."""


class NonIntegralSolution(QuotconesError):
    """Exact solution exists but is not integral where integrality was required."""
