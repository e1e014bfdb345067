"""Exception types shared across the package.

Everything derives from ValueError so callers who do not care about the
exact failure mode can catch one base class.  Division by zero and bad
element indices reuse the builtin ZeroDivisionError and IndexError.
"""


class NotPrimeError(ValueError):
    """Field characteristic is not a prime number."""


class ReducibleError(ValueError):
    """Supplied modulus polynomial factors over the prime field."""


class DegreeMismatchError(ValueError):
    """Modulus degree or shape does not match the requested extension."""


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


class NotADivisorError(ValueError):
    """Requested subfield degree does not divide the extension degree."""


class OrderDoesNotDivideError(ValueError):
    """Requested subgroup order does not divide the group order."""


class NotSquareError(ValueError):
    """Determinant requested for a non-square matrix."""


class HookOutOfRangeError(ValueError):
    """Hook position falls outside the valid row range."""


class InvalidSpecError(ValueError):
    """Code spec violates a structural invariant."""


class LengthMismatchError(ValueError):
    """Vector length does not match the expected dimension."""


class WrongHookTwistError(ValueError):
    """Closed-form check applied to a spec outside its hook/twist range."""


class SizeMismatchError(ValueError):
    """Isometry size does not match the code length."""


class DegenerateBCError(ValueError):
    """The twist point pair is degenerate for the requested construction.

    Raised when b = c where the recipe needs them distinct, or when every
    distinct twist value also appears among the evaluation points while a
    single (k-1)-subset of points can hold them all; in that case the
    column minor through the twist column is singular and the code cannot
    be MDS.
    """


class MembershipViolationError(ValueError):
    """A construction input lies outside its required subfield or group."""


class UnsupportedExtendedGeneralHError(ValueError):
    """Extended code requested for a hook with no closed-form guarantee."""


class ParseError(ValueError):
    """Malformed spec or matrix text."""


class MethodDisagreementError(RuntimeError):
    """Two independent verification methods returned different verdicts."""
