"""Exception hierarchy.  Every library failure is a KummerError; the CLI maps these to exit code 1."""


class KummerError(Exception):
    """Base class for domain errors raised by this package."""


class FieldMismatch(KummerError, TypeError):
    """Operands come from different fields."""


class FieldDivisionByZero(KummerError, ZeroDivisionError):
    """Inverse of zero requested."""


class DegenerateSurface(KummerError):
    """Theta constants do not define a usable fast Kummer surface."""


class NodeProximity(KummerError):
    """A map needed the inverse of a point with a zero coordinate."""


class InvalidKernel(KummerError):
    """Kernel generators do not define a (3,3)-subgroup."""


class DegenerateImage(KummerError):
    """An isogeny evaluation returned the all-zero tuple."""


class ChainInvariantViolation(KummerError):
    """Internal bookkeeping of the differential addition chain went wrong."""


class ScalarOutOfRange(KummerError, ValueError):
    """A scalar lies outside the range a fixed-length chain can reach."""


class FieldExtensionRequired(KummerError):
    """A square root needed for scaling does not exist in F_{p^2}."""


class ParamsError(KummerError):
    """Malformed or inconsistent parameter file."""


class MessageLengthError(KummerError, ValueError):
    """Hash input has the wrong number of bits."""
