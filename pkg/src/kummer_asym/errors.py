"""Exception types raised across the package."""


class KummerAsymError(Exception):
    pass


class NonIntegrableLogTerm(KummerAsymError, ArithmeticError):
    """A z^-1 term reached an integration; the result would contain a logarithm."""


class OrderMismatch(KummerAsymError, ValueError):
    pass


class NonzeroConstantTerm(KummerAsymError, ValueError):
    pass


class ShapeMismatch(KummerAsymError, ValueError):
    pass


class DomainError(KummerAsymError, ValueError):
    pass


class PoleAtNonpositiveIntegerB(DomainError):
    pass


class IntegerBUnsupported(DomainError):
    pass


class GammaPole(DomainError):
    pass


class QuadratureNonconvergence(KummerAsymError, ArithmeticError):
    pass
