"""Exception types raised by the kernel."""


class PermError(Exception):
    """Base class for all errors raised by permbialg."""


class DimensionMismatch(PermError, ValueError):
    pass


class Singular(PermError, ArithmeticError):
    pass


class Degenerate(Singular):
    """A bilinear form has no inverse sharp map."""


class NotFactorizable(PermError):
    pass


class NotQuasiTriangular(PermError):
    pass


class NotABialgebra(PermError):
    pass


class NotARepresentation(PermError):
    pass


class NotSkew(PermError):
    pass


class NotInvariant(PermError):
    pass


class NotRotaBaxter(PermError):
    pass


class NotQuadratic(PermError):
    pass


class NotQuadraticRB(PermError):
    pass


class ZeroWeight(PermError, ValueError):
    pass


class UnknownName(PermError, KeyError):
    pass


class ParseError(PermError, ValueError):
    pass
