"""Exception hierarchy shared by every lensfib module.

Each domain error carries its class name as a stable machine-readable code;
the CLI prints that code on the first output line and exits with status 1.
"""


class LensfibError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# braid
class MalformedToken(LensfibError, ValueError):
    pass


class GeneratorOutOfRange(LensfibError, ValueError):
    pass


class StrandMismatch(LensfibError, ValueError):
    pass


class NotTwoStrands(LensfibError, ValueError):
    pass


# contfrac
class DivisionByZeroInTail(LensfibError, ZeroDivisionError):
    pass


class NotCoprime(LensfibError, ValueError):
    pass


class OutOfRange(LensfibError, ValueError):
    pass


# kirby
class NotRemovable(LensfibError, ValueError):
    pass


class IndexOutOfRange(LensfibError, IndexError):
    pass


class NotUnimodalFraming(LensfibError, ValueError):
    pass


class UnsupportedShape(LensfibError, ValueError):
    pass


# openbook
class UnknownCurve(LensfibError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class NotAnnulus(LensfibError, ValueError):
    pass


class NonCoreCurve(LensfibError, ValueError):
    pass


# lenslift
class DegenerateCoefficient(LensfibError, ZeroDivisionError):
    pass


class NonCanonicalParams(LensfibError, ValueError):
    pass


# contact
class NumericalBreakdown(LensfibError, ArithmeticError):
    pass


# cli
class TooManyStrands(LensfibError, ValueError):
    pass
