"""Exception hierarchy shared by all modules."""


class HwsError(Exception):
    """Base class for library errors."""


class NotPrime(HwsError, ValueError):
    pass


class NotPrimePower(HwsError, ValueError):
    pass


class TooLarge(HwsError, ValueError):
    pass


class OutOfRange(HwsError, ValueError):
    pass


class Underdetermined(HwsError, ArithmeticError):
    pass


class Inconsistent(HwsError, ArithmeticError):
    pass


class ZeroForm(HwsError, ValueError):
    pass


class DegreeTooLarge(HwsError, ValueError):
    pass


class IncompleteInventory(HwsError, RuntimeError):
    pass


class BSViolation(HwsError, RuntimeError):
    """A Betti table failed the Boij-Soderberg identities (always a bug)."""


class NonIntegralSolution(HwsError, ArithmeticError):
    pass


class NegativeBetti(HwsError, ArithmeticError):
    pass


class NonIntegralSpectrum(HwsError, ArithmeticError):
    pass


class NegativeSpectrum(HwsError, ArithmeticError):
    pass


class MissingElongation(HwsError, KeyError):
    pass


class MissingColumn(HwsError, KeyError):
    pass


class MissingRow(HwsError, KeyError):
    pass


class NoFixtures(HwsError, KeyError):
    pass


class UnsupportedQ(HwsError, ValueError):
    pass
