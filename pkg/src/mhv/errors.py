"""Exception hierarchy shared by every layer of the package."""


class MHVError(Exception):
    """Base class for all errors raised by :mod:`mhv`."""


class ScalarParseError(MHVError, ValueError):
    """A scalar literal is not an exact rational of the form ``p`` or ``p/q``."""


class OutsideDomain(MHVError, ValueError):
    """A generator was passed to a functional or module that does not contain it."""


class SupportViolation(MHVError, ValueError):
    """A Whittaker function would be nonzero at a structurally-zero slot."""


class WhittakerViolation(MHVError):
    """A functional is nonzero on the derived subalgebra of its domain."""

    def __init__(self, generator, value):
        self.generator = generator
        self.value = value
        super().__init__(f"functional is {value} on commutator element at {generator}")


class ZeroCentralCharge(MHVError, ValueError):
    pass


class Singular(MHVError, ValueError):
    pass


class WrongCase(MHVError, ValueError):
    pass


class NotSplittingOrder(MHVError, ValueError):
    pass


class NotRestricted(MHVError, ValueError):
    pass


class NotInHSpan(MHVError, ValueError):
    pass


class UnsupportedM(MHVError, ValueError):
    pass


class HypothesisUnmet(MHVError, ValueError):
    pass


class AlreadyVacuumLine(MHVError, ValueError):
    pass


class NotNormalized(MHVError, ValueError):
    pass


class Stalled(MHVError, RuntimeError):
    pass


class DegenerateParams(MHVError, ValueError):
    pass


class BasisKeyError(MHVError, KeyError):
    """A basis key is not canonical for the module it is used with."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(MHVError, ValueError):
    def __init__(self, position, expected, text=""):
        self.position = position
        self.expected = expected
        self.text = text
        super().__init__(f"at position {position}: expected {expected}")


class ConfigError(MHVError, ValueError):
    pass
