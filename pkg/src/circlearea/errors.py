"""Exception hierarchy. Every module error derives from :class:`EnclosureError`."""


class EnclosureError(ValueError):
    """Base class for precondition and certification failures."""


class InvalidEndpoints(EnclosureError):
    pass


class ZeroInDivisor(EnclosureError, ZeroDivisionError):
    pass


class NegativeArgument(EnclosureError):
    pass


class DomainExceeded(EnclosureError):
    pass


class CosineMayVanish(EnclosureError):
    pass


class NotPointEnough(EnclosureError):
    pass


class CannotCertify(EnclosureError):
    pass


class DepthExceeded(EnclosureError):
    pass


class NonpositiveRadius(EnclosureError):
    pass


class InvalidStretch(EnclosureError):
    pass


class InvalidRadii(EnclosureError):
    pass


class ThetaOutOfRange(EnclosureError):
    pass


class InsufficientData(EnclosureError):
    pass


class InvalidArgument(EnclosureError):
    """Numeric option outside an operation's supported range."""
