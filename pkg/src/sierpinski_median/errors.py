"""Exception hierarchy shared by every module of the package."""


class SierpinskiError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidCharacter(SierpinskiError):
    pass


class TooLong(SierpinskiError):
    pass


class EmptyWord(SierpinskiError):
    pass


class WrongLength(SierpinskiError):
    pass


class OrderTooLarge(SierpinskiError):
    pass


class InvalidVertex(SierpinskiError):
    pass


class PrimitiveNotAllowed(SierpinskiError):
    pass


class DisconnectedGraph(SierpinskiError):
    pass
