"""Exception hierarchy. Every error raised by the package derives from
:class:`BasenormError`, and the value-shaped ones also from ``ValueError``."""


class BasenormError(Exception):
    pass


class DimensionMismatch(BasenormError, ValueError):
    pass


class EmptyInput(BasenormError, ValueError):
    pass


class NotAbsorbing(BasenormError, ValueError):
    pass


class NotSymmetric(BasenormError, ValueError):
    pass


class NegativeScale(BasenormError, ValueError):
    pass


class NegativeInput(BasenormError, ValueError):
    pass


class MalformedRep(BasenormError, ValueError):
    pass


class NotRepresentable(BasenormError, ValueError):
    """Result would leave the finite + constant + single-geometric class."""


class SpaceMismatch(BasenormError, ValueError):
    pass


class WrongSpace(BasenormError, ValueError):
    pass


class BoundTooSmall(BasenormError, ValueError):
    pass


class NotPositive(BasenormError, ValueError):
    pass


class NotAState(BasenormError, ValueError):
    pass


class NotDirected(BasenormError, ValueError):
    pass


class EmptyFamily(BasenormError, ValueError):
    pass


class InconsistentValues(BasenormError, ValueError):
    pass


class UnknownFigure(BasenormError, ValueError):
    pass
