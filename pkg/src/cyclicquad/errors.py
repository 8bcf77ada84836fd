"""Exception hierarchy shared by every module of the package."""


class GeometryError(ValueError):
    """Base class for all domain errors raised by cyclicquad."""


class DegenerateInput(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class CollinearInput(GeometryError):
    pass


class NotUnimodular(GeometryError):
    pass


class OutOfDisk(GeometryError):
    pass


class IdenticalPoints(GeometryError):
    pass


class DegenerateMap(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class DegenerateQuadruple(GeometryError):
    pass


class NoInteriorRoot(GeometryError):
    pass


class TangentCircles(GeometryError):
    pass


class PoleInDomain(GeometryError):
    pass


class MissingField(GeometryError):
    pass


class NotPositivelyOrdered(GeometryError):
    pass
