"""Exception taxonomy. Degeneracies are mathematical outcomes, not operator mistakes."""

from __future__ import annotations


class HeronPairsError(Exception):
    """Root of every error raised by the library."""


class DegeneracyError(HeronPairsError):
    """A parameter value hits an excluded locus; `factor` names what vanished."""

    def __init__(self, message: str, factor: str | None = None) -> None:
        super().__init__(message)
        self.factor = factor


class InvalidSides(DegeneracyError):
    """Side triple with a non-positive side or violating the strict triangle inequality."""


class DegenerateParam(DegeneracyError):
    """(x, y, t) coordinates that do not induce a triangle."""


class DegenerateFamily(DegeneracyError):
    """Family or solver output that is not a genuine pair of triangles."""


class SingularPoint(DegeneracyError):
    pass


class InflectionOrDegenerate(DegeneracyError):
    """Tangent meets the cubic nowhere else at finite distance."""


class DegenerateChord(DegeneracyError):
    pass


class Exhausted(DegeneracyError):
    """Descent could not produce a single new point."""


class DescentStuck(DegeneracyError):
    pass


class NotASquareAtBase(DegeneracyError):
    pass


class NegativeInput(HeronPairsError, ValueError):
    pass


class NotOnCurve(HeronPairsError, ValueError):
    pass


class OutOfBounds(HeronPairsError):
    """Triangle sides exceed the oracle's search bound."""


class ParseError(HeronPairsError, ValueError):
    """Malformed rational literal; `position` is the offending character index."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position
