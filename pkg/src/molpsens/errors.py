"""Exception hierarchy.

Everything geometric derives from :class:`GeometryError` so the CLI can map
it to a single exit status; file problems raise :class:`ParseError`.
"""

from __future__ import annotations

import math


class GeometryError(Exception):
    """Base class for geometric failures (CLI exit status 3)."""


class EmptyRegion(GeometryError):
    """No point satisfies every constraint."""

    def __init__(self, message: str, constraints: tuple[int, ...] = ()):
        super().__init__(message)
        self.constraints = constraints


class UnboundedRegion(GeometryError):
    """The feasible set contains a ray."""

    def __init__(self, message: str, direction: tuple[float, float] | None = None):
        super().__init__(message)
        self.direction = direction


class DegenerateRegion(GeometryError):
    """The feasible set is a single point or a segment."""


class ZeroVector(GeometryError, ValueError):
    """A vector that must be nonzero is (numerically) zero."""


class ZeroGradient(ZeroVector):
    def __init__(self, index: int):
        super().__init__(f"gradient {index} is the zero vector")
        self.index = index


class ZeroDirection(ZeroVector):
    pass


class WideCone(GeometryError):
    """The gradients do not fit in an open half-plane of directions."""

    def __init__(self, spread: float, indices: tuple[int, ...]):
        super().__init__(
            f"gradient cone spans {math.degrees(spread):.3f} deg >= 180 deg "
            f"(from gradient {indices[0]} counterclockwise to gradient {indices[-1]}); "
            "the cone is not pointed"
        )
        self.spread = spread
        self.indices = indices


class DegenerateCombination(GeometryError):
    """A convex combination of two generators vanished."""


class NonAdjacentTie(GeometryError):
    """Two non-adjacent vertices tie for the maximum: epsilon is too large."""


class EdgeOptimal(GeometryError):
    """A single-objective form is maximized along a whole edge."""

    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"form is optimal on the whole edge v{edge[0]}v{edge[1]}")
        self.edge = edge


class AngleOutOfTolerance(GeometryError, ValueError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class InfeasiblePoint(GeometryError, ValueError):
    pass


class ParseError(ValueError):
    """Malformed problem file (CLI exit status 2)."""

    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
