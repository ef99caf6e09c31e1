"""Maximizing a linear form over the polygon by scanning its vertices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .angles import EPS, as_vec
from .errors import NonAdjacentTie, ZeroDirection
from .polytope import Polygon, wrap


@dataclass(frozen=True)
class Face:
    """Optimal face: one vertex, or an edge ``(j, j+1)`` in CCW order."""

    kind: Literal["vertex", "edge"]
    indices: tuple[int, ...]

    @classmethod
    def vertex(cls, j: int) -> "Face":
        return cls("vertex", (j,))

    @classmethod
    def edge(cls, j: int, n: int) -> "Face":
        return cls("edge", (j, wrap(n, j + 1)))

    @property
    def first(self) -> int:
        return self.indices[0]

    @property
    def last(self) -> int:
        return self.indices[-1]

    def __str__(self) -> str:
        return "".join(f"v{j}" for j in self.indices)


def _unit(d: Sequence[float]) -> np.ndarray:
    x, y = as_vec(d)
    r = math.hypot(x, y)
    if r == 0.0:
        raise ZeroDirection("direction must be nonzero")
    return np.array([x / r, y / r])


def argmax_face(polygon: Polygon, d: Sequence[float], eps: float = EPS) -> Face:
    """The face of ``polygon`` on which ``<d, x>`` is maximal.

    The direction is normalized first so the relative tie test behaves the same
    for ``d`` and ``w*d``.
    """
    values = polygon.as_array() @ _unit(d)
    best = float(values.max())
    tied = np.flatnonzero(values >= best - eps * (1.0 + abs(best)))
    n = polygon.n
    if len(tied) == 1:
        return Face.vertex(int(tied[0]) + 1)
    if len(tied) == 2:
        a, b = int(tied[0]) + 1, int(tied[1]) + 1
        if wrap(n, a + 1) == b:
            return Face.edge(a, n)
        if wrap(n, b + 1) == a:
            return Face.edge(b, n)
    raise NonAdjacentTie(
        f"vertices {', '.join(f'v{int(t) + 1}' for t in tied)} tie for direction "
        f"({d[0]:.6g}, {d[1]:.6g}); epsilon {eps:g} is too large for this polygon"
    )


def argmax_value(polygon: Polygon, d: Sequence[float]) -> float:
    x, y = as_vec(d)
    if x == 0.0 and y == 0.0:
        raise ZeroDirection("direction must be nonzero")
    return float((polygon.as_array() @ np.array([x, y])).max())
