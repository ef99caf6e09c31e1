"""Polar form, branch handling, rotations and open angular intervals.

Angles are radians internally. A *branch* is the half-open window
``[center - pi, center + pi)``; picking the center lets signed angles such as
-63.435 deg come out the way a reader expects instead of as 296.565 deg.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateCombination, ZeroVector

EPS = 1e-9
TWO_PI = 2.0 * math.pi

Vec = tuple[float, float]


def as_vec(v: Sequence[float]) -> Vec:
    x, y = v
    return (float(x), float(y))


def norm(v: Sequence[float]) -> float:
    return math.hypot(v[0], v[1])


def wrap_to_branch(angle: float, center: float = 0.0) -> float:
    """Reduce ``angle`` into ``[center - pi, center + pi)``."""
    lo = center - math.pi
    out = lo + math.fmod(angle - lo, TWO_PI)
    if out < lo:
        out += TWO_PI
    if out >= center + math.pi:
        out -= TWO_PI
    return out


def ccw_distance(frm: float, to: float) -> float:
    """Counterclockwise rotation in ``[0, 2pi)`` taking angle ``frm`` to ``to``."""
    d = math.fmod(to - frm, TWO_PI)
    if d < 0:
        d += TWO_PI
    if d >= TWO_PI:
        d -= TWO_PI
    return d


@dataclass(frozen=True)
class PolarVector:
    r: float
    phi: float

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError(f"polar magnitude must be positive, got {self.r}")

    def to_cartesian(self) -> Vec:
        return (self.r * math.cos(self.phi), self.r * math.sin(self.phi))

    @property
    def degrees(self) -> float:
        return math.degrees(self.phi)


def to_polar(v: Sequence[float], branch_center: float = 0.0) -> PolarVector:
    """Polar form of ``v`` with the angle reported in the branch around ``branch_center``."""
    x, y = as_vec(v)
    r = math.hypot(x, y)
    if r == 0.0:
        raise ZeroVector("cannot take the polar angle of the zero vector")
    return PolarVector(r, wrap_to_branch(math.atan2(y, x), branch_center))


def unit(angle: float) -> Vec:
    return (math.cos(angle), math.sin(angle))


def rotate(v: Sequence[float], theta: float) -> Vec:
    c, s = math.cos(theta), math.sin(theta)
    x, y = as_vec(v)
    return (c * x - s * y, s * x + c * y)


def scale(v: Sequence[float], alpha: float) -> Vec:
    return (alpha * v[0], alpha * v[1])


def decompose(
    c_k1: Sequence[float], c_k2: Sequence[float], delta: float, eps: float = EPS
) -> tuple[float, float]:
    """Write ``delta*c_k1 + (1-delta)*c_k2`` as a scaled rotation of ``c_k1``.

    Returns ``(alpha, theta)`` with ``alpha*R(theta) c_k1`` equal to the
    combination. ``theta`` is the signed rotation in ``(-pi, pi]``, taken from
    atan2 so it keeps its sign when the combination points below the x axis.
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"delta must lie in [0, 1], got {delta}")
    a, b = as_vec(c_k1), as_vec(c_k2)
    r1 = norm(a)
    if r1 == 0.0:
        raise ZeroVector("c_k1 must be nonzero")
    d = (delta * a[0] + (1.0 - delta) * b[0], delta * a[1] + (1.0 - delta) * b[1])
    nd = norm(d)
    if nd <= eps * max(r1, norm(b)):
        raise DegenerateCombination(
            f"delta={delta} makes the combination vanish (opposite generators)"
        )
    alpha = nd / r1
    theta = -wrap_to_branch(-(math.atan2(d[1], d[0]) - math.atan2(a[1], a[0])))
    return alpha, theta


def rotation_angle_arccos(
    c_k1: Sequence[float], c_k2: Sequence[float], delta: float
) -> float:
    """Closed-form rotation angle via arccos of the normalized first coordinate.

    Only meaningful when the combined vector has a nonnegative second
    component; elsewhere arccos loses the sign. Kept as an independent check
    on :func:`decompose`.
    """
    a, b = as_vec(c_k1), as_vec(c_k2)
    d1 = delta * a[0] + (1.0 - delta) * b[0]
    d2 = delta * a[1] + (1.0 - delta) * b[1]
    ratio = max(-1.0, min(1.0, d1 / math.sqrt(d1 * d1 + d2 * d2)))
    return math.acos(ratio) - math.atan2(a[1], a[0])


@dataclass(frozen=True)
class AngularInterval:
    """Interval of directions ``lo .. hi`` (radians) with per-end openness."""

    lo: float
    hi: float
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"interval end {self.hi} below start {self.lo}")
        # an open interval may span a full turn minus its single endpoint direction
        if self.hi - self.lo > TWO_PI * (1 + 1e-12):
            raise ValueError("interval must not exceed a full turn")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def reduce(self, omega: float, eps: float = EPS) -> float:
        """Representative of ``omega`` measured from ``lo``.

        Angles a hair below ``lo`` map just below ``lo`` rather than a full
        turn above it.
        """
        d = ccw_distance(self.lo, omega)
        if d > TWO_PI - eps:
            d -= TWO_PI
        return self.lo + d

    def contains(self, omega: float, eps: float = EPS) -> bool:
        return interval_contains(self, omega, eps)

    def intersect(self, lo: float, hi: float) -> "AngularInterval":
        """Intersection with an open window given in the same branch."""
        return AngularInterval(max(self.lo, lo), min(self.hi, hi), True, True)

    def format(self, digits: int = 3) -> str:
        left = "]" if self.lo_open else "["
        right = "[" if self.hi_open else "]"
        return (
            f"{left}{math.degrees(self.lo):.{digits}f}\N{DEGREE SIGN}, "
            f"{math.degrees(self.hi):.{digits}f}\N{DEGREE SIGN}{right}"
        )

    def __str__(self) -> str:
        return self.format()


def interval_contains(i: AngularInterval, omega: float, eps: float = EPS) -> bool:
    w = i.reduce(omega, eps)
    if i.lo_open:
        above = w > i.lo + eps
    else:
        above = w >= i.lo - eps
    if i.hi_open:
        below = w < i.hi - eps
    else:
        below = w <= i.hi + eps
    return above and below

