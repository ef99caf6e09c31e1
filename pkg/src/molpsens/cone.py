"""Gradient cone of an objective bundle and its two extreme rays."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .angles import EPS, TWO_PI, Vec, as_vec, ccw_distance, to_polar, wrap_to_branch
from .errors import WideCone, ZeroGradient, ZeroVector


@dataclass(frozen=True)
class ObjectiveBundle:
    """Gradients ``c_01 .. c_0K`` of K >= 2 linear objectives (maximized)."""

    gradients: tuple[Vec, ...]

    def __post_init__(self):
        grads = tuple(as_vec(g) for g in self.gradients)
        object.__setattr__(self, "gradients", grads)
        if len(grads) < 2:
            raise ValueError(f"a bundle needs K >= 2 objectives, got {len(grads)}")
        for k, g in enumerate(grads, start=1):
            if g[0] == 0.0 and g[1] == 0.0:
                raise ZeroGradient(k)

    @property
    def K(self) -> int:
        return len(self.gradients)

    def __len__(self) -> int:
        return len(self.gradients)

    def gradient(self, k: int) -> Vec:
        """1-based accessor."""
        return self.gradients[k - 1]

    def augmented(self, *extra: Sequence[float]) -> "ObjectiveBundle":
        return ObjectiveBundle(self.gradients + tuple(as_vec(e) for e in extra))


@dataclass(frozen=True)
class GradientCone:
    """Pointed cone spanned by gradients ``k1`` (clockwise edge) and ``k2``.

    ``phi1 <= phi2`` are expressed in the branch centred on the cone bisector,
    so every bundle angle lies in ``[phi1, phi2]`` without wrap-around.
    """

    k1: int
    k2: int
    phi1: float
    phi2: float

    @property
    def width(self) -> float:
        return self.phi2 - self.phi1

    @property
    def center(self) -> float:
        return 0.5 * (self.phi1 + self.phi2)

    def angle_of(self, d: Sequence[float]) -> float:
        """Angle of ``d`` in this cone's analysis branch."""
        return to_polar(d, self.center).phi


def extreme_rays(bundle: ObjectiveBundle, eps: float = EPS) -> GradientCone:
    """Locate the two extreme rays by cutting the circle at the widest gap.

    Ties in angle resolve to the smaller objective index; when the whole bundle
    is one direction, ``k2`` is the second-smallest index so ``k1 != k2``.
    """
    raw = [math.atan2(g[1], g[0]) for g in bundle.gradients]
    order = sorted(range(len(raw)), key=raw.__getitem__)
    K = len(raw)
    gaps = [ccw_distance(raw[order[i]], raw[order[(i + 1) % K]]) for i in range(K)]
    # all-parallel bundles produce only zero gaps; the widest gap is then the full turn
    if all(g <= eps for g in gaps):
        widest = 0
        spread = 0.0
    else:
        widest = max(range(K), key=gaps.__getitem__)
        spread = TWO_PI - gaps[widest]
    if spread >= math.pi - eps:
        raise WideCone(spread, (order[(widest + 1) % K] + 1, order[widest] + 1))

    start = raw[order[(widest + 1) % K]]
    center = wrap_to_branch(start + spread / 2)
    phis = [wrap_to_branch(a, center) for a in raw]
    lo, hi = min(phis), max(phis)
    k1 = min(k for k in range(K) if phis[k] <= lo + eps)
    top = [k for k in range(K) if phis[k] >= hi - eps]
    others = [k for k in top if k != k1]
    k2 = min(others) if others else k1
    return GradientCone(k1 + 1, k2 + 1, lo, hi)


def contains_direction(cone: GradientCone, d: Sequence[float], eps: float = EPS) -> bool:
    x, y = as_vec(d)
    if x == 0.0 and y == 0.0:
        raise ZeroVector("direction must be nonzero")
    offset = ccw_distance(cone.phi1, math.atan2(y, x))
    return offset <= cone.width + eps or offset >= TWO_PI - eps


def cone_spread(bundle: ObjectiveBundle) -> float:
    """Minimal angular width containing every gradient (``2pi`` minus the widest gap)."""
    raw = sorted(math.atan2(g[1], g[0]) for g in bundle.gradients)
    K = len(raw)
    gaps = [ccw_distance(raw[i], raw[(i + 1) % K]) for i in range(K)]
    if all(g == 0.0 for g in gaps):
        return 0.0
    return TWO_PI - max(gaps)
