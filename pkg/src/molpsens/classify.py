"""Catalogue of boundary runs and the class label of a bundle."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import EPS, ccw_distance
from .cone import ObjectiveBundle
from .efficient_set import efficient_chain
from .polytope import Chain, Polygon, edge_angles


@dataclass(frozen=True, order=True)
class ClassLabel:
    j0: int
    j: int

    @property
    def chain(self) -> Chain:
        return Chain(self.j0, self.j)

    def __str__(self) -> str:
        return f"S_{self.j0}^{self.j}"


def enumerate_ns(polygon: Polygon) -> list[ClassLabel]:
    n = polygon.n
    return [ClassLabel(j0, j) for j0 in range(1, n + 1) for j in range(1, n + 1)]


def classify(polygon: Polygon, bundle: ObjectiveBundle, eps: float = EPS) -> ClassLabel:
    chain = efficient_chain(polygon, bundle, eps).chain
    return ClassLabel(chain.start, chain.count)


def required_sweep(polygon: Polygon, label: ClassLabel) -> float:
    """Smallest cone width whose efficient set can be ``label``.

    Every vertex strictly inside the run must have its whole normal cone
    swept, so the width is the sum of their exterior angles.
    """
    idx = label.chain.indices(polygon)
    return sum(polygon.exterior_angle(j) for j in idx[1:-1])


@dataclass(frozen=True)
class Witness:
    label: ClassLabel
    bundle: ObjectiveBundle | None
    sweep: float

    @property
    def realizable(self) -> bool:
        return self.bundle is not None

    @property
    def gap(self) -> float:
        """How far the needed sweep overshoots a half-turn (radians, >= 0 if unrealizable)."""
        return self.sweep - math.pi


def realize(polygon: Polygon, label: ClassLabel, margin: float = 0.25) -> Witness:
    """Build a two-objective bundle whose efficient set is ``label``, if one exists.

    Each generator sits inside the normal cone of its end vertex, ``margin``
    (as a fraction of that cone) away from the neighbouring chain vertex, so
    the cone covers exactly the interior vertices' normal cones plus a bit.
    """
    first, last = label.j0, label.chain.end(polygon)
    sweep = required_sweep(polygon, label)
    t1_first, t2_first, _, _ = edge_angles(polygon, first)
    t1_last, t2_last, _, _ = edge_angles(polygon, last)
    if label.j == 1:
        width = ccw_distance(t1_first, t2_first)
        phi = t1_first - 0.5 * math.pi + 0.5 * width
        d = (math.cos(phi), math.sin(phi))
        return Witness(label, ObjectiveBundle((d, d)), 0.0)
    w_first = ccw_distance(t1_first, t2_first)
    w_last = ccw_distance(t1_last, t2_last)
    phi1 = t2_first - 0.5 * math.pi - margin * w_first
    phi2 = t1_last - 0.5 * math.pi + margin * w_last
    width = sweep + margin * (w_first + w_last)
    if width >= math.pi:
        # shrink the margins; the run is realizable iff the bare sweep is below pi
        if sweep >= math.pi:
            return Witness(label, None, sweep)
        slack = 0.5 * (math.pi - sweep)
        phi1 = t2_first - 0.5 * math.pi - min(margin * w_first, 0.5 * slack)
        phi2 = t1_last - 0.5 * math.pi + min(margin * w_last, 0.5 * slack)
    bundle = ObjectiveBundle(((math.cos(phi1), math.sin(phi1)), (math.cos(phi2), math.sin(phi2))))
    return Witness(label, bundle, sweep)
