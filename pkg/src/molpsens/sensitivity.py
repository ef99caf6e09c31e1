"""Tolerance intervals for single forms and for whole objective bundles.

A vertex stays optimal for exactly the directions strictly between the outward
normals of its two incident edges, i.e. between ``theta1 - pi/2`` and
``theta2 - pi/2`` where ``theta1``/``theta2`` are the incoming and outgoing
edge angles. For a bundle the same reasoning applies to the whole efficient
chain: the interval opens at the incoming edge of its first vertex and closes
at the outgoing edge of its last.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .angles import (
    EPS,
    AngularInterval,
    Vec,
    as_vec,
    ccw_distance,
    norm,
    to_polar,
    unit,
)
from .cone import ObjectiveBundle
from .efficient_set import efficient_chain, efficient_signature
from .errors import AngleOutOfTolerance, EdgeOptimal, ZeroVector
from .polytope import Chain, Polygon, edge_angles
from .solver import argmax_face

HALF_PI = 0.5 * math.pi


def _window_around(
    polygon: Polygon, j_lo: int, j_hi: int, phi_lo: float, phi_hi: float
) -> AngularInterval:
    """Open interval from the incoming-edge normal at ``v^j_lo`` to the
    outgoing-edge normal at ``v^j_hi``, placed in the branch of ``phi_lo..phi_hi``."""
    theta1, _, _, _ = edge_angles(polygon, j_lo)
    _, theta2, _, _ = edge_angles(polygon, j_hi)
    lo = phi_lo - ccw_distance(theta1 - HALF_PI, phi_lo)
    hi = phi_hi + ccw_distance(phi_hi, theta2 - HALF_PI)
    return AngularInterval(lo, hi, True, True)


def mono_tolerance(polygon: Polygon, form: Sequence[float], eps: float = EPS) -> AngularInterval:
    """Directions ``omega`` whose unit form has the same unique maximizer as ``form``."""
    x, y = as_vec(form)
    if x == 0.0 and y == 0.0:
        raise ZeroVector("form must be nonzero")
    face = argmax_face(polygon, form, eps)
    if face.kind == "edge":
        raise EdgeOptimal(face.indices)
    j = face.first
    phi = math.atan2(y, x)
    return _window_around(polygon, j, j, phi, phi)


@dataclass(frozen=True)
class SensitivityClass:
    """Symbolic description of every bundle sharing one efficient chain.

    ``tolerance`` is the open interval of absolute gradient angles whose
    single addition keeps the chain. ``pointed`` is the sub-window in which an
    added gradient also keeps the cone narrower than a half-turn; beyond it the
    gradients positively span the plane and the whole polygon turns efficient.
    """

    g1: Vec
    g2: Vec
    phi1: float
    phi2: float
    tolerance: AngularInterval
    pointed: AngularInterval
    chain: Chain

    def admits(self, thetas: Sequence[float], eps: float = EPS) -> bool:
        try:
            self.check_angles(thetas, eps)
        except AngleOutOfTolerance:
            return False
        return True

    def check_angles(self, thetas: Sequence[float], eps: float = EPS) -> list[float]:
        """Validate extra gradient angles; returns them reduced into the class branch."""
        reduced = []
        for i, t in enumerate(thetas, start=1):
            if not self.tolerance.contains(t, eps):
                raise AngleOutOfTolerance(
                    f"angle {i} ({math.degrees(t):.3f} deg) is outside {self.tolerance}", i
                )
            reduced.append(self.tolerance.reduce(t, eps))
        lo = min([self.phi1, *reduced])
        hi = max([self.phi2, *reduced])
        if hi - lo >= math.pi - eps:
            raise AngleOutOfTolerance(
                f"angles widen the gradient cone to {math.degrees(hi - lo):.3f} deg; "
                "members must keep it below 180 deg"
            )
        return reduced

    def template(self) -> str:
        g1 = f"({self.g1[0]:g}, {self.g1[1]:g})"
        g2 = f"({self.g2[0]:g}, {self.g2[1]:g})"
        return (
            f"G = (<{g1}, x>, <{g2}, x>, <R(t_1 - phi1) {g1}, x>, ..., "
            f"<R(t_(K-2) - phi1) {g1}, x>),  K >= 2,  t_i in {self.tolerance}"
        )


def molp_sensitivity(
    polygon: Polygon, bundle: ObjectiveBundle, eps: float = EPS
) -> SensitivityClass:
    es = efficient_chain(polygon, bundle, eps)
    cone = es.cone
    chain = es.chain
    tol = _window_around(polygon, chain.start, chain.end(polygon), cone.phi1, cone.phi2)
    pointed = AngularInterval(
        max(tol.lo, cone.phi2 - math.pi), min(tol.hi, cone.phi1 + math.pi), True, True
    )
    return SensitivityClass(
        bundle.gradient(cone.k1),
        bundle.gradient(cone.k2),
        cone.phi1,
        cone.phi2,
        tol,
        pointed,
        chain,
    )


def sample_member(
    cls: SensitivityClass, K: int, thetas: Sequence[float], eps: float = EPS
) -> ObjectiveBundle:
    """Bundle ``(g1, g2, extra...)`` with extras at absolute angles ``thetas``.

    Extras carry the norm of ``g1``; the angles must lie strictly inside the
    tolerance interval and, taken together with the generators, keep the cone
    pointed.
    """
    if K < 2:
        raise ValueError(f"K must be at least 2, got {K}")
    if len(thetas) != K - 2:
        raise ValueError(f"need K-2 = {K - 2} angles, got {len(thetas)}")
    reduced = cls.check_angles(thetas, eps)
    r = norm(cls.g1)
    extra = [(r * math.cos(t), r * math.sin(t)) for t in reduced]
    return ObjectiveBundle((cls.g1, cls.g2, *extra))


def is_equivalent(
    polygon: Polygon, g: ObjectiveBundle, h: ObjectiveBundle, eps: float = EPS
) -> bool:
    """Whether ``g`` and ``h`` have the same efficient set on ``polygon``."""
    return efficient_signature(polygon, g, eps) == efficient_signature(polygon, h, eps)


def in_class(
    polygon: Polygon, cls: SensitivityClass, g: ObjectiveBundle, eps: float = EPS
) -> bool:
    return efficient_signature(polygon, g, eps) == (cls.chain.start, cls.chain.count)


def direction(angle: float, r: float = 1.0) -> Vec:
    u = unit(angle)
    return (r * u[0], r * u[1])


def generator_angles_deg(cls: SensitivityClass) -> tuple[float, float]:
    return (
        math.degrees(to_polar(cls.g1, 0.5 * (cls.phi1 + cls.phi2)).phi),
        math.degrees(to_polar(cls.g2, 0.5 * (cls.phi1 + cls.phi2)).phi),
    )
