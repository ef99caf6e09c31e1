"""Efficient set of a 2D MOLP as a run of boundary vertices.

Rotating a direction counterclockwise from the clockwise extreme ray of the
gradient cone to the other one visits the optimal vertices in CCW order, so
the efficient set is the boundary run between the two extreme-ray optima.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import EPS
from .cone import GradientCone, ObjectiveBundle, extreme_rays
from .errors import WideCone
from .polytope import Chain, Polygon
from .solver import Face, argmax_face


@dataclass(frozen=True)
class EfficientSet:
    chain: Chain
    vs: tuple[int, ...]
    cone: GradientCone
    first_face: Face
    last_face: Face


def chain_between(polygon: Polygon, first: Face, last: Face) -> Chain:
    """CCW run from the earlier endpoint of ``first`` to the later endpoint of ``last``."""
    start, end = first.first, last.last
    count = (end - start) % polygon.n + 1
    return Chain(start, count)


def efficient_chain(
    polygon: Polygon, bundle: ObjectiveBundle, eps: float = EPS
) -> EfficientSet:
    cone = extreme_rays(bundle, eps)
    f1 = argmax_face(polygon, bundle.gradient(cone.k1), eps)
    f2 = argmax_face(polygon, bundle.gradient(cone.k2), eps)
    chain = chain_between(polygon, f1, f2)
    return EfficientSet(chain, tuple(chain.indices(polygon)), cone, f1, f2)


def reduce_to_tolp(bundle: ObjectiveBundle, eps: float = EPS) -> ObjectiveBundle:
    """Two-objective bundle made of the extreme-ray generators, clockwise one first."""
    cone = extreme_rays(bundle, eps)
    return ObjectiveBundle((bundle.gradient(cone.k1), bundle.gradient(cone.k2)))


WHOLE_REGION = "whole-region"


def efficient_signature(polygon: Polygon, bundle: ObjectiveBundle, eps: float = EPS):
    """Hashable identity of the efficient set, for equivalence tests.

    Pointed bundles give ``(start, count)``. When the gradients positively span
    the plane (spread strictly above pi) some strictly positive weighting sums
    them to zero, so no point can be improved in every objective and the whole
    polygon is efficient; that case is reported as :data:`WHOLE_REGION`. A
    spread within ``eps`` of pi stays an error.
    """
    try:
        chain = efficient_chain(polygon, bundle, eps).chain
    except WideCone as exc:
        if exc.spread > math.pi + eps:
            return WHOLE_REGION
        raise
    return (chain.start, chain.count)
