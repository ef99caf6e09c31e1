"""Random problem instances for property tests and sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cone import ObjectiveBundle
from .polytope import HalfPlane, Polygon, enumerate_vertices


@dataclass(frozen=True)
class InstanceConfig:
    min_vertices: int = 3
    max_vertices: int = 12
    min_turn_deg: float = 2.0  # smallest exterior angle kept between tangent normals
    redundant: int = 2  # extra slack half-planes mixed in
    max_width_deg: float = 170.0
    min_k: int = 2
    max_k: int = 6
    norm_range: tuple[float, float] = (0.2, 5.0)


def random_polygon(rng: np.random.Generator, cfg: InstanceConfig = InstanceConfig()):
    """Polygon cut out by random tangent half-planes of a jittered circle.

    Returns the half-planes too. Normals are spread so that neighbouring ones
    differ by at least ``min_turn_deg`` and no gap reaches 180 deg, which keeps
    the region bounded and its corners away from near-degenerate turns.
    """
    while True:
        n = int(rng.integers(cfg.min_vertices, cfg.max_vertices + 1))
        angles = np.sort(rng.uniform(0, 2 * math.pi, n))
        gaps = np.diff(np.concatenate([angles, angles[:1] + 2 * math.pi]))
        if gaps.min() < math.radians(cfg.min_turn_deg) or gaps.max() >= math.radians(170):
            continue
        center = rng.uniform(-5, 5, 2)
        rows = [
            HalfPlane(math.cos(t), math.sin(t), float(np.dot((math.cos(t), math.sin(t)), center) + rng.uniform(1, 3)))
            for t in angles
        ]
        for _ in range(cfg.redundant):
            t = rng.uniform(0, 2 * math.pi)
            u = (math.cos(t), math.sin(t))
            rows.append(HalfPlane(u[0], u[1], float(np.dot(u, center) + 20.0)))
        order = rng.permutation(len(rows))
        rows = [rows[i] for i in order]
        poly = enumerate_vertices(rows, include_nonnegativity=False)
        if cfg.min_vertices <= poly.n <= cfg.max_vertices and min(
            poly.exterior_angle(j) for j in range(1, poly.n + 1)
        ) >= math.radians(cfg.min_turn_deg):
            return poly, rows


def random_bundle(
    rng: np.random.Generator, cfg: InstanceConfig = InstanceConfig(), width: float | None = None
) -> ObjectiveBundle:
    """K gradients in a cone of the given width (radians), generators included."""
    K = int(rng.integers(cfg.min_k, cfg.max_k + 1))
    if width is None:
        width = rng.uniform(0, math.radians(cfg.max_width_deg))
        while width == 0.0:
            width = rng.uniform(0, math.radians(cfg.max_width_deg))
    base = rng.uniform(-math.pi, math.pi)
    angles = [base, base + width] + list(rng.uniform(base, base + width, K - 2))
    radii = rng.uniform(*cfg.norm_range, K)
    grads = [(r * math.cos(a), r * math.sin(a)) for r, a in zip(radii, angles)]
    order = rng.permutation(K)
    return ObjectiveBundle(tuple(grads[i] for i in order))


def random_instance(rng: np.random.Generator, cfg: InstanceConfig = InstanceConfig()):
    poly, _ = random_polygon(rng, cfg)
    return poly, random_bundle(rng, cfg)
