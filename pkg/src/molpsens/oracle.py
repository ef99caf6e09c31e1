"""Brute-force ground truth for efficient sets.

Nothing here touches the cone or chain code: efficient faces come from
scanning weighted sums of the objectives, and dominance from comparing
sampled feasible points. The vertex values are computed directly with numpy
rather than through :mod:`molpsens.solver`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .angles import EPS
from .cone import ObjectiveBundle
from .errors import InfeasiblePoint
from .polytope import Polygon, wrap
from .solver import Face


@dataclass(frozen=True)
class WeightVector:
    lam: tuple[float, ...]

    def __post_init__(self):
        if any(not (-EPS <= x <= 1 + EPS) for x in self.lam):
            raise ValueError("weights must lie in [0, 1]")
        if abs(sum(self.lam) - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {sum(self.lam)}")


def simplex_grid(K: int, grid: int) -> np.ndarray:
    """All weight vectors with entries ``i/grid`` summing to one (small K only)."""
    rows = [
        c + (grid - sum(c),)
        for c in itertools.product(range(grid + 1), repeat=K - 1)
        if sum(c) <= grid
    ]
    return np.array(rows, dtype=float) / grid


def skeleton_grid(K: int, grid: int) -> list[np.ndarray]:
    """Grid points on each edge of the weight simplex, one array per objective pair.

    In the plane any nonnegative combination of the gradients is a nonnegative
    combination of at most two of them, so the edges of the simplex already
    reach every direction of the gradient cone.
    """
    t = np.arange(grid + 1, dtype=float) / grid
    out = []
    for i, j in itertools.combinations(range(K), 2):
        lam = np.zeros((grid + 1, K))
        lam[:, i] = 1.0 - t
        lam[:, j] = t
        out.append(lam)
    return out


class _Scanner:
    def __init__(self, polygon: Polygon, gradients: np.ndarray, eps: float):
        self.V = polygon.as_array()
        self.n = polygon.n
        self.C = gradients
        self.eps = eps
        self.vertex_faces = [None] + [Face.vertex(j) for j in range(1, self.n + 1)]

    def faces(self, lam: np.ndarray) -> list[Face | None]:
        d = lam @ self.C
        lengths = np.hypot(d[:, 0], d[:, 1])
        zero = lengths <= 1e-12 * np.abs(self.C).max()
        vals = (d @ self.V.T) / np.where(zero, 1.0, lengths)[:, None]
        best = vals.max(axis=1)
        tied = vals >= (best - self.eps * (1.0 + np.abs(best)))[:, None]
        counts = tied.sum(axis=1)
        top = vals.argmax(axis=1) + 1
        out: list[Face | None] = []
        for r in range(len(vals)):
            if zero[r]:
                out.append(None)
            elif counts[r] == 1:
                out.append(self.vertex_faces[top[r]])
            else:
                out.append(self._tie_face(np.flatnonzero(tied[r]) + 1))
        return out

    def _tie_face(self, idx: np.ndarray) -> Face:
        if len(idx) == 2:
            a, b = int(idx[0]), int(idx[1])
            if wrap(self.n, a + 1) == b:
                return Face.edge(a, self.n)
            if wrap(self.n, b + 1) == a:
                return Face.edge(b, self.n)
        raise ValueError(f"degenerate tie among vertices {idx.tolist()}")

    def adjacent_or_same(self, a: Face, b: Face) -> bool:
        ends = {a.first, a.last}
        others = {b.first, b.last}
        if ends & others:
            return True
        return any(wrap(self.n, x + 1) in others or wrap(self.n, y + 1) in ends
                   for x in ends for y in others)

    def bracket(self, lam_a: np.ndarray, lam_b: np.ndarray, fa: Face, fb: Face,
                found: set[Face], depth: int = 60) -> None:
        """Bisect between two weights until consecutive optima touch, then add the edge."""
        if fa == fb:
            return
        if self.adjacent_or_same(fa, fb):
            if fa.kind == fb.kind == "vertex":
                j, k = fa.first, fb.first
                found.add(Face.edge(j, self.n) if wrap(self.n, j + 1) == k else Face.edge(k, self.n))
            return
        if depth == 0:
            raise RuntimeError("weight bisection did not separate the optima")
        mid = 0.5 * (lam_a + lam_b)
        (fm,) = self.faces(mid[None, :])
        if fm is None:
            return
        found.add(fm)
        self.bracket(lam_a, mid, fa, fm, found, depth - 1)
        self.bracket(mid, lam_b, fm, fb, found, depth - 1)


def bruteforce_efficient(
    polygon: Polygon, bundle: ObjectiveBundle, grid: int = 500, eps: float = EPS
) -> set[Face]:
    """Union of optimal faces of the weighted-sum problem over a weight grid.

    Weights run over the edges of the simplex at spacing ``1/grid``. Between
    neighbouring grid weights whose optimal vertices are not adjacent, the
    weight is bisected until they are, and the edge crossed at each switch is
    recorded as optimal (it is, at the switching weight). Combinations that
    vanish are skipped.
    """
    if grid < 2:
        raise ValueError("grid must be at least 2")
    C = np.asarray(bundle.gradients, dtype=float)
    scan = _Scanner(polygon, C, eps)
    found: set[Face] = set()
    for lam in skeleton_grid(bundle.K, grid):
        faces = scan.faces(lam)
        for f in faces:
            if f is not None:
                found.add(f)
        for i in range(len(faces) - 1):
            fa, fb = faces[i], faces[i + 1]
            if fa is not None and fb is not None:
                scan.bracket(lam[i], lam[i + 1], fa, fb, found)
    return found


def face_vertices(faces: set[Face]) -> set[int]:
    return {j for f in faces for j in f.indices}


def candidate_points(polygon: Polygon, samples: int = 100, interior: int = 64) -> np.ndarray:
    """Vertices, ``samples`` points per edge, and an ``interior``-square grid clipped to the polygon.

    Each edge also gets points at fractions ``2**-k`` from both ends: next to a
    short edge the only dominating points can sit in a sliver by its vertex.
    """
    V = polygon.as_array()
    n = polygon.n
    lo, hi = V.min(axis=0), V.max(axis=0)
    floor = 1e-4 * float(np.hypot(*(hi - lo)))  # keeps tip gains well above the comparison margin
    even = np.arange(1, samples + 1) / (samples + 1)
    pts = [V]
    for j in range(n):
        a, b = V[j], V[(j + 1) % n]
        tips = 2.0 ** -np.arange(1, 40)
        tips = tips[tips * np.hypot(*(b - a)) >= floor]
        t = np.concatenate([even, tips, 1.0 - tips])[:, None]
        pts.append(a + t * (b - a))
    xs = np.linspace(lo[0], hi[0], interior)
    ys = np.linspace(lo[1], hi[1], interior)
    grid = np.array(np.meshgrid(xs, ys)).reshape(2, -1).T
    inside = np.ones(len(grid), dtype=bool)
    for j in range(n):
        a, b = V[j], V[(j + 1) % n]
        cross = (b[0] - a[0]) * (grid[:, 1] - a[1]) - (b[1] - a[1]) * (grid[:, 0] - a[0])
        inside &= cross >= 0
    pts.append(grid[inside])
    return np.vstack(pts)


def is_dominated(
    polygon: Polygon,
    bundle: ObjectiveBundle,
    p: Sequence[float],
    samples: int = 100,
    eps: float = EPS,
) -> bool:
    """Whether a sampled feasible point beats ``p`` weakly everywhere and strictly once."""
    if not polygon.contains(p, eps):
        raise InfeasiblePoint(f"point ({p[0]:g}, {p[1]:g}) is outside the polygon")
    C = np.asarray(bundle.gradients, dtype=float)
    cand = candidate_points(polygon, samples)
    base = C @ np.asarray(p, dtype=float)
    gain = cand @ C.T - base
    margin = eps * (1.0 + np.abs(base))
    weak = (gain >= -margin).all(axis=1)
    strict = (gain > margin).any(axis=1)
    return bool((weak & strict).any())
