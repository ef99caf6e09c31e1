"""Feasible polygon: half-plane input, vertex enumeration and boundary chains.

Vertex and chain indices are 1-based throughout, matching the usual
``v1 .. vn`` labelling of a counterclockwise vertex ring.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .angles import EPS, TWO_PI, Vec, as_vec, to_polar
from .errors import DegenerateRegion, EmptyRegion, UnboundedRegion

Segment = tuple[Vec, Vec]


@dataclass(frozen=True)
class HalfPlane:
    """``a1*x1 + a2*x2 <= b``."""

    a1: float
    a2: float
    b: float

    def __post_init__(self):
        if self.a1 == 0 and self.a2 == 0:
            raise ValueError("half-plane normal (a1, a2) must be nonzero")

    @property
    def normal(self) -> Vec:
        return (self.a1, self.a2)

    def slack(self, p: Sequence[float]) -> float:
        """``b - a.p``; negative means violated."""
        return self.b - (self.a1 * p[0] + self.a2 * p[1])

    def normalized(self) -> "HalfPlane":
        n = math.hypot(self.a1, self.a2)
        return HalfPlane(self.a1 / n, self.a2 / n, self.b / n)


NONNEGATIVITY = (HalfPlane(-1.0, 0.0, 0.0), HalfPlane(0.0, -1.0, 0.0))


def _cross(o: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Polygon:
    """Strictly convex polygon stored as a counterclockwise vertex ring.

    The ring starts at the vertex with the smallest second coordinate (ties:
    smallest first coordinate). Use :meth:`from_points` to canonicalize an
    arbitrary point cloud.
    """

    vertices: tuple[Vec, ...]

    def __post_init__(self):
        verts = tuple(as_vec(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise DegenerateRegion(f"a polygon needs at least 3 vertices, got {n}")
        for j in range(n):
            turn = _cross(verts[j - 1], verts[j], verts[(j + 1) % n])
            if not turn > 0:
                raise ValueError(
                    f"vertex ring is not strictly convex counterclockwise at v{j + 1}"
                )
        if canonical_start(list(verts))[0] != verts[0]:
            raise ValueError("first vertex must have minimal x2 (then minimal x1)")

    @classmethod
    def from_points(cls, points: Iterable[Sequence[float]], eps: float = EPS) -> "Polygon":
        """Convex hull of ``points`` in canonical order; collinear points dropped."""
        hull = convex_hull(points, eps)
        if len(hull) < 3:
            raise DegenerateRegion(
                "feasible set is a point" if len(hull) == 1 else "feasible set is a segment"
            )
        return cls(canonical_start(hull, eps))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, j: int) -> Vec:
        """Vertex ``v^j`` with the wrap map applied, so ``j = n + 1`` is ``v^1``."""
        return self.vertices[wrap(self.n, j) - 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    def signed_area(self) -> float:
        v = self.vertices
        return 0.5 * sum(
            v[i][0] * v[(i + 1) % self.n][1] - v[(i + 1) % self.n][0] * v[i][1]
            for i in range(self.n)
        )

    def centroid(self) -> Vec:
        xs = sum(p[0] for p in self.vertices) / self.n
        ys = sum(p[1] for p in self.vertices) / self.n
        return (xs, ys)

    def contains(self, p: Sequence[float], eps: float = EPS) -> bool:
        """Closed containment with absolute slack ``eps`` (scaled by edge length)."""
        for j in range(self.n):
            a, b = self.vertices[j], self.vertices[(j + 1) % self.n]
            edge = math.hypot(b[0] - a[0], b[1] - a[1])
            if _cross(a, b, p) < -eps * max(1.0, edge):
                return False
        return True

    def edge_normal(self, j: int) -> Vec:
        """Outward unit normal of edge ``v^j -> v^(j+1)``."""
        a, b = self.vertex(j), self.vertex(j + 1)
        dx, dy = b[0] - a[0], b[1] - a[1]
        length = math.hypot(dx, dy)
        return (dy / length, -dx / length)

    def exterior_angle(self, j: int) -> float:
        """Turning angle at ``v^j`` (width of its normal cone)."""
        t1, t2, _, _ = edge_angles(self, j)
        d = (t2 - t1) % TWO_PI
        return d


def wrap(n: int, alpha: int) -> int:
    if alpha < 0:
        raise ValueError(f"wrap index must be nonnegative, got {alpha}")
    r = alpha % n
    return n if r == 0 else r


def wrap_index(polygon: Polygon, alpha: int) -> int:
    """``alpha mod n``, except exact multiples of ``n`` map to ``n``."""
    return wrap(polygon.n, alpha)


def convex_hull(points: Iterable[Sequence[float]], eps: float = EPS) -> list[Vec]:
    """Monotone-chain hull, counterclockwise, without collinear or repeated points."""
    pts = sorted(set(as_vec(p) for p in points))
    pts = _merge_close(pts, eps)
    if len(pts) <= 2:
        return pts
    scale = max(1.0, max(max(abs(x), abs(y)) for x, y in pts))
    tol = eps * scale * scale

    def half(seq):
        out: list[Vec] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= tol:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def _merge_close(pts: list[Vec], eps: float) -> list[Vec]:
    kept: list[Vec] = []
    for p in pts:
        tol = eps * max(1.0, abs(p[0]), abs(p[1]))
        if any(abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol for q in kept):
            continue
        kept.append(p)
    return kept


def canonical_start(ring: list[Vec], eps: float = EPS) -> list[Vec]:
    """Rotate a CCW ring so it starts at the lowest vertex (leftmost among ties)."""
    lowest = min(p[1] for p in ring)
    scale = max(1.0, abs(lowest))
    candidates = [i for i, p in enumerate(ring) if p[1] <= lowest + eps * scale]
    start = min(candidates, key=lambda i: ring[i][0])
    return ring[start:] + ring[:start]


def _normals_span(rows: Sequence[HalfPlane]) -> tuple[bool, Vec | None]:
    """Whether the constraint normals positively span the plane.

    If not, returns a recession direction: the bisector of the widest angular
    gap between normals, which has nonpositive inner product with every normal.
    """
    angles = sorted(math.atan2(h.a2, h.a1) for h in rows)
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(angles[0] + TWO_PI - angles[-1])
    i = max(range(len(gaps)), key=gaps.__getitem__)
    if gaps[i] < math.pi - 1e-12:
        return True, None
    mid = angles[i] + gaps[i] / 2
    return False, (math.cos(mid), math.sin(mid))


def _lp_feasible(rows: Sequence[HalfPlane]) -> bool:
    from scipy.optimize import linprog

    a = np.array([[h.a1, h.a2] for h in rows])
    b = np.array([h.b for h in rows])
    res = linprog(np.zeros(2), A_ub=a, b_ub=b, bounds=[(None, None)] * 2, method="highs")
    return res.status == 0


def _infeasible_core(rows: Sequence[HalfPlane], labels: Sequence[int]) -> tuple[int, ...]:
    """Deletion filter: an irreducible infeasible subset of the constraints."""
    keep = list(range(len(rows)))
    for i in list(keep):
        trial = [k for k in keep if k != i]
        if trial and not _lp_feasible([rows[k] for k in trial]):
            keep = trial
    return tuple(labels[k] for k in keep)


def enumerate_vertices(
    constraints: Sequence[HalfPlane], include_nonnegativity: bool = True, eps: float = EPS
) -> Polygon:
    """Vertices of ``{x : a.x <= b for every constraint}`` as a canonical polygon.

    Error messages refer to constraints by their 1-based position in
    ``constraints``; the implicit nonnegativity rows are labelled ``x1>=0`` and
    ``x2>=0``.
    """
    if not constraints:
        raise ValueError("constraint list must be non-empty")
    raw = list(constraints)
    labels: list = list(range(1, len(raw) + 1))
    if include_nonnegativity:
        raw.extend(NONNEGATIVITY)
        labels.extend(["x1>=0", "x2>=0"])
    rows = [h.normalized() for h in raw]

    bounded, ray = _normals_span(rows)
    if not bounded:
        if not _lp_feasible(rows):
            core = _infeasible_core(rows, labels)
            raise EmptyRegion(
                f"no point satisfies constraints {', '.join(map(str, core))}", core
            )
        raise UnboundedRegion(
            "feasible set is unbounded: no constraint limits direction "
            f"({ray[0]:.6g}, {ray[1]:.6g})",
            ray,
        )

    points: list[Vec] = []
    # intersect the raw rows so integer data gives exact corners; test slack on unit rows
    for (h, hn), (g, gn) in itertools.combinations(zip(raw, rows), 2):
        if abs(hn.a1 * gn.a2 - hn.a2 * gn.a1) <= eps:
            continue
        det = h.a1 * g.a2 - h.a2 * g.a1
        x = (h.b * g.a2 - h.a2 * g.b) / det
        y = (h.a1 * g.b - h.b * g.a1) / det
        tol = eps * max(1.0, abs(x), abs(y))
        if all(r.slack((x, y)) >= -tol for r in rows):
            points.append((x, y))

    if not points:
        core = _infeasible_core(rows, labels)
        raise EmptyRegion(f"no point satisfies constraints {', '.join(map(str, core))}", core)
    return Polygon.from_points(points, eps)


@dataclass(frozen=True)
class Chain:
    """Run of ``count`` consecutive vertices starting at ``start`` (both 1-based)."""

    start: int
    count: int

    def __post_init__(self):
        if self.start < 1 or self.count < 1:
            raise ValueError(f"invalid chain {self}")

    def check(self, polygon: Polygon) -> None:
        if self.start > polygon.n or self.count > polygon.n:
            raise ValueError(f"{self} does not fit a {polygon.n}-gon")

    def indices(self, polygon: Polygon) -> list[int]:
        self.check(polygon)
        return [wrap(polygon.n, self.start + l) for l in range(self.count)]

    def end(self, polygon: Polygon) -> int:
        return wrap(polygon.n, self.start + self.count - 1)

    def __str__(self) -> str:
        return f"S_{self.start}^{self.count}"


def boundary_curve(polygon: Polygon, chain: Chain) -> list[Segment]:
    idx = chain.indices(polygon)
    return [(polygon.vertex(a), polygon.vertex(b)) for a, b in zip(idx, idx[1:])]


def _point_segment_distance(p: Sequence[float], a: Vec, b: Vec) -> float:
    ax, ay = a
    dx, dy = b[0] - ax, b[1] - ay
    L2 = dx * dx + dy * dy
    t = 0.0 if L2 == 0 else max(0.0, min(1.0, ((p[0] - ax) * dx + (p[1] - ay) * dy) / L2))
    return math.hypot(p[0] - (ax + t * dx), p[1] - (ay + t * dy))


def point_on_chain(
    polygon: Polygon, chain: Chain, p: Sequence[float], eps: float = EPS
) -> bool:
    tol = eps * max(1.0, abs(p[0]), abs(p[1]))
    segs = boundary_curve(polygon, chain)
    if not segs:
        v = polygon.vertex(chain.start)
        return math.hypot(p[0] - v[0], p[1] - v[1]) <= tol
    return any(_point_segment_distance(p, a, b) <= tol for a, b in segs)


def edge_angles(
    polygon: Polygon, j: int, branch_center: float = 0.0
) -> tuple[float, float, float, float]:
    """Polar form of the edges entering and leaving ``v^j``.

    Returns ``(theta1, theta2, r1, r2)`` where ``theta1`` is the angle of
    ``v^j - v^(j-1)`` and ``theta2`` that of ``v^(j+1) - v^j``, both in the
    branch around ``branch_center``.
    """
    prev, cur, nxt = polygon.vertex(j - 1), polygon.vertex(j), polygon.vertex(j + 1)
    incoming = to_polar((cur[0] - prev[0], cur[1] - prev[1]), branch_center)
    outgoing = to_polar((nxt[0] - cur[0], nxt[1] - cur[1]), branch_center)
    return incoming.phi, outgoing.phi, incoming.r, outgoing.r
