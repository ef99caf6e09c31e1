"""Schematic SVG of a polygon, its efficient chain and the gradient cone."""

from __future__ import annotations

from pathlib import Path

from .angles import norm
from .cone import GradientCone, ObjectiveBundle
from .polytope import Chain, Polygon

SIZE = 480
PAD = 48


class FileWriteError(OSError):
    pass


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def render_svg(
    polygon: Polygon, cone: GradientCone, chain: Chain, bundle: ObjectiveBundle
) -> str:
    xs = [p[0] for p in polygon.vertices]
    ys = [p[1] for p in polygon.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    k = (SIZE - 2 * PAD) / span
    x0, y0 = min(xs), min(ys)

    def tx(p):
        return (PAD + (p[0] - x0) * k, SIZE - PAD - (p[1] - y0) * k)

    ring = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in map(tx, polygon.vertices))
    idx = chain.indices(polygon)
    path = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in (tx(polygon.vertex(j)) for j in idx))
    c = polygon.centroid()
    cx, cy = tx(c)
    arrow_len = 0.25 * (SIZE - 2 * PAD)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" '
        f'height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
        "refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#b4235a\"/>"
        "</marker></defs>",
        f'<polygon points="{ring}" fill="#eef2f7" stroke="#475569" stroke-width="1.5"/>',
    ]
    if len(idx) > 1:
        parts.append(
            f'<polyline points="{path}" fill="none" stroke="#2563eb" stroke-width="4" '
            'class="chain"/>'
        )
    for j in idx:
        a, b = tx(polygon.vertex(j))
        parts.append(f'<circle cx="{_fmt(a)}" cy="{_fmt(b)}" r="5" fill="#2563eb" class="efficient"/>')
    for j, p in enumerate(polygon.vertices, start=1):
        a, b = tx(p)
        parts.append(
            f'<text x="{_fmt(a + 7)}" y="{_fmt(b - 7)}" font-family="sans-serif" '
            f'font-size="13">v{j}</text>'
        )
    for k_idx in (cone.k1, cone.k2):
        g = bundle.gradient(k_idx)
        r = norm(g)
        ex, ey = cx + arrow_len * g[0] / r, cy - arrow_len * g[1] / r
        parts.append(
            f'<line x1="{_fmt(cx)}" y1="{_fmt(cy)}" x2="{_fmt(ex)}" y2="{_fmt(ey)}" '
            'stroke="#b4235a" stroke-width="2" marker-end="url(#head)"/>'
        )
        parts.append(
            f'<text x="{_fmt(ex + 4)}" y="{_fmt(ey)}" font-family="sans-serif" '
            f'font-size="12" fill="#b4235a">c{k_idx}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_svg(
    polygon: Polygon, cone: GradientCone, chain: Chain, bundle: ObjectiveBundle, path: str | Path
) -> Path:
    text = render_svg(polygon, cone, chain, bundle)
    path = Path(path)
    try:
        path.write_text(text)
    except OSError as exc:
        raise FileWriteError(f"cannot write {path}: {exc.strerror}") from exc
    return path
