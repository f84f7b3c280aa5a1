"""Deterministic SVG pictures of planar instances.

Coordinates are converted to floats here and only here; nothing drawn feeds
back into a predicate.
"""

from __future__ import annotations


from hefty.applications.chambers import enumerate_chambers
from hefty.applications.levels import Arrangement
from hefty.euclidean import PointSet, enumerate_hefty
from hefty.numeric import GeometryError, Location, circumsphere, point, point_in_simplex
from hefty.spherical import SphericalSet

__all__ = ["render_svg"]

SIZE = 640
MARGIN = 40
PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1")


class _Frame:
    def __init__(self, xs, ys):
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        span = max(self.x1 - self.x0, self.y1 - self.y0) or 1.0
        self.scale = (SIZE - 2 * MARGIN) / span

    def __call__(self, x, y):
        return (MARGIN + (float(x) - self.x0) * self.scale,
                SIZE - MARGIN - (float(y) - self.y0) * self.scale)


def _f(v: float) -> str:
    return f"{v:.2f}"


def _doc(body: list[str], title: str) -> str:
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{title}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _points_svg(ps: PointSet, k=None, query=None, circles=True) -> str:
    if ps.d != 2:
        raise GeometryError("only planar point sets can be rendered")
    simplices = []
    if k is not None:
        simplices = enumerate_hefty(ps, k)
        if query is not None:
            q = point(query)
            simplices = [s for s in simplices
                         if point_in_simplex([ps[i] for i in s.vertices], q) is Location.INTERIOR]
    xs = [float(p[0]) for p in ps]
    ys = [float(p[1]) for p in ps]
    frame = _Frame(xs, ys)
    body = []
    for n, s in enumerate(simplices):
        pts = " ".join(f"{_f(a)},{_f(b)}" for a, b in (frame(*ps[i]) for i in s.vertices))
        colour = PALETTE[n % len(PALETTE)]
        body.append(f'<polygon points="{pts}" fill="{colour}" fill-opacity="0.18" '
                    f'stroke="{colour}" stroke-width="1"/>')
        if circles:
            sph = circumsphere([ps[i] for i in s.vertices])
            cx, cy = frame(*sph.center)
            r = float(sph.squared_radius) ** 0.5 * frame.scale
            body.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" fill="none" '
                        f'stroke="{colour}" stroke-opacity="0.5" stroke-dasharray="4 3"/>')
    for i, p in enumerate(ps):
        x, y = frame(*p)
        body.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="3.5" fill="black"/>')
        body.append(f'<text x="{_f(x + 5)}" y="{_f(y - 5)}" font-size="11" font-family="sans-serif">{i}</text>')
    if query is not None:
        x, y = frame(*point(query))
        body.append(f'<path d="M{_f(x - 5)},{_f(y)} L{_f(x + 5)},{_f(y)} M{_f(x)},{_f(y - 5)} '
                    f'L{_f(x)},{_f(y + 5)}" stroke="red" stroke-width="1.5"/>')
    title = ps.label or "point set"
    if k is not None:
        title += f", {len(simplices)} simplices of heft {k}"
    return _doc(body, title)


def _clip_line(g, c, box):
    """Segment of g.x + c = 0 inside the axis box (x0, x1, y0, y1), as floats."""
    x0, x1, y0, y1 = box
    gx, gy, c = float(g[0]), float(g[1]), float(c)
    pts = []
    if gy != 0:
        for x in (x0, x1):
            y = -(gx * x + c) / gy
            if y0 <= y <= y1:
                pts.append((x, y))
    if gx != 0:
        for y in (y0, y1):
            x = -(gy * y + c) / gx
            if x0 <= x <= x1:
                pts.append((x, y))
    pts = sorted(set(pts))
    return (pts[0], pts[-1]) if len(pts) >= 2 else None


def _arrangement_svg(arr: Arrangement) -> str:
    if arr.d != 2:
        raise GeometryError("only planar arrangements can be rendered")
    chambers = enumerate_chambers(arr)
    wx = [float(c.witness_point[0]) for c in chambers]
    wy = [float(c.witness_point[1]) for c in chambers]
    pad = 0.15 * max(max(wx) - min(wx), max(wy) - min(wy), 1.0)
    box = (min(wx) - pad, max(wx) + pad, min(wy) - pad, max(wy) + pad)
    frame = _Frame([box[0], box[1]], [box[2], box[3]])
    body = []
    m = min(c.heft for c in chambers)
    for f in arr:
        seg = _clip_line(f.gradient, f.offset, box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = seg
        p, q = frame(ax, ay), frame(bx, by)
        body.append(f'<line x1="{_f(p[0])}" y1="{_f(p[1])}" x2="{_f(q[0])}" y2="{_f(q[1])}" '
                    f'stroke="black" stroke-width="1.2"/>')
        # hatch marks on the positive side
        gx, gy = float(f.gradient[0]), float(f.gradient[1])
        norm = (gx * gx + gy * gy) ** 0.5
        hx, hy = gx / norm * 6, -gy / norm * 6
        for t in range(1, 12):
            x = p[0] + (q[0] - p[0]) * t / 12
            y = p[1] + (q[1] - p[1]) * t / 12
            body.append(f'<line x1="{_f(x)}" y1="{_f(y)}" x2="{_f(x + hx)}" y2="{_f(y + hy)}" '
                        f'stroke="#888" stroke-width="0.8"/>')
    for c in chambers:
        x, y = frame(*c.witness_point)
        weight = "bold" if c.heft == m else "normal"
        colour = "#c0392b" if c.heft == m else "#333"
        body.append(f'<text x="{_f(x)}" y="{_f(y)}" font-size="12" font-family="sans-serif" '
                    f'font-weight="{weight}" fill="{colour}" text-anchor="middle">{c.heft}</text>')
    count = sum(1 for c in chambers if c.heft == m)
    return _doc(body, f"{arr.label or 'arrangement'}: {count} chambers of minimum heft {m}")


def _circle_svg(ss: SphericalSet, k=None) -> str:
    if ss.d != 1:
        raise GeometryError("only sets on the circle can be rendered")
    centre, radius = SIZE / 2, SIZE / 2 - MARGIN
    body = [f'<circle cx="{_f(centre)}" cy="{_f(centre)}" r="{_f(radius)}" fill="none" stroke="#555"/>']
    units = [tuple(float(x) for x in p.unit()) for p in ss.points]
    if k is not None:
        for n, s in enumerate(x for x in ss.table if x.heft == k):
            (ax, ay), (bx, by) = (units[i] for i in s.vertices)
            colour = PALETTE[n % len(PALETTE)]
            body.append(f'<line x1="{_f(centre + ax * radius)}" y1="{_f(centre - ay * radius)}" '
                        f'x2="{_f(centre + bx * radius)}" y2="{_f(centre - by * radius)}" '
                        f'stroke="{colour}" stroke-width="2"/>')
    for i, (x, y) in enumerate(units):
        px, py = centre + x * radius, centre - y * radius
        body.append(f'<circle cx="{_f(px)}" cy="{_f(py)}" r="3.5" fill="black"/>')
        body.append(f'<text x="{_f(px + 6)}" y="{_f(py - 6)}" font-size="11" font-family="sans-serif">{i}</text>')
    return _doc(body, ss.label or "points on the circle")


def render_svg(instance, k=None, query=None) -> str:
    """SVG for a planar point set, a planar arrangement or a set on S^1.

    ``k`` overlays the simplices of that heft (with circumcircles); ``query``
    keeps only those containing it.
    """
    if isinstance(instance, PointSet):
        return _points_svg(instance, k, query)
    if isinstance(instance, Arrangement):
        return _arrangement_svg(instance)
    if isinstance(instance, SphericalSet):
        return _circle_svg(instance, k)
    if hasattr(instance, "locations"):
        return _points_svg(instance.locations, k, query, circles=False)
    raise GeometryError(f"cannot render {type(instance).__name__}")
