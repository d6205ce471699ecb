"""Planar primitives shared by every other module.

Screen coordinates: x grows right, y grows down.  Angles are mathematical
(counterclockwise positive), so every trig call negates y.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

Point2 = tuple[float, float]


def distance(a: Point2, b: Point2) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


@dataclass
class Segment:
    a: Point2
    b: Point2


@dataclass
class Rect:
    """Axis-aligned rectangle, top-left anchored."""

    x: float
    y: float
    w: float
    h: float

    @property
    def left(self) -> float:
        return self.x

    @property
    def top(self) -> float:
        return self.y

    @property
    def right(self) -> float:
        return self.x + self.w

    @property
    def bottom(self) -> float:
        return self.y + self.h

    @property
    def center(self) -> Point2:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)

    def contains(self, p: Point2) -> bool:
        return self.left <= p[0] <= self.right and self.top <= p[1] <= self.bottom

    def contains_rect(self, other: "Rect") -> bool:
        return (self.left <= other.left and other.right <= self.right
                and self.top <= other.top and other.bottom <= self.bottom)

    def corners(self) -> list[Point2]:
        """Clockwise from top-left: LT, RT, RB, LB."""
        return [(self.left, self.top), (self.right, self.top),
                (self.right, self.bottom), (self.left, self.bottom)]

    def moved(self, dx: float, dy: float) -> "Rect":
        return Rect(self.x + dx, self.y + dy, self.w, self.h)

    def inflated(self, margin: float) -> "Rect":
        return Rect(self.x - margin, self.y - margin,
                    self.w + 2 * margin, self.h + 2 * margin)

    def copy(self) -> "Rect":
        return Rect(self.x, self.y, self.w, self.h)


def bounds_of_points(pts: list[Point2]) -> Rect:
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return Rect(min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys))


def union_rect(rects: list[Rect]) -> Rect:
    left = min(r.left for r in rects)
    top = min(r.top for r in rects)
    right = max(r.right for r in rects)
    bottom = max(r.bottom for r in rects)
    return Rect(left, top, right - left, bottom - top)


def distance_to_segment(p: Point2, s: Segment) -> tuple[float, Point2]:
    """Distance from p to the segment and the nearest point on it.

    The perpendicular foot is clamped to the segment; a degenerate segment
    acts as the single point s.a.
    """
    ax, ay = s.a
    bx, by = s.b
    vx, vy = bx - ax, by - ay
    seg_len2 = vx * vx + vy * vy
    if seg_len2 == 0.0:
        return distance(p, s.a), s.a
    t = ((p[0] - ax) * vx + (p[1] - ay) * vy) / seg_len2
    t = max(0.0, min(1.0, t))
    foot = (ax + t * vx, ay + t * vy)
    return distance(p, foot), foot


def in_circle(p: Point2, center: Point2, r: float) -> bool:
    """Boundary inclusive."""
    dx = p[0] - center[0]
    dy = p[1] - center[1]
    return dx * dx + dy * dy <= r * r


def in_capsule(p: Point2, s: Segment, r: float) -> bool:
    """Strip with semicircular caps; boundary inclusive."""
    d, _ = distance_to_segment(p, s)
    return d <= r


def in_convex_polygon(p: Point2, vertices: list[Point2]) -> bool:
    """Inside-or-on test for a convex polygon of either winding."""
    n = len(vertices)
    sign = 0
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        cross = (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax)
        if cross > 0:
            if sign < 0:
                return False
            sign = 1
        elif cross < 0:
            if sign > 0:
                return False
            sign = -1
    return True


def point_on_ray(center: Point2, angle: float, dist: float) -> Point2:
    return (center[0] + dist * math.cos(angle),
            center[1] - dist * math.sin(angle))


def ray_angle(center: Point2, p: Point2) -> float:
    """Angle of the ray center->p, range (-pi, pi]."""
    dx = p[0] - center[0]
    dy = p[1] - center[1]
    if dx == 0.0 and dy == 0.0:
        raise ValueError("degenerate ray: point coincides with center")
    a = math.atan2(-dy, dx)
    if a == -math.pi:
        a = math.pi
    return a


def rotate_about(p: Point2, center: Point2, angle: float) -> Point2:
    """Rotate p about center, counterclockwise on screen (y-negated)."""
    vx = p[0] - center[0]
    vy = p[1] - center[1]
    c, s = math.cos(angle), math.sin(angle)
    return (center[0] + vx * c + vy * s,
            center[1] - vx * s + vy * c)


@dataclass
class LinearMap:
    """Affine coordinate <-> value map along one axis."""

    c0: float
    c1: float
    v0: float
    v1: float


def map_value(m: LinearMap, v: float) -> float:
    """Value to coordinate; extrapolates outside [v0, v1]."""
    if m.v1 == m.v0:
        return m.c0
    return m.c0 + (m.c1 - m.c0) * (v - m.v0) / (m.v1 - m.v0)


def unmap(m: LinearMap, c: float) -> float:
    """Coordinate back to value."""
    if m.c1 == m.c0:
        raise ValueError("degenerate map: coordinate endpoints coincide")
    return m.v0 + (m.v1 - m.v0) * (c - m.c0) / (m.c1 - m.c0)


class TextBasis(Enum):
    """The nine marks of a text rectangle, row-major from the top-left."""

    LT = 0
    CT = 1
    RT = 2
    LM = 3
    CM = 4
    RM = 5
    LB = 6
    CB = 7
    RB = 8


_BASIS_FACTORS = {
    TextBasis.LT: (0.0, 0.0), TextBasis.CT: (0.5, 0.0), TextBasis.RT: (1.0, 0.0),
    TextBasis.LM: (0.0, 0.5), TextBasis.CM: (0.5, 0.5), TextBasis.RM: (1.0, 0.5),
    TextBasis.LB: (0.0, 1.0), TextBasis.CB: (0.5, 1.0), TextBasis.RB: (1.0, 1.0),
}


@dataclass
class TextBox:
    width: float
    height: float
    angle: float
    anchor: Point2
    anchor_basis: TextBasis = TextBasis.CM


def text_basis_points(t: TextBox) -> list[Point2]:
    """All nine marks of the rotated rectangle, row-major pre-rotation order.

    The rectangle is rotated by t.angle about the anchor mark, which stays
    fixed at t.anchor.
    """
    fx0, fy0 = _BASIS_FACTORS[t.anchor_basis]
    c, s = math.cos(t.angle), math.sin(t.angle)
    pts = []
    for basis in TextBasis:
        fx, fy = _BASIS_FACTORS[basis]
        vx = (fx - fx0) * t.width
        vy = (fy - fy0) * t.height
        pts.append((t.anchor[0] + vx * c + vy * s,
                    t.anchor[1] - vx * s + vy * c))
    return pts


def text_corners(t: TextBox) -> list[Point2]:
    """The four rotated corners, clockwise from the pre-rotation top-left."""
    pts = text_basis_points(t)
    return [pts[0], pts[2], pts[8], pts[6]]
