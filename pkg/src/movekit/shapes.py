"""Primitive movable objects and their covers.

Rectangles grab by corners, side bands, and body; curved borders grab
through chains of small nodes; texts rotate about their red mark.
"""
from __future__ import annotations

import math

from .cover import (Cover, CoverNode, CursorHint, NodeBehaviour, ShapeKind,
                    circle_node, polygon_node, strip_node)
from .geometry import (Point2, Rect, TextBasis, TextBox, bounds_of_points,
                       distance, point_on_ray, ray_angle, text_corners)
from .scene import MouseButton, SceneObject

CORNER_RADIUS = 6.0
SIDE_HALF_WIDTH = 3.0        # the six-pixel sensitive band on rect sides
SMALL_NODE_RADIUS = 5.0      # border circles on curved borders
NEIGHBOUR_SPACING = 8.0      # max gap between border node centers
RING_BAND_HALF = 5.0         # ring border trapezoids reach this far in/out
MIN_RECT_SIZE = 16.0
MIN_CIRCLE_RADIUS = 10.0
MIN_INNER_RADIUS = 10.0
MIN_RING_WIDTH = 10.0

_CORNER_CURSORS = [CursorHint.SIZE_NWSE, CursorHint.SIZE_NESW,
                   CursorHint.SIZE_NWSE, CursorHint.SIZE_NESW]


def border_node_count(radius: float, spacing: float = NEIGHBOUR_SPACING) -> int:
    """Banker's rounding, like the integer conversion the covers grew up with."""
    return max(1, round(2.0 * math.pi * radius / spacing))


# resizable rectangle


class ResizableRect(SceneObject):
    type_tag = "rect"

    def __init__(self, x: float, y: float, w: float, h: float,
                 min_size: tuple[float, float] = (MIN_RECT_SIZE, MIN_RECT_SIZE),
                 max_size: tuple[float, float] = (math.inf, math.inf),
                 color: str = "silver"):
        super().__init__()
        self.rect = Rect(x, y, w, h)
        self.min_size = min_size
        self.max_size = max_size
        self.color = color

    def _cover(self) -> Cover:
        return rect_cover(self.rect)

    def move(self, dx: float, dy: float) -> None:
        self.rect = self.rect.moved(dx, dy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        return rect_move_node(self, ordinal, dx, dy)

    def bounds(self) -> Rect:
        return self.rect.copy()

    # per-axis edge adjustments, each gated by the min/max size

    def _resize_left(self, dx: float) -> bool:
        new_w = self.rect.w - dx
        if not self.min_size[0] <= new_w <= self.max_size[0]:
            return False
        self.rect.x += dx
        self.rect.w = new_w
        return True

    def _resize_right(self, dx: float) -> bool:
        new_w = self.rect.w + dx
        if not self.min_size[0] <= new_w <= self.max_size[0]:
            return False
        self.rect.w = new_w
        return True

    def _resize_top(self, dy: float) -> bool:
        new_h = self.rect.h - dy
        if not self.min_size[1] <= new_h <= self.max_size[1]:
            return False
        self.rect.y += dy
        self.rect.h = new_h
        return True

    def _resize_bottom(self, dy: float) -> bool:
        new_h = self.rect.h + dy
        if not self.min_size[1] <= new_h <= self.max_size[1]:
            return False
        self.rect.h = new_h
        return True


def rect_cover(rect: Rect) -> Cover:
    """Nine nodes: corner circles, side strips, body polygon, in that order."""
    lt, rt, rb, lb = rect.corners()
    nodes: list[CoverNode] = []
    for i, c in enumerate((lt, rt, rb, lb)):
        nodes.append(circle_node(i, c, CORNER_RADIUS, cursor=_CORNER_CURSORS[i]))
    nodes.append(strip_node(4, lt, lb, SIDE_HALF_WIDTH, cursor=CursorHint.SIZE_WE))
    nodes.append(strip_node(5, lt, rt, SIDE_HALF_WIDTH, cursor=CursorHint.SIZE_NS))
    nodes.append(strip_node(6, rt, rb, SIDE_HALF_WIDTH, cursor=CursorHint.SIZE_WE))
    nodes.append(strip_node(7, lb, rb, SIDE_HALF_WIDTH, cursor=CursorHint.SIZE_NS))
    nodes.append(polygon_node(8, [lt, rt, rb, lb], cursor=CursorHint.SIZE_ALL))
    return Cover(nodes)


def rect_move_node(r: ResizableRect, ordinal: int, dx: float, dy: float) -> bool:
    """Corner nodes resize both axes independently; sides one; body moves."""
    if ordinal == 0:
        return r._resize_left(dx) | r._resize_top(dy)
    if ordinal == 1:
        return r._resize_right(dx) | r._resize_top(dy)
    if ordinal == 2:
        return r._resize_right(dx) | r._resize_bottom(dy)
    if ordinal == 3:
        return r._resize_left(dx) | r._resize_bottom(dy)
    if ordinal == 4:
        return r._resize_left(dx)
    if ordinal == 5:
        return r._resize_top(dy)
    if ordinal == 6:
        return r._resize_right(dx)
    if ordinal == 7:
        return r._resize_bottom(dy)
    r.move(dx, dy)
    return True


class Barrier(SceneObject):
    """A wall: senses the pointer, blocks everything beneath, moves never."""

    type_tag = "barrier"

    def __init__(self, x, y, w, h, color: str = "gray"):
        super().__init__()
        self.rect = Rect(x, y, w, h)
        self.color = color

    def _cover(self) -> Cover:
        return Cover([polygon_node(0, self.rect.corners(),
                                   behaviour=NodeBehaviour.NONMOVEABLE,
                                   cursor=CursorHint.DEFAULT)])

    def move(self, dx, dy):
        self.rect = self.rect.moved(dx, dy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        return False

    def bounds(self) -> Rect:
        return self.rect.copy()


# rectangle with one sliding side


class OneSideRect(SceneObject):
    """Fixed track with a single horizontal side sliding inside it."""

    type_tag = "one_side_rect"

    def __init__(self, x, y, w, h, slider_coord: float | None = None,
                 color: str = "lightsteelblue"):
        super().__init__()
        self.track = Rect(x, y, w, h)
        self.slider_coord = self.track.top if slider_coord is None else slider_coord

    def _cover(self) -> Cover:
        t = self.track
        return Cover([
            strip_node(0, (t.left, self.slider_coord), (t.right, self.slider_coord),
                       SIDE_HALF_WIDTH, cursor=CursorHint.SIZE_NS),
            polygon_node(1, t.corners(), cursor=CursorHint.SIZE_ALL),
        ])

    def move(self, dx, dy):
        self.track = self.track.moved(dx, dy)
        self.slider_coord += dy

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if ordinal == 0:
            new_c = self.slider_coord + dy
            if not self.track.top <= new_c <= self.track.bottom:
                return False
            self.slider_coord = new_c
            return True
        self.move(dx, dy)
        return True

    def bounds(self) -> Rect:
        return self.track.copy()


# N-node circle


class CircleNR(SceneObject):
    type_tag = "circle"

    def __init__(self, cx: float, cy: float, radius: float,
                 min_radius: float = MIN_CIRCLE_RADIUS, color: str = "khaki"):
        super().__init__()
        self.center: Point2 = (cx, cy)
        self.radius = radius
        self.min_radius = min_radius
        self.color = color

    def _cover(self) -> Cover:
        return nnode_circle_cover(self)

    def move(self, dx, dy):
        self.center = (self.center[0] + dx, self.center[1] + dy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if ordinal == 0:
            self.move(dx, dy)
            return True
        new_r = distance(self.center, p)
        if new_r < self.min_radius:
            return False
        self.radius = new_r
        return True

    def bounds(self) -> Rect:
        r = self.radius
        return Rect(self.center[0] - r, self.center[1] - r, 2 * r, 2 * r)

    def reference_point(self) -> Point2:
        return self.center


def nnode_circle_cover(c: CircleNR) -> Cover:
    """Big inner move node, then a chain of small circles on the border."""
    nodes = [circle_node(0, c.center, c.radius - SMALL_NODE_RADIUS + 1,
                         cursor=CursorHint.SIZE_ALL, clearance=False)]
    k = border_node_count(c.radius)
    for i in range(k):
        center = point_on_ray(c.center, 2.0 * math.pi * i / k, c.radius)
        nodes.append(circle_node(i + 1, center, SMALL_NODE_RADIUS,
                                 cursor=CursorHint.HAND))
    return Cover(nodes)


# ring


def _band_trapezoids(center: Point2, radius: float, first_ordinal: int,
                     cursor: CursorHint = CursorHint.HAND) -> list[CoverNode]:
    """Contiguous trapezoids straddling a circular border."""
    k = border_node_count(radius)
    r_in = radius - RING_BAND_HALF
    r_out = radius + RING_BAND_HALF
    nodes = []
    for i in range(k):
        a0 = 2.0 * math.pi * i / k
        a1 = 2.0 * math.pi * (i + 1) / k
        verts = [point_on_ray(center, a0, r_in), point_on_ray(center, a1, r_in),
                 point_on_ray(center, a1, r_out), point_on_ray(center, a0, r_out)]
        nodes.append(polygon_node(first_ordinal + i, verts, cursor=cursor))
    return nodes


class RingShape(SceneObject):
    type_tag = "ring"

    def __init__(self, cx: float, cy: float, r_inner: float, r_outer: float,
                 color: str = "thistle"):
        super().__init__()
        self.center: Point2 = (cx, cy)
        self.r_inner = r_inner
        self.r_outer = r_outer
        self.color = color
        # set by a containing ring set; gates border growth into a neighbour
        self.inward_neighbor: RingShape | None = None
        self.outward_neighbor: RingShape | None = None
        self.move_delegate = None

    def _cover(self) -> Cover:
        return ring_cover(self)

    def inner_node_count(self) -> int:
        return border_node_count(self.r_inner)

    def outer_node_count(self) -> int:
        return border_node_count(self.r_outer)

    def move(self, dx, dy):
        if self.move_delegate is not None:
            self.move_delegate(dx, dy)
        else:
            self.center = (self.center[0] + dx, self.center[1] + dy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        n_in = self.inner_node_count()
        n_out = self.outer_node_count()
        if ordinal < n_in:
            new_r = distance(self.center, p)
            low = MIN_INNER_RADIUS
            if self.inward_neighbor is not None:
                low = max(low, self.inward_neighbor.r_outer)
            if not low <= new_r <= self.r_outer - MIN_RING_WIDTH:
                return False
            self.r_inner = new_r
            return True
        if ordinal < n_in + n_out:
            new_r = distance(self.center, p)
            high = math.inf
            if self.outward_neighbor is not None:
                high = self.outward_neighbor.r_inner
            if not self.r_inner + MIN_RING_WIDTH <= new_r <= high:
                return False
            self.r_outer = new_r
            return True
        if ordinal == n_in + n_out + 1:
            self.move(dx, dy)
            return True
        return False

    def bounds(self) -> Rect:
        r = self.r_outer
        return Rect(self.center[0] - r, self.center[1] - r, 2 * r, 2 * r)

    def reference_point(self) -> Point2:
        return self.center


def ring_cover(g: RingShape) -> Cover:
    """Inner border band first, outer band, hole cut-out, then the move node.

    Inner-before-outer keeps a shared border of two touching rings movable
    only inward: the outer ring's inner band wins the scan there.
    """
    nodes = _band_trapezoids(g.center, g.r_inner, 0)
    nodes += _band_trapezoids(g.center, g.r_outer, len(nodes))
    k = len(nodes)
    nodes.append(circle_node(k, g.center, max(1.0, g.r_inner - RING_BAND_HALF),
                             behaviour=NodeBehaviour.TRANSPARENT,
                             cursor=CursorHint.DEFAULT, clearance=False))
    nodes.append(circle_node(k + 1, g.center, g.r_outer,
                             cursor=CursorHint.SIZE_ALL, clearance=False))
    return Cover(nodes)


# sector


class SectorShape(SceneObject):
    type_tag = "sector"

    def __init__(self, cx: float, cy: float, radius: float, start_angle: float,
                 sweep: float, min_radius: float = MIN_CIRCLE_RADIUS,
                 color: str = "lightgreen"):
        if not 0 < sweep <= 2 * math.pi:
            raise ValueError("sector sweep must be in (0, 2*pi]")
        super().__init__()
        self.center: Point2 = (cx, cy)
        self.radius = radius
        self.start_angle = start_angle
        self.sweep = sweep
        self.min_radius = min_radius
        self.color = color

    def _cover(self) -> Cover:
        return sector_cover(self)

    def arc_node_count(self) -> int:
        return max(2, round(self.sweep * self.radius / NEIGHBOUR_SPACING) + 1)

    def move(self, dx, dy):
        self.center = (self.center[0] + dx, self.center[1] + dy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if ordinal < self.arc_node_count():
            new_r = distance(self.center, p)
            if new_r < self.min_radius:
                return False
            self.radius = new_r
            return True
        # transparent masks are never caught; the remaining node moves
        self.move(dx, dy)
        return True

    def bounds(self) -> Rect:
        r = self.radius
        return Rect(self.center[0] - r, self.center[1] - r, 2 * r, 2 * r)

    def reference_point(self) -> Point2:
        return self.center


def _wedge_mask(center: Point2, a_from: float, a_to: float, reach: float,
                ordinal: int) -> CoverNode:
    """Convex polygon covering the wedge [a_from, a_to] out past reach."""
    span = a_to - a_from
    steps = max(1, math.ceil(span / (math.pi / 3)))
    rim = reach / math.cos(span / steps / 2)  # chords stay outside reach
    verts = [center]
    for i in range(steps + 1):
        verts.append(point_on_ray(center, a_from + span * i / steps, rim))
    return polygon_node(ordinal, verts, behaviour=NodeBehaviour.TRANSPARENT,
                        cursor=CursorHint.DEFAULT)


def sector_cover(s: SectorShape) -> Cover:
    """Arc border circles, transparent masks over the cut region, move node."""
    nodes: list[CoverNode] = []
    n = s.arc_node_count()
    for i in range(n):
        a = s.start_angle + s.sweep * i / (n - 1)
        nodes.append(circle_node(i, point_on_ray(s.center, a, s.radius),
                                 SMALL_NODE_RADIUS, cursor=CursorHint.HAND))
    excluded = 2 * math.pi - s.sweep
    if excluded > 1e-9:
        a0 = s.start_angle + s.sweep
        reach = s.radius + SMALL_NODE_RADIUS + 1
        if excluded <= math.pi:
            nodes.append(_wedge_mask(s.center, a0, a0 + excluded, reach, len(nodes)))
        else:
            half = excluded / 2
            nodes.append(_wedge_mask(s.center, a0, a0 + half, reach, len(nodes)))
            nodes.append(_wedge_mask(s.center, a0 + half, a0 + excluded, reach,
                                     len(nodes)))
    nodes.append(circle_node(len(nodes), s.center, s.radius,
                             cursor=CursorHint.SIZE_ALL, clearance=False))
    return Cover(nodes)


# rotatable text


class TextRM(SceneObject):
    """A text rectangle that rotates about its red mark on a right drag."""

    type_tag = "text"
    supports_rotation = True

    def __init__(self, text: str, anchor: Point2, width: float, height: float,
                 angle: float = 0.0, rotation_anchor: TextBasis = TextBasis.CM,
                 color: str = "black"):
        super().__init__()
        self.text = text
        self.box = TextBox(max(1.0, width), max(1.0, height), angle, anchor,
                           rotation_anchor)
        self.color = color
        self._rot_offset = 0.0

    @property
    def rotation_anchor(self) -> TextBasis:
        return self.box.anchor_basis

    def set_rotation_anchor(self, mark: TextBasis) -> None:
        """Re-anchors the box at the new red mark without moving it."""
        from .geometry import text_basis_points
        pts = text_basis_points(self.box)
        self.box.anchor = pts[mark.value]
        self.box.anchor_basis = mark

    def _cover(self) -> Cover:
        return textrm_cover(self)

    def move(self, dx, dy):
        self.box.anchor = (self.box.anchor[0] + dx, self.box.anchor[1] + dy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move(dx, dy)
        return True

    def start_rotation(self, p: Point2) -> None:
        try:
            self._rot_offset = self.box.angle - ray_angle(self.box.anchor, p)
        except ValueError:
            self._rot_offset = self.box.angle

    def rotate_step(self, p: Point2) -> bool:
        if not self.movable:
            return False
        try:
            self.box.angle = self._rot_offset + ray_angle(self.box.anchor, p)
        except ValueError:
            return False
        return True

    def bounds(self) -> Rect:
        return bounds_of_points(text_corners(self.box))

    def reference_point(self) -> Point2:
        return self.box.anchor


def textrm_cover(t: TextRM) -> Cover:
    return Cover([polygon_node(0, text_corners(t.box), cursor=CursorHint.SIZE_ALL)])


def textrm_rotate(t: TextRM, pointer: Point2) -> bool:
    """One rotation step of an already-started right-button drag."""
    return t.rotate_step(pointer)
