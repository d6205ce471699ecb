"""Composite chart objects: plots with scales and comments, pie charts,
sectored rings with sliding partitions, and bar charts built from single
adjustable bars.

Scales derive their bands from the parent area, comments remember
normalized or radial placement coefficients, so any resize of the parent
puts every member back where it belongs.
"""
from __future__ import annotations

import math
from enum import Enum

from .cover import (Cover, CursorHint, NodeBehaviour, circle_node,
                    polygon_node, strip_node)
from .geometry import (LinearMap, Point2, Rect, distance, map_value,
                       point_on_ray, ray_angle, text_basis_points, unmap)
from .mover import Mover
from .scene import MouseButton, SceneObject, fresh_id
from .shapes import (CORNER_RADIUS, SIDE_HALF_WIDTH, CircleNR, ResizableRect,
                     RingShape, TextRM, _CORNER_CURSORS, border_node_count,
                     rect_move_node)

PLOT_MIN_SIZE = (40.0, 40.0)
MIN_SECTOR_SWEEP = 0.05
PARTITION_HALF_WIDTH = 3.0
SINGLE_BAR_MIN_BODY = 2.0


class ScaleDirection(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class ScaleObj(SceneObject):
    """One rectangular band along a plot border, movable only athwart."""

    type_tag = "scale"

    def __init__(self, parent, direction: ScaleDirection, thickness: float = 20.0,
                 offset_from_area: float | None = None,
                 value_range: tuple[float, float] = (0.0, 1.0)):
        super().__init__()
        self.parent = parent
        self.parent_id = parent.id
        self.direction = direction
        self.thickness = thickness
        if offset_from_area is None:
            offset_from_area = 0.0 if direction is ScaleDirection.HORIZONTAL \
                else -thickness
        self.offset_from_area = offset_from_area
        self.value_range = value_range

    @property
    def band(self) -> Rect:
        a = self.parent.rect
        if self.direction is ScaleDirection.HORIZONTAL:
            return Rect(a.left, a.bottom + self.offset_from_area, a.w,
                        self.thickness)
        return Rect(a.left + self.offset_from_area, a.top, self.thickness, a.h)

    def frozen_cursor(self) -> CursorHint:
        return CursorHint.HAND

    def _cover(self) -> Cover:
        return Cover([polygon_node(0, self.band.corners(),
                                   cursor=CursorHint.HAND)])

    def move(self, dx, dy):
        if self.direction is ScaleDirection.HORIZONTAL:
            self.offset_from_area += dy
        else:
            self.offset_from_area += dx

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move(dx, dy)
        return True

    def bounds(self) -> Rect:
        return self.band


class AnchoredComment(TextRM):
    """A text riding a plot area or a scale band at fixed relative spot."""

    type_tag = "comment"

    def __init__(self, text, parent, u: float = 0.5, v: float = 0.5,
                 width: float = 60.0, height: float = 14.0, angle: float = 0.0):
        r = _parent_rect(parent)
        super().__init__(text, (r.left + u * r.w, r.top + v * r.h),
                         width, height, angle)
        self.parent = parent
        self.parent_id = parent.id
        self.u = u
        self.v = v
        self.reposition()

    def _center(self) -> Point2:
        return text_basis_points(self.box)[4]

    def capture_uv(self) -> None:
        r = _parent_rect(self.parent)
        cx, cy = self._center()
        self.u = (cx - r.left) / r.w
        self.v = (cy - r.top) / r.h

    def reposition(self) -> None:
        r = _parent_rect(self.parent)
        cx, cy = self._center()
        tx = r.left + self.u * r.w
        ty = r.top + self.v * r.h
        self.box.anchor = (self.box.anchor[0] + tx - cx,
                           self.box.anchor[1] + ty - cy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        accepted = super().move_node(ordinal, dx, dy, p, button)
        if accepted:
            self.capture_uv()
        return accepted

    def rotate_step(self, p) -> bool:
        accepted = super().rotate_step(p)
        if accepted:
            self.capture_uv()
        return accepted


def _parent_rect(parent) -> Rect:
    if isinstance(parent, ScaleObj):
        return parent.band
    return parent.rect


class CornerHelper(SceneObject):
    """Duplicates the four corner nodes of a plot area.

    Sits ahead of all the scales in the queue, so the corners stay
    reachable even when a scale band lies over the area border.
    """

    type_tag = "corner_helper"

    def __init__(self, plot: "PlotComposite"):
        super().__init__()
        self.plot = plot
        self.parent_id = plot.id

    def _cover(self) -> Cover:
        nodes = [circle_node(i, c, CORNER_RADIUS, cursor=_CORNER_CURSORS[i])
                 for i, c in enumerate(self.plot.rect.corners())]
        return Cover(nodes)

    def move(self, dx, dy):
        pass

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        return corner_helper_resize(self.plot, ordinal, dx, dy)

    def bounds(self) -> Rect:
        return self.plot.bounds()


class PlotComposite(ResizableRect):
    """The main plotting area owning its scales, comments, and helper."""

    type_tag = "plot"

    def __init__(self, x, y, w, h, color: str = "white"):
        super().__init__(x, y, w, h, min_size=PLOT_MIN_SIZE, color=color)
        self.h_scales: list[ScaleObj] = []
        self.v_scales: list[ScaleObj] = []
        self.comments: list[AnchoredComment] = []
        self.helper = CornerHelper(self)

    def add_scale(self, direction: ScaleDirection, **kw) -> ScaleObj:
        s = ScaleObj(self, direction, **kw)
        if direction is ScaleDirection.HORIZONTAL:
            self.h_scales.append(s)
        else:
            self.v_scales.append(s)
        return s

    def add_comment(self, text, parent=None, **kw) -> AnchoredComment:
        c = AnchoredComment(text, parent if parent is not None else self, **kw)
        self.comments.append(c)
        return c

    def comments_of(self, parent) -> list[AnchoredComment]:
        return [c for c in self.comments if c.parent is parent]

    def sync_members(self) -> None:
        for c in self.comments:
            c.reposition()

    def move(self, dx, dy):
        super().move(dx, dy)
        self.sync_members()

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        accepted = super().move_node(ordinal, dx, dy, p, button)
        if accepted:
            self.sync_members()
        return accepted


def plot_into_mover(p: PlotComposite, mover: Mover, pos: int) -> int:
    """Registers the visible members, helper first, the area last.

    Returns the number of registrations.
    """
    if not p.effectively_visible:
        return 0
    seq: list[SceneObject] = [p.helper]
    live_scales = []
    for s in p.v_scales + p.h_scales:
        if s.effectively_visible:
            seq.append(s)
            live_scales.append(s)
    for c in p.comments:
        if not c.effectively_visible:
            continue
        if isinstance(c.parent, ScaleObj) and c.parent not in live_scales:
            continue
        seq.append(c)
    seq.append(p)
    for i, obj in enumerate(seq):
        mover.insert(pos + i, obj)
    return len(seq)


def corner_helper_resize(p: PlotComposite, corner: int, dx: float,
                         dy: float) -> bool:
    if not 0 <= corner < 4:
        raise IndexError("bad corner")
    accepted = rect_move_node(p, corner, dx, dy)
    if accepted:
        p.sync_members()
    return accepted


def scale_move(s: ScaleObj, dx: float, dy: float) -> bool:
    if not s.movable:
        return False
    s.move(dx, dy)
    return True


def set_visible(target, flag: bool) -> None:
    """Flips the object's own flag and cascades membership visibility."""
    target.visible = flag
    if isinstance(target, PlotComposite):
        for s in target.v_scales + target.h_scales:
            s.visible_as_member = flag
            _forward_scale_visibility(target, s)
        for c in target.comments_of(target):
            c.visible_as_member = flag
    elif isinstance(target, ScaleObj):
        plot = target.parent
        _forward_scale_visibility(plot, target)


def _forward_scale_visibility(plot: PlotComposite, s: ScaleObj) -> None:
    shown = s.visible and s.visible_as_member
    for c in plot.comments_of(s):
        c.visible_as_member = shown


def identify(plots: list[PlotComposite], obj) -> dict:
    """Ownership path of a chart-family object down from the plot list."""
    for i, p in enumerate(plots):
        if obj is p or obj is p.helper:
            return {"plot": i}
        for kind, scales in (("vertical", p.v_scales),
                             ("horizontal", p.h_scales)):
            for j, s in enumerate(scales):
                if obj is s:
                    return {"plot": i, "scale_kind": kind, "scale": j}
        for c in p.comments:
            if obj is not c:
                continue
            if isinstance(c.parent, ScaleObj):
                s = c.parent
                kind = "horizontal" if s.direction is ScaleDirection.HORIZONTAL \
                    else "vertical"
                scales = p.h_scales if kind == "horizontal" else p.v_scales
                return {"plot": i, "scale_kind": kind,
                        "scale": scales.index(s),
                        "comment": p.comments_of(s).index(c)}
            return {"plot": i, "comment": p.comments_of(p).index(c)}
    raise LookupError("unknown owner")


# radial comments


class RadialMode(Enum):
    TO_CIRCLE = "to_circle"
    TO_SECTOR = "to_sector"
    TO_RING = "to_ring"


class RadialComment(TextRM):
    """A text holding its place relative to a circle, sector, or ring.

    Inside the parent the position is a dimensionless coefficient, outside
    it is a pixel offset from the border; the flag tells the two apart when
    the coefficient equals one.
    """

    type_tag = "radial_comment"

    def __init__(self, text, mode: RadialMode, coef: float = 0.5,
                 anchor_angle: float = 0.0, inside: bool = True,
                 width: float = 50.0, height: float = 14.0):
        super().__init__(text, (0.0, 0.0), width, height)
        self.mode = mode
        self.coef = coef
        self.anchor_angle = anchor_angle  # for sectors: from the sector start
        self.inside = inside


def radial_comment_sync(c: RadialComment, center: Point2,
                        radius: float | None = None,
                        sector_start: float = 0.0,
                        r_inner: float | None = None,
                        r_outer: float | None = None) -> Point2:
    """Recomputes the anchor point for the parent's current geometry."""
    angle = c.anchor_angle
    if c.mode is RadialMode.TO_SECTOR:
        angle += sector_start
    if c.mode is RadialMode.TO_RING:
        if c.inside:
            if c.coef <= 0:
                d = (1.0 + c.coef) * r_inner
            else:
                d = r_inner + c.coef * (r_outer - r_inner)
        else:
            d = r_outer + c.coef
    else:
        d = c.coef * radius if c.inside else radius + c.coef
    p = point_on_ray(center, angle, d)
    c.box.anchor = p
    return p


def radial_comment_capture(c: RadialComment, center: Point2,
                           radius: float | None = None,
                           sector_start: float = 0.0,
                           r_inner: float | None = None,
                           r_outer: float | None = None) -> None:
    """Reads coef, angle, and side back from the comment's current spot."""
    p = c.box.anchor
    d = distance(center, p)
    angle = ray_angle(center, p) if d > 0 else 0.0
    if c.mode is RadialMode.TO_SECTOR:
        angle -= sector_start
    c.anchor_angle = angle
    if c.mode is RadialMode.TO_RING:
        if d <= r_inner:
            c.inside, c.coef = True, d / r_inner - 1.0
        elif d <= r_outer:
            c.inside, c.coef = True, (d - r_inner) / (r_outer - r_inner)
        else:
            c.inside, c.coef = False, max(1.0, d - r_outer)
    else:
        if d <= radius:
            c.inside, c.coef = True, d / radius
        else:
            c.inside, c.coef = False, max(1.0, d - radius)


# pie chart


def pie_sweeps(values: list[float]) -> list[float]:
    if any(v < 0 for v in values):
        raise ValueError("negative value")
    total = sum(values)
    if total == 0:
        raise ValueError("all values are zero")
    return [2.0 * math.pi * v / total for v in values]


def _easy_flip(angle: float) -> float:
    folded = angle % (2.0 * math.pi)
    if math.pi / 2 < folded < 3 * math.pi / 2:
        return angle + math.pi
    return angle


class PieChartObj(CircleNR):
    type_tag = "pie"

    supports_rotation = True

    def __init__(self, cx, cy, radius, values: list[float], phase: float = 0.0,
                 fix_angles_on_rotation: bool = False, easy_to_read: bool = True,
                 colors: list[str] | None = None):
        super().__init__(cx, cy, radius)
        pie_sweeps(values)  # rejects bad inputs early
        self.values = list(values)
        self.phase = phase
        self.fix_angles_on_rotation = fix_angles_on_rotation
        self.easy_to_read = easy_to_read
        self.colors = colors or []
        self.sector_comments: list[RadialComment] = []
        self.circle_comments: list[RadialComment] = []
        self._last_rot_angle = 0.0

    @property
    def sweeps(self) -> list[float]:
        return pie_sweeps(self.values)

    def sector_start(self, i: int) -> float:
        return self.phase + sum(self.sweeps[:i])

    def add_sector_comment(self, i: int, text: str, coef: float = 0.7) -> RadialComment:
        c = RadialComment(text, RadialMode.TO_SECTOR, coef=coef,
                          anchor_angle=self.sweeps[i] / 2)
        c.parent_id = self.id
        self.sector_comments.append(c)
        radial_comment_sync(c, self.center, self.radius,
                            sector_start=self.sector_start(i))
        return c

    def add_circle_comment(self, text: str, coef: float, angle: float,
                           inside: bool = True) -> RadialComment:
        c = RadialComment(text, RadialMode.TO_CIRCLE, coef=coef,
                          anchor_angle=angle, inside=inside)
        c.parent_id = self.id
        self.circle_comments.append(c)
        radial_comment_sync(c, self.center, self.radius)
        return c

    def sync_comments(self) -> None:
        for i, c in enumerate(self.sector_comments):
            radial_comment_sync(c, self.center, self.radius,
                                sector_start=self.sector_start(i))
        for c in self.circle_comments:
            radial_comment_sync(c, self.center, self.radius)

    def move(self, dx, dy):
        super().move(dx, dy)
        self.sync_comments()

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        accepted = super().move_node(ordinal, dx, dy, p, button)
        if accepted:
            self.sync_comments()
        return accepted

    def start_rotation(self, p: Point2) -> None:
        try:
            self._last_rot_angle = ray_angle(self.center, p)
        except ValueError:
            self._last_rot_angle = 0.0

    def rotate_step(self, p: Point2) -> bool:
        if not self.movable:
            return False
        try:
            a = ray_angle(self.center, p)
        except ValueError:
            return False
        step = a - self._last_rot_angle
        step = (step + math.pi) % (2.0 * math.pi) - math.pi
        self._last_rot_angle = a
        pie_rotate(self, step)
        return True


def pie_rotate(p: PieChartObj, dphi: float) -> None:
    """Turns the whole pie; texts follow or stay per the two options."""
    p.phase += dphi
    if not p.fix_angles_on_rotation:
        for c in p.sector_comments:
            a = c.box.angle + dphi
            if p.easy_to_read:
                a = _easy_flip(a)
            c.box.angle = a
    for i, c in enumerate(p.sector_comments):
        radial_comment_sync(c, p.center, p.radius,
                            sector_start=p.sector_start(i))


def sector_texts_to_center(p: PieChartObj) -> None:
    """Points every sector text along its own radius, kept readable."""
    for i, c in enumerate(p.sector_comments):
        a = p.sector_start(i) + c.anchor_angle
        c.box.angle = _easy_flip(a)


# sectored rings and resectoring


class ResectorState:
    def __init__(self, boundary_index, cw_index, ccw_index, min_angle,
                 max_angle, pair_sum):
        self.boundary_index = boundary_index
        self.cw_index = cw_index
        self.ccw_index = ccw_index
        self.min_angle = min_angle
        self.max_angle = max_angle
        self.pair_sum = pair_sum


class SectoredRing(RingShape):
    """A ring split into sectors whose radial partitions slide."""

    type_tag = "sectored_ring"

    supports_rotation = True

    def __init__(self, cx, cy, r_inner, r_outer, values: list[float],
                 phase: float = 0.0, colors: list[str] | None = None):
        super().__init__(cx, cy, r_inner, r_outer)
        pie_sweeps(values)
        self.values = list(values)
        self.phase = phase
        self.colors = colors or []
        self.comments: list[RadialComment] = []
        self._resector: ResectorState | None = None
        self._last_rot_angle = 0.0

    @property
    def sweeps(self) -> list[float]:
        return pie_sweeps(self.values)

    def boundary_angle(self, i: int) -> float:
        return self.phase + sum(self.sweeps[:i])

    def strip_block_start(self) -> int:
        return self.inner_node_count() + self.outer_node_count()

    def _cover(self) -> Cover:
        base = super()._cover()
        trapezoids = list(base.nodes[:self.strip_block_start()])
        n = len(self.values)
        nodes = trapezoids
        for i in range(n):
            a = self.boundary_angle(i)
            nodes.append(strip_node(
                len(nodes), point_on_ray(self.center, a, self.r_inner),
                point_on_ray(self.center, a, self.r_outer),
                PARTITION_HALF_WIDTH, cursor=CursorHint.HAND))
        k = len(nodes)
        hole, big = base.nodes[-2], base.nodes[-1]
        nodes.append(circle_node(k, hole.center, hole.radius,
                                 behaviour=NodeBehaviour.TRANSPARENT,
                                 cursor=CursorHint.DEFAULT, clearance=False))
        nodes.append(circle_node(k + 1, big.center, big.radius,
                                 cursor=CursorHint.SIZE_ALL, clearance=False))
        return Cover(nodes)

    def add_ring_comment(self, text: str, coef: float, angle: float,
                         inside: bool = True) -> RadialComment:
        c = RadialComment(text, RadialMode.TO_RING, coef=coef,
                          anchor_angle=angle, inside=inside)
        c.parent_id = self.id
        self.comments.append(c)
        radial_comment_sync(c, self.center, r_inner=self.r_inner,
                            r_outer=self.r_outer)
        return c

    def sync_comments(self) -> None:
        for c in self.comments:
            radial_comment_sync(c, self.center, r_inner=self.r_inner,
                                r_outer=self.r_outer)

    def on_catch(self, mover, ordinal, p, button) -> None:
        lo = self.strip_block_start()
        if lo <= ordinal < lo + len(self.values):
            self._resector = start_resectoring(self, ordinal)

    def on_release(self, mover, p) -> None:
        self._resector = None

    def move(self, dx, dy):
        super().move(dx, dy)
        self.sync_comments()

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        lo = self.strip_block_start()
        n = len(self.values)
        if lo <= ordinal < lo + n:
            return resector_move(self, self._resector, p)
        if ordinal == lo + n + 1:
            self.move(dx, dy)
            return True
        accepted = super().move_node(ordinal, dx, dy, p, button)
        if accepted:
            self.sync_comments()
        return accepted

    def start_rotation(self, p: Point2) -> None:
        try:
            self._last_rot_angle = ray_angle(self.center, p)
        except ValueError:
            self._last_rot_angle = 0.0

    def rotate_step(self, p: Point2) -> bool:
        if not self.movable:
            return False
        try:
            a = ray_angle(self.center, p)
        except ValueError:
            return False
        step = a - self._last_rot_angle
        step = (step + math.pi) % (2.0 * math.pi) - math.pi
        self._last_rot_angle = a
        self.phase += step
        self.sync_comments()
        return True


def start_resectoring(ring: SectoredRing, node_ordinal: int) -> ResectorState:
    lo = ring.strip_block_start()
    n = len(ring.values)
    if not lo <= node_ordinal < lo + n:
        raise ValueError("not a partition node")
    i = node_ordinal - lo
    ccw = i
    cw = (i - 1) % n
    caught = ring.boundary_angle(i)
    sweeps = ring.sweeps
    return ResectorState(i, cw, ccw, caught - sweeps[cw], caught + sweeps[ccw],
                         ring.values[cw] + ring.values[ccw])


def resector_move(ring: SectoredRing, st: ResectorState,
                  pointer: Point2) -> bool:
    """One partition drag step; values redistribute, their sum holds."""
    if st is None:
        return False
    theta = ray_angle(ring.center, pointer)
    mid = (st.min_angle + st.max_angle) / 2.0
    theta += 2.0 * math.pi * round((mid - theta) / (2.0 * math.pi))
    if not st.min_angle + MIN_SECTOR_SWEEP < theta < st.max_angle - MIN_SECTOR_SWEEP:
        return False
    part_ccw = (st.max_angle - theta) / (st.max_angle - st.min_angle)
    ring.values[st.ccw_index] = st.pair_sum * part_ccw
    ring.values[st.cw_index] = st.pair_sum - ring.values[st.ccw_index]
    if st.boundary_index == 0:
        ring.phase = theta
    ring.sync_comments()
    return True


class RingSetObj:
    """Concentric sectored rings; new rings grow only on the outside."""

    type_tag = "ring_set"

    def __init__(self, cx: float, cy: float):
        self.id = fresh_id()
        self.center: Point2 = (cx, cy)
        self.rings: list[SectoredRing] = []

    def add_ring(self, r_inner: float, r_outer: float,
                 values: list[float], phase: float = 0.0) -> SectoredRing:
        if self.rings and r_inner < self.rings[-1].r_outer:
            raise ValueError("rings are added only on the outside")
        ring = SectoredRing(self.center[0], self.center[1], r_inner, r_outer,
                            values, phase)
        if self.rings:
            ring.inward_neighbor = self.rings[-1]
            self.rings[-1].outward_neighbor = ring
        ring.move_delegate = self.move_all
        self.rings.append(ring)
        return ring

    def move_all(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        for g in self.rings:
            g.center = (g.center[0] + dx, g.center[1] + dy)
            g.sync_comments()

    def into_mover(self, mover: Mover, pos: int) -> None:
        for i, g in enumerate(self.rings):  # inner ring first
            mover.insert(pos + i, g)


# bar charts


class SingleBarObj(SceneObject):
    """One bar: a strip over the sliding side, a transparent body."""

    type_tag = "single_bar"

    def __init__(self, track: Rect, value_fill: float = 0.5, chart=None,
                 segment: int = 0, set_index: int = 0):
        super().__init__()
        self.track = track
        self.value_fill = value_fill
        self.chart = chart
        self.segment = segment
        self.set_index = set_index
        if chart is not None:
            self.parent_id = chart.id

    def top_coord(self) -> float:
        m = LinearMap(self.track.top, self.track.bottom, 1.0, 0.0)
        return map_value(m, self.value_fill)

    def _cover(self) -> Cover:
        cy = self.top_coord()
        t = self.track
        body_h = max(SINGLE_BAR_MIN_BODY, t.bottom - cy)
        return Cover([
            strip_node(0, (t.left, cy), (t.right, cy), SIDE_HALF_WIDTH,
                       cursor=CursorHint.SIZE_NS),
            polygon_node(1, Rect(t.left, cy, t.w, body_h).corners(),
                         behaviour=NodeBehaviour.TRANSPARENT,
                         cursor=CursorHint.DEFAULT),
        ])

    def move(self, dx, dy):
        pass

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT or ordinal != 0:
            return False
        return single_bar_move(self, dy)

    def bounds(self) -> Rect:
        return self.track.copy()


def single_bar_move(b: SingleBarObj, dy: float) -> bool:
    cy_new = b.top_coord() + dy
    if not b.track.top <= cy_new <= b.track.bottom:
        return False
    m = LinearMap(b.track.top, b.track.bottom, 1.0, 0.0)
    b.value_fill = unmap(m, cy_new)
    if b.chart is not None:
        b.chart.bar_value_changed(b)
    return True


class BarChartObj(ResizableRect):
    """The chart area plus one adjustable bar per (segment, set)."""

    type_tag = "bar_chart"

    def __init__(self, x, y, w, h, values: list[list[float]],
                 value_range: tuple[float, float] = (0.0, 1.0),
                 base_level: float = 0.0, fill: tuple[float, float] = (0.1, 0.9),
                 colors: list[str] | None = None, orientation: int = 0):
        super().__init__(x, y, w, h, min_size=PLOT_MIN_SIZE)
        if not values or not values[0]:
            raise ValueError("need at least one segment and one set")
        self.values = [list(row) for row in values]
        self.n_segments = len(values)
        self.n_sets = len(values[0])
        self.value_range = value_range
        self.base_level = base_level
        self.fill = fill
        self.colors = colors or []
        self.orientation = orientation % 4
        self.num_scale = ScaleObj(self, ScaleDirection.VERTICAL)
        self.text_scale = ScaleObj(self, ScaleDirection.HORIZONTAL)
        self.bars: list[SingleBarObj] = []
        self._build_bars()

    def _fill_of(self, value: float) -> float:
        lo, hi = self.value_range
        return (value - lo) / (hi - lo)

    def _value_of(self, fill: float) -> float:
        lo, hi = self.value_range
        return lo + fill * (hi - lo)

    def _build_bars(self) -> None:
        self.bars = []
        tracks = bar_layout(self)
        for s in range(self.n_segments):
            for j in range(self.n_sets):
                b = SingleBarObj(tracks[s * self.n_sets + j],
                                 self._fill_of(self.values[s][j]), self, s, j)
                self.bars.append(b)

    def sync_bars(self) -> None:
        tracks = bar_layout(self)
        for i, b in enumerate(self.bars):
            b.track = tracks[i]
            b.value_fill = self._fill_of(self.values[b.segment][b.set_index])

    def bar_value_changed(self, b: SingleBarObj) -> None:
        self.values[b.segment][b.set_index] = self._value_of(b.value_fill)

    def move(self, dx, dy):
        super().move(dx, dy)
        self.sync_bars()

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        accepted = super().move_node(ordinal, dx, dy, p, button)
        if accepted:
            self.sync_bars()
        return accepted

    def bar_rect(self, segment: int, set_index: int) -> Rect:
        """The painted part: from the base level to the value."""
        b = self.bars[segment * self.n_sets + set_index]
        m = LinearMap(self.rect.top, self.rect.bottom, 1.0, 0.0)
        y_val = b.top_coord()
        y_base = map_value(m, self._fill_of(self.base_level))
        top, bottom = min(y_val, y_base), max(y_val, y_base)
        return Rect(b.track.left, top, b.track.w, bottom - top)

    def into_mover(self, mover: Mover, pos: int) -> None:
        seq = list(self.bars) + [self.num_scale, self.text_scale, self]
        for i, obj in enumerate(seq):
            mover.insert(pos + i, obj)


def bar_layout(b: BarChartObj) -> list[Rect]:
    """Track rectangles for every bar, segment-major, all equal width."""
    f_lo, f_hi = b.fill
    if not 0 <= f_lo < f_hi <= 1:
        raise ValueError("bad fill")
    a = b.rect
    along_x = b.orientation % 2 == 0
    span = a.w if along_x else a.h
    seg = span / b.n_segments
    usable = (f_hi - f_lo) * seg
    bar_w = math.floor(usable / b.n_sets)
    out = []
    for s in range(b.n_segments):
        lead = s * seg + f_lo * seg
        for j in range(b.n_sets):
            off = lead + j * bar_w
            if along_x:
                out.append(Rect(a.left + off, a.top, bar_w, a.h))
            else:
                out.append(Rect(a.left, a.top + off, a.w, bar_w))
    return out


def bar_chart_rotate(b: BarChartObj) -> None:
    """One quarter turn: the area stays, everything else goes around."""
    b.orientation = (b.orientation + 1) % 4
    for s in (b.num_scale, b.text_scale):
        if s.direction is ScaleDirection.HORIZONTAL:
            s.direction = ScaleDirection.VERTICAL
            s.offset_from_area = -s.thickness
        else:
            s.direction = ScaleDirection.HORIZONTAL
            s.offset_from_area = 0.0
    b.sync_bars()
