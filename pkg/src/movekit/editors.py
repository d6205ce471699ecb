"""Data-editing widgets: segment sliders snapping to data, locally bounded
sliders, vertical-only dots, graph dots with insertion strips, and the
dot-nest that spawns new dots.

The widgets own their physical values and keep them consistent with the
screen through linear maps, so a table edit and a drag land in one place.
"""
from __future__ import annotations

import bisect

from .cover import (Cover, CursorHint, NodeBehaviour, circle_node,
                    polygon_node, strip_node)
from .geometry import (LinearMap, Point2, Rect, Segment, distance_to_segment,
                       map_value, unmap)
from .mover import Mover
from .scene import MouseButton, SceneObject
from .shapes import SMALL_NODE_RADIUS

HALF_SENSE = 3.0
OUTSIDE_NEAR = 10.0
OUTSIDE_FAR = 4000.0


class SegmentedSliders(SceneObject):
    """Vertical sliders cutting a band into segments, snapping to data.

    line_xs keeps the two border lines as fixed first and last entries;
    they carry no nodes and never move.
    """

    type_tag = "segmented_sliders"

    def __init__(self, area: Rect, xs: list[float], ys: list[float],
                 inner_xs: list[float], x_range: tuple[float, float] | None = None,
                 half_sense: float = HALF_SENSE):
        super().__init__()
        if any(b < a for a, b in zip(xs, xs[1:])):
            raise ValueError("xs must be nondecreasing")
        self.area = area
        self.xs = list(xs)
        self.ys = list(ys)
        self.line_xs = [area.left] + list(inner_xs) + [area.right]
        if any(b <= a for a, b in zip(self.line_xs, self.line_xs[1:])):
            raise ValueError("slider lines must be strictly increasing")
        self.x_range = x_range if x_range is not None else (xs[0], xs[-1])
        self.half_sense = half_sense
        self._pre_drag_x = 0.0

    @property
    def x_map(self) -> LinearMap:
        return LinearMap(self.area.left, self.area.right, *self.x_range)

    def screen_xs(self) -> list[float]:
        m = self.x_map
        return [map_value(m, x) for x in self.xs]

    def _cover(self) -> Cover:
        nodes = []
        for i, x in enumerate(self.line_xs[1:-1]):
            nodes.append(strip_node(i, (x, self.area.top), (x, self.area.bottom),
                                    self.half_sense, cursor=CursorHint.SIZE_WE))
        return Cover(nodes)

    def move(self, dx, dy):
        self.area = self.area.moved(dx, dy)
        self.line_xs = [x + dx for x in self.line_xs]

    def on_catch(self, mover: Mover, ordinal: int, p: Point2, button) -> None:
        self._pre_drag_x = self.line_xs[ordinal + 1]
        mover.set_drag_clip(slider_catch_clip(self, ordinal))

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        li = ordinal + 1
        lo = self.line_xs[li - 1] + 1
        hi = self.line_xs[li + 1] - 1
        self.line_xs[li] = min(max(self.line_xs[li] + dx, lo), hi)
        return True

    def on_release(self, mover: Mover, p: Point2) -> None:
        st = mover.was_caught
        if st is not None:
            slider_snap(self, st.node_ordinal, p[0])

    def bounds(self) -> Rect:
        return self.area.copy()


def slider_catch_clip(s: SegmentedSliders, node: int) -> Rect:
    """One pixel short of both neighbours, full band height."""
    li = node + 1
    left = s.line_xs[li - 1] + 1
    right = s.line_xs[li + 1] - 1
    return Rect(left, s.area.top, right - left, s.area.h)


def slider_snap(s: SegmentedSliders, node: int, release_x: float) -> float:
    """The slider lands on the nearest data coordinate, ties to the left.

    Only data points strictly between the neighbour lines qualify; with
    none there, the slider returns to where the drag started.
    """
    li = node + 1
    lo, hi = s.line_xs[li - 1], s.line_xs[li + 1]
    candidates = [sx for sx in s.screen_xs() if lo < sx < hi]
    if not candidates:
        x = s._pre_drag_x
    else:
        x = min(candidates, key=lambda sx: (abs(sx - release_x), sx))
    s.line_xs[li] = x
    return x


class BoundedSlider(SceneObject):
    """A six-pixel slider whose travel is bounded anew at every catch."""

    type_tag = "bounded_slider"

    def __init__(self, x: float, y_top: float, y_bottom: float,
                 bounds_provider=None):
        super().__init__()
        self.x = x
        self.y_top = y_top
        self.y_bottom = y_bottom
        self.left_bound = float("-inf")
        self.right_bound = float("inf")
        self.bounds_provider = bounds_provider

    def _cover(self) -> Cover:
        return Cover([strip_node(0, (self.x, self.y_top),
                                 (self.x, self.y_bottom), HALF_SENSE,
                                 cursor=CursorHint.SIZE_WE)])

    def move(self, dx, dy):
        self.x += dx
        self.y_top += dy
        self.y_bottom += dy

    def on_catch(self, mover, ordinal, p, button) -> None:
        if self.bounds_provider is not None:
            bounded_slider_start(self, *self.bounds_provider(self))

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        cx_new = self.x + dx
        if not self.left_bound <= cx_new <= self.right_bound:
            return False
        self.x = cx_new
        return True

    def bounds(self) -> Rect:
        return Rect(self.x - HALF_SENSE, self.y_top, 2 * HALF_SENSE,
                    self.y_bottom - self.y_top)


def bounded_slider_start(b: BoundedSlider, left: float, right: float) -> None:
    if left > right:
        raise ValueError("bad bounds")
    b.left_bound = left
    b.right_bound = right


class VerticalDots(SceneObject):
    """Dots pinned to their columns, each sliding up and down only."""

    type_tag = "vertical_dots"

    def __init__(self, area: Rect, xs: list[float], values: list[float],
                 value_range: tuple[float, float] = (0.0, 1.0),
                 radius: float = SMALL_NODE_RADIUS):
        super().__init__()
        self.area = area
        self.value_range = value_range
        self.values = list(values)
        self.radius = radius
        m = self.y_map
        self.points: list[Point2] = [(x, map_value(m, v))
                                     for x, v in zip(xs, values)]

    @property
    def y_map(self) -> LinearMap:
        lo, hi = self.value_range
        return LinearMap(self.area.top, self.area.bottom, hi, lo)

    def _cover(self) -> Cover:
        return Cover([circle_node(i, p, self.radius, cursor=CursorHint.SIZE_NS)
                      for i, p in enumerate(self.points)])

    def move(self, dx, dy):
        self.area = self.area.moved(dx, dy)
        self.points = [(x + dx, y + dy) for x, y in self.points]

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        return dots_move(self, ordinal, dy)

    def bounds(self) -> Rect:
        return self.area.copy()


def dots_move(v: VerticalDots, i: int, dy: float) -> bool:
    x, y = v.points[i]
    cy_new = y + dy
    if not v.area.top <= cy_new <= v.area.bottom:
        return False
    v.points[i] = (x, cy_new)
    v.values[i] = unmap(v.y_map, cy_new)
    return True


class GraphDots(SceneObject):
    """Editable dots of a manual graph, with insertion strips between.

    Everything outside the plot area is masked by transparent nodes, so
    a dot dragged out of sight cannot be caught there.
    """

    type_tag = "graph_dots"

    def __init__(self, plot_area: Rect, args: list[float], vals: list[float],
                 x_range: tuple[float, float] = (0.0, 1.0),
                 y_range: tuple[float, float] = (0.0, 1.0),
                 dot_radius: float = SMALL_NODE_RADIUS):
        super().__init__()
        if any(b < a for a, b in zip(args, args[1:])):
            raise ValueError("args must be nondecreasing")
        self.plot_area = plot_area
        self.args = list(args)
        self.vals = list(vals)
        self.x_range = x_range
        self.y_range = y_range
        self.dot_radius = dot_radius
        self.points: list[Point2] = [(map_value(self.x_map, a),
                                      map_value(self.y_map, v))
                                     for a, v in zip(args, vals)]

    @property
    def x_map(self) -> LinearMap:
        return LinearMap(self.plot_area.left, self.plot_area.right,
                         *self.x_range)

    @property
    def y_map(self) -> LinearMap:
        lo, hi = self.y_range
        return LinearMap(self.plot_area.bottom, self.plot_area.top, lo, hi)

    def strip_block_start(self) -> int:
        return 4 + len(self.points)

    def _cover(self) -> Cover:
        return graphdots_cover(self)

    def move(self, dx, dy):
        self.plot_area = self.plot_area.moved(dx, dy)
        self.points = [(x + dx, y + dy) for x, y in self.points]

    def on_catch(self, mover: Mover, ordinal: int, p: Point2, button) -> None:
        if ordinal >= self.strip_block_start():
            graphdots_insert_on_strip(self, ordinal, p)
            mover.request_recatch()

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        i = ordinal - 4
        if not 0 <= i < len(self.points):
            return False
        x, y = self.points[i]
        nx, ny = x + dx, y + dy
        if i > 0 and nx < self.points[i - 1][0]:
            return False
        if i < len(self.points) - 1 and nx > self.points[i + 1][0]:
            return False
        self.points[i] = (nx, ny)
        # the screen gate can be loose by an ulp after unmap; pin the
        # physical order as well
        arg = unmap(self.x_map, nx)
        if i > 0:
            arg = max(arg, self.args[i - 1])
        if i < len(self.args) - 1:
            arg = min(arg, self.args[i + 1])
        self.args[i] = arg
        self.vals[i] = unmap(self.y_map, ny)
        return True

    def set_pair(self, index: int, x: float, y: float) -> None:
        """Table-edit entry point; refuses to break the x order."""
        if index > 0 and x < self.args[index - 1]:
            raise ValueError("x out of order")
        if index < len(self.args) - 1 and x > self.args[index + 1]:
            raise ValueError("x out of order")
        self.args[index] = x
        self.vals[index] = y
        self.points[index] = (map_value(self.x_map, x), map_value(self.y_map, y))

    def insert_pair(self, x: float, y: float) -> int:
        i = bisect.bisect_right(self.args, x)
        self.args.insert(i, x)
        self.vals.insert(i, y)
        self.points.insert(i, (map_value(self.x_map, x),
                               map_value(self.y_map, y)))
        return i

    def bounds(self) -> Rect:
        return self.plot_area.copy()


def graphdots_cover(g: GraphDots) -> Cover:
    rc = g.plot_area
    near, far = OUTSIDE_NEAR, OUTSIDE_FAR
    outside = [
        Rect(rc.left - near, rc.top - near, rc.w + near + far, near),
        Rect(rc.left - near, rc.bottom, rc.w + near + far, far),
        Rect(rc.left - near, rc.top, near, rc.h),
        Rect(rc.right, rc.top, far, rc.h),
    ]
    nodes = [polygon_node(i, r.corners(), behaviour=NodeBehaviour.TRANSPARENT,
                          cursor=CursorHint.DEFAULT)
             for i, r in enumerate(outside)]
    for j, p in enumerate(g.points):
        nodes.append(circle_node(4 + j, p, g.dot_radius,
                                 cursor=CursorHint.SIZE_ALL))
    base = 4 + len(g.points)
    for k in range(len(g.points) - 1):
        nodes.append(strip_node(base + k, g.points[k], g.points[k + 1],
                                HALF_SENSE, behaviour=NodeBehaviour.FROZEN,
                                cursor=CursorHint.HAND))
    return Cover(nodes)


def graphdots_insert_on_strip(g: GraphDots, strip_ordinal: int,
                              press: Point2) -> int:
    """A new dot at the perpendicular foot; the x order cannot break."""
    k = strip_ordinal - g.strip_block_start()
    if not 0 <= k < len(g.points) - 1:
        raise IndexError("not an insertion strip")
    _, foot = distance_to_segment(press, Segment(g.points[k], g.points[k + 1]))
    i = k + 1
    g.points.insert(i, foot)
    # same ulp pin as in move_node: the foot sits between the neighbour
    # points on screen, the argument must sit between theirs as well
    arg = min(max(unmap(g.x_map, foot[0]), g.args[k]), g.args[k + 1])
    g.args.insert(i, arg)
    g.vals.insert(i, unmap(g.y_map, foot[1]))
    return i


class DotNest(SceneObject):
    """A panel with one patch; dragging the patch out plants new dots."""

    type_tag = "dot_nest"

    def __init__(self, panel: Rect, patch_radius: float = 6.0,
                 graph: GraphDots | None = None):
        super().__init__()
        self.panel = panel
        self.nest_point: Point2 = panel.center
        self.patch_point: Point2 = self.nest_point
        self.patch_radius = patch_radius
        self.graph = graph

    def _cover(self) -> Cover:
        return Cover([
            circle_node(0, self.patch_point, self.patch_radius,
                        cursor=CursorHint.HAND),
            polygon_node(1, self.panel.corners(), cursor=CursorHint.SIZE_ALL),
        ])

    def move(self, dx, dy):
        self.panel = self.panel.moved(dx, dy)
        self.nest_point = (self.nest_point[0] + dx, self.nest_point[1] + dy)
        self.patch_point = (self.patch_point[0] + dx, self.patch_point[1] + dy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if ordinal == 0:
            self.patch_point = (self.patch_point[0] + dx,
                                self.patch_point[1] + dy)
            return True
        self.move(dx, dy)
        return True

    def on_release(self, mover: Mover, p: Point2) -> None:
        st = mover.was_caught
        if st is not None and st.node_ordinal == 0:
            area = self.graph.plot_area if self.graph is not None else None
            dotnest_release(self, p, area)

    def bounds(self) -> Rect:
        return self.panel.copy()


def dotnest_release(d: DotNest, release_point: Point2,
                    plot_area: Rect | None):
    """The patch always goes home; a dot appears only inside the plot."""
    d.patch_point = d.nest_point
    if plot_area is None or not plot_area.contains(release_point):
        return None
    if d.panel.contains(release_point):
        return None
    if d.graph is None:
        return None
    pair = (unmap(d.graph.x_map, release_point[0]),
            unmap(d.graph.y_map, release_point[1]))
    d.graph.insert_pair(*pair)
    return pair


def sliders_vs_dots_order(objects: list[SceneObject]) -> list[SceneObject]:
    """Dots ahead of sliders, so a dot under a slider stays catchable."""
    def rank(o: SceneObject) -> int:
        if isinstance(o, (GraphDots, VerticalDots, DotNest)):
            return 0
        if isinstance(o, (SegmentedSliders, BoundedSlider)):
            return 1
        return 2
    return sorted(objects, key=rank)
