"""Covers: ordered sets of sensitive nodes over an object.

A node is a circle, a strip (capsule), or a convex polygon, and carries a
behaviour, a cursor hint, and a clearance flag used when covers are drawn.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .geometry import Point2, Segment, in_capsule, in_circle, in_convex_polygon


class NodeBehaviour(Enum):
    MOVEABLE = "moveable"
    FROZEN = "frozen"
    TRANSPARENT = "transparent"
    NONMOVEABLE = "nonmoveable"


class CursorHint(Enum):
    DEFAULT = "default"
    HAND = "hand"
    SIZE_ALL = "size_all"
    SIZE_NS = "size_ns"
    SIZE_WE = "size_we"
    SIZE_NWSE = "size_nwse"
    SIZE_NESW = "size_nesw"


class ShapeKind(Enum):
    CIRCLE = "circle"
    STRIP = "strip"
    POLYGON = "polygon"


MIN_NODE_RADIUS = 1.0  # zero-area nodes are not allowed

_BOUNDS_PAD = 1e-6  # boundary points stay inside despite rounding


@dataclass
class CoverNode:
    ordinal: int
    shape_kind: ShapeKind
    behaviour: NodeBehaviour
    cursor: CursorHint
    clearance: bool
    fill_color: str = "white"
    # circle fields
    center: Point2 | None = None
    radius: float = 0.0
    # strip fields
    segment: Segment | None = None
    # polygon fields
    vertices: list[Point2] = field(default_factory=list)
    # padded box over the shape; geometry never changes after construction
    bounds: tuple[float, float, float, float] = field(init=False, repr=False)

    def __post_init__(self):
        if self.shape_kind is ShapeKind.CIRCLE:
            (x, y), r = self.center, self.radius
            x0, y0, x1, y1 = x - r, y - r, x + r, y + r
        elif self.shape_kind is ShapeKind.STRIP:
            (ax, ay), (bx, by) = self.segment.a, self.segment.b
            r = self.radius
            x0, y0 = min(ax, bx) - r, min(ay, by) - r
            x1, y1 = max(ax, bx) + r, max(ay, by) + r
        else:
            xs = [v[0] for v in self.vertices]
            ys = [v[1] for v in self.vertices]
            x0, y0, x1, y1 = min(xs), min(ys), max(xs), max(ys)
        self.bounds = (x0 - _BOUNDS_PAD, y0 - _BOUNDS_PAD,
                       x1 + _BOUNDS_PAD, y1 + _BOUNDS_PAD)


def circle_node(ordinal: int, center: Point2, radius: float,
                cursor: CursorHint = CursorHint.SIZE_ALL,
                behaviour: NodeBehaviour = NodeBehaviour.MOVEABLE,
                clearance: bool = True) -> CoverNode:
    if radius < MIN_NODE_RADIUS:
        raise ValueError("node radius below 1 px")
    return CoverNode(ordinal, ShapeKind.CIRCLE, behaviour, cursor, clearance,
                     center=center, radius=radius)


def strip_node(ordinal: int, a: Point2, b: Point2, radius: float,
               cursor: CursorHint = CursorHint.SIZE_ALL,
               behaviour: NodeBehaviour = NodeBehaviour.MOVEABLE,
               clearance: bool = True) -> CoverNode:
    if radius < MIN_NODE_RADIUS:
        raise ValueError("node radius below 1 px")
    return CoverNode(ordinal, ShapeKind.STRIP, behaviour, cursor, clearance,
                     segment=Segment(a, b), radius=radius)


def polygon_node(ordinal: int, vertices: list[Point2],
                 cursor: CursorHint = CursorHint.SIZE_ALL,
                 behaviour: NodeBehaviour = NodeBehaviour.MOVEABLE,
                 clearance: bool = False) -> CoverNode:
    if len(vertices) < 3:
        raise ValueError("polygon node needs at least 3 vertices")
    return CoverNode(ordinal, ShapeKind.POLYGON, behaviour, cursor, clearance,
                     vertices=list(vertices))


@dataclass
class Cover:
    nodes: list[CoverNode]

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("cover must have at least one node")
        for i, n in enumerate(self.nodes):
            if n.ordinal != i:
                raise ValueError("node ordinals must be 0..n-1 in order")

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class HitInfo:
    node_ordinal: int
    shape_kind: ShapeKind
    behaviour: NodeBehaviour
    cursor: CursorHint


@dataclass(frozen=True)
class BlockedHit:
    """A nonmoveable node under the pointer: nothing catchable here or below."""

    node_ordinal: int
    cursor: CursorHint


def node_contains(n: CoverNode, p: Point2) -> bool:
    if n.shape_kind is ShapeKind.CIRCLE:
        return in_circle(p, n.center, n.radius)
    if n.shape_kind is ShapeKind.STRIP:
        return in_capsule(p, n.segment, n.radius)
    return in_convex_polygon(p, n.vertices)


def cover_hit(c: Cover, p: Point2) -> HitInfo | BlockedHit | None:
    """The first containing node, in ordinal order, decides for the object.

    A Transparent first hit means the whole object is looked through at
    this point (a hole or a mask: earlier nodes shadow later ones), so the
    scan moves on to deeper objects.  A Nonmoveable first hit blocks:
    nothing here is catchable and deeper objects stay occluded.  Returns
    None on a miss or a look-through.
    """
    px, py = p
    for n in c.nodes:
        x0, y0, x1, y1 = n.bounds
        # the box over-covers the node, so a miss here is a true miss
        if px < x0 or px > x1 or py < y0 or py > y1:
            continue
        if not node_contains(n, p):
            continue
        if n.behaviour is NodeBehaviour.TRANSPARENT:
            return None
        if n.behaviour is NodeBehaviour.NONMOVEABLE:
            return BlockedHit(n.ordinal, n.cursor)
        return HitInfo(n.ordinal, n.shape_kind, n.behaviour, n.cursor)
    return None


def set_clearance(c: Cover, flag: bool, shape_filter: ShapeKind | None = None) -> Cover:
    for n in c.nodes:
        if shape_filter is None or n.shape_kind is shape_filter:
            n.clearance = flag
    return c


def set_node_behaviour_cursor(c: Cover, ordinal: int, b: NodeBehaviour,
                              cur: CursorHint) -> Cover:
    if not 0 <= ordinal < len(c.nodes):
        raise IndexError("bad ordinal: no such node")
    c.nodes[ordinal].behaviour = b
    c.nodes[ordinal].cursor = cur
    return c
