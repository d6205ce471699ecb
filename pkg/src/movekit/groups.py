"""Elastic frames around member objects and rubber-band selection.

The frame never stores its own rectangle: it is re-derived from the
members' bounds every time anyone asks, so it trails a runaway member
by construction.
"""
from __future__ import annotations

from .cover import Cover, CursorHint, polygon_node
from .geometry import Point2, Rect, union_rect
from .mover import Mover
from .scene import MouseButton, SceneObject

FRAME_MARGIN = 10.0
SELECTION_TRANSPARENCY = 0.2


class ElasticFrame(SceneObject):
    type_tag = "group"

    def __init__(self, members: list[SceneObject], margin: float = FRAME_MARGIN,
                 background: str = "lightsteelblue",
                 transparency: float = SELECTION_TRANSPARENCY,
                 recompute_on_release: bool = False):
        super().__init__()
        self.members = list(members)
        self.margin = margin
        self.background = background
        self.transparency = transparency
        self.recompute_on_release = recompute_on_release

    @property
    def frame(self) -> Rect:
        return union_rect([m.bounds() for m in self.members]).inflated(self.margin)

    @property
    def member_ids(self) -> list[int]:
        return [m.id for m in self.members]

    def _cover(self) -> Cover:
        return Cover([polygon_node(0, self.frame.corners(),
                                   cursor=CursorHint.SIZE_ALL)])

    def move(self, dx, dy):
        for m in self.members:
            m.move(dx, dy)

    def move_node(self, ordinal, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move(dx, dy)
        return True

    def bounds(self) -> Rect:
        return self.frame

    def on_release(self, mover: Mover, p: Point2) -> None:
        if not self.recompute_on_release:
            return
        pool = [reg.obj for reg in mover.queue]
        group_recompute_on_release(self, pool)
        if len(self.members) < 2:
            for i, reg in enumerate(mover.queue):
                if reg.obj is self:
                    mover.remove(i)
                    break


class SelectionBand:
    """The two points of a rubber-band drag; the box between them."""

    def __init__(self, anchor: Point2):
        self.anchor = anchor
        self.current = anchor

    @property
    def rect(self) -> Rect:
        x0, y0 = self.anchor
        x1, y1 = self.current
        return Rect(min(x0, x1), min(y0, y1), abs(x1 - x0), abs(y1 - y0))


def band_commit(band: SelectionBand, objects: list[SceneObject]) -> ElasticFrame | None:
    """A group forms only around two or more fully enclosed objects."""
    r = band.rect
    inside = [o for o in objects
              if not isinstance(o, ElasticFrame) and r.contains_rect(o.bounds())]
    if len(inside) < 2:
        return None
    return ElasticFrame(inside, recompute_on_release=True)


def group_move(g: ElasticFrame, dx: float, dy: float) -> None:
    g.move(dx, dy)


def group_recompute_on_release(g: ElasticFrame,
                               objects: list[SceneObject]) -> list[SceneObject]:
    """Anything now fully inside the frame joins; leavers drop out."""
    r = g.frame
    g.members = [o for o in objects
                 if o is not g and not isinstance(o, ElasticFrame)
                 and r.contains_rect(o.bounds())]
    return g.members


def group_queue_position(g: ElasticFrame, queue: list[SceneObject]) -> int:
    """Scanning from the queue's end, right behind the first member met."""
    wanted = set(g.member_ids)
    for i in range(len(queue) - 1, -1, -1):
        if queue[i].id in wanted:
            return i + 1
    raise ValueError("empty group: no member in the queue")
