"""The interaction state machine: catch, move, release.

A mover keeps an ordered queue of objects with their covers.  The press
point is matched against covers head first; the first opaque node wins.
Clipping confines the pointer, never the object.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .cover import BlockedHit, Cover, CursorHint, NodeBehaviour, ShapeKind, cover_hit
from .geometry import Point2, Rect
from .scene import MouseButton, SceneObject

SAFE_OVERHANG = 4000.0  # how far a safe clip runs past the right/bottom edges
CLICK_DISTANCE = 3.0


class ClippingMode(Enum):
    UNSAFE = "unsafe"
    VISUAL = "visual"
    SAFE = "safe"


class ReleaseKind(Enum):
    CLICK = "click"
    DRAG = "drag"


@dataclass
class Registration:
    obj: SceneObject
    cover: Cover
    color: str = "red"


@dataclass
class DragState:
    queue_index: int
    node_ordinal: int
    shape_kind: ShapeKind
    behaviour: object
    button: MouseButton
    press_point: Point2
    last_point: Point2


@dataclass(frozen=True)
class SensedInfo:
    queue_index: int
    object_id: int
    node_ordinal: int
    shape_kind: ShapeKind | None
    cursor: CursorHint
    catchable: bool


class Mover:
    def __init__(self, work_area: Rect | None = None,
                 clipping: ClippingMode | None = None):
        self.work_area = work_area
        if clipping is None:
            clipping = ClippingMode.VISUAL if work_area is not None else ClippingMode.UNSAFE
        self.clipping = clipping
        self.queue: list[Registration] = []
        self.drag: DragState | None = None
        self.was_caught: DragState | None = None
        self.last_move_accepted = False
        self._clip: Rect | None = None
        self._recatch_wanted = False

    # queue management

    def add(self, obj: SceneObject, color: str = "red") -> None:
        self._check_duplicate(obj)
        self.queue.append(Registration(obj, obj.define_cover(), color))

    def insert(self, pos: int, obj: SceneObject, color: str = "red") -> None:
        if not 0 <= pos <= len(self.queue):
            raise IndexError("bad index for insert")
        self._check_duplicate(obj)
        self.queue.insert(pos, Registration(obj, obj.define_cover(), color))

    def remove(self, pos: int) -> SceneObject:
        if not 0 <= pos < len(self.queue):
            raise IndexError("bad index for remove")
        return self.queue.pop(pos).obj

    def clear(self) -> None:
        self.queue.clear()
        self.drag = None

    def _check_duplicate(self, obj: SceneObject) -> None:
        if any(reg.obj.id == obj.id for reg in self.queue):
            raise ValueError("object already registered with this mover")

    def __len__(self) -> int:
        return len(self.queue)

    def refresh_covers(self) -> None:
        for reg in self.queue:
            reg.cover = reg.obj.define_cover()

    # drag lifecycle

    def catch(self, p: Point2, button: MouseButton = MouseButton.LEFT) -> bool:
        if self.drag is not None:
            self.release()
        self.was_caught = None
        return self._catch_scan(p, button, depth=0)

    def _catch_scan(self, p: Point2, button: MouseButton, depth: int) -> bool:
        for qi, reg in enumerate(self.queue):
            hit = cover_hit(reg.cover, p)
            if hit is None:
                continue
            if isinstance(hit, BlockedHit):
                return False
            self.drag = DragState(qi, hit.node_ordinal, hit.shape_kind,
                                  hit.behaviour, button, p, p)
            self._clip = self._mode_clip()
            if button is MouseButton.RIGHT and reg.obj.supports_rotation:
                reg.obj.start_rotation(p)
            self._recatch_wanted = False
            reg.obj.on_catch(self, hit.node_ordinal, p, button)
            if self._recatch_wanted and depth < 2:
                # the object restructured itself under the press; hand the
                # drag straight to whatever now sits at the same point
                self._recatch_wanted = False
                self.release()
                self.refresh_covers()
                return self._catch_scan(p, button, depth + 1)
            return True
        return False

    def _mode_clip(self) -> Rect | None:
        if self.clipping is ClippingMode.UNSAFE or self.work_area is None:
            return None
        if self.clipping is ClippingMode.VISUAL:
            return self.work_area.copy()
        wa = self.work_area
        return Rect(wa.x, wa.y, wa.w + SAFE_OVERHANG, wa.h + SAFE_OVERHANG)

    def set_drag_clip(self, rect: Rect | None) -> None:
        """Objects may confine the pointer further while they are caught."""
        self._clip = rect

    def _clamp(self, p: Point2) -> Point2:
        if self._clip is None:
            return p
        c = self._clip
        return (min(max(p[0], c.left), c.right), min(max(p[1], c.top), c.bottom))

    def move(self, p: Point2) -> bool:
        """True whenever an object is caught, accepted delta or not."""
        self.last_move_accepted = False
        if self.drag is None:
            return False
        p = self._clamp(p)
        st = self.drag
        reg = self.queue[st.queue_index]
        dx = p[0] - st.last_point[0]
        dy = p[1] - st.last_point[1]
        accepted = False
        if st.behaviour is NodeBehaviour.FROZEN:
            pass  # caught and sensed, but never moved
        elif st.button is MouseButton.RIGHT and reg.obj.supports_rotation:
            accepted = reg.obj.rotate_step(p)
        else:
            accepted = reg.obj.move_node(st.node_ordinal, dx, dy, p, st.button)
        if accepted:
            st.last_point = p
            self.refresh_covers()
        self.last_move_accepted = accepted
        return True

    def release(self, p: Point2 | None = None):
        self._clip = None  # unconditional, matches the empty-clip idiom
        if self.drag is None:
            return (False, -1, -1, None)
        st = self.drag
        reg = self.queue[st.queue_index]
        self.drag = None
        self.was_caught = st
        reg.obj.on_release(self, p if p is not None else st.last_point)
        self.refresh_covers()
        return (True, st.queue_index, st.node_ordinal, st.shape_kind)

    # queries

    def sensed(self, p: Point2) -> SensedInfo | None:
        for qi, reg in enumerate(self.queue):
            hit = cover_hit(reg.cover, p)
            if hit is None:
                continue
            if isinstance(hit, BlockedHit):
                return SensedInfo(qi, reg.obj.id, hit.node_ordinal, None,
                                  hit.cursor, False)
            return SensedInfo(qi, reg.obj.id, hit.node_ordinal, hit.shape_kind,
                              hit.cursor, True)
        return None

    def cursor_hint(self, p: Point2) -> CursorHint:
        info = self.sensed(p)
        return info.cursor if info is not None else CursorHint.DEFAULT

    @property
    def caught_object(self) -> SceneObject | None:
        return self.queue[self.drag.queue_index].obj if self.drag else None

    @property
    def was_caught_object(self) -> SceneObject | None:
        return self.queue[self.was_caught.queue_index].obj if self.was_caught else None

    def request_recatch(self) -> None:
        self._recatch_wanted = True


def classify_release(down: Point2, up: Point2) -> ReleaseKind:
    d = math.hypot(up[0] - down[0], up[1] - down[1])
    return ReleaseKind.CLICK if d <= CLICK_DISTANCE else ReleaseKind.DRAG


def cooperate(movers: list[Mover], kind: str, p: Point2,
              button: MouseButton = MouseButton.LEFT) -> Mover | None:
    """Chain several movers over one pointer stream.

    catch: the first mover that catches wins.  move: the first mover that is
    dragging or senses something handles it (so its cursor prevails).
    release: everyone hears it.
    """
    if kind == "catch":
        for m in movers:
            if m.catch(p, button):
                return m
        return None
    if kind == "move":
        for m in movers:
            if m.drag is not None or m.sensed(p) is not None:
                m.move(p)
                return m
        return None
    if kind == "release":
        for m in movers:
            m.release(p)
        return None
    raise ValueError(f"unknown event kind: {kind}")
