"""Scene objects and the scene container.

Every movable entity gets a unique, strictly increasing id that is never
reused inside a process, not even when scenes are reloaded.
"""
from __future__ import annotations

import itertools
from enum import Enum

from .cover import Cover, CursorHint, NodeBehaviour
from .geometry import Point2, Rect

_ids = itertools.count(1)


def fresh_id() -> int:
    return next(_ids)


def ensure_ids_above(n: int) -> None:
    """Advance the generator so future ids exceed n."""
    global _ids
    current = next(_ids)
    _ids = itertools.count(max(current, n + 1))


class MouseButton(Enum):
    LEFT = "L"
    RIGHT = "R"


class SceneObject:
    """Base contract: geometry plus cover definition and move dispatch."""

    type_tag = "object"

    def __init__(self):
        self.id = fresh_id()
        self.parent_id: int | None = None
        self.visible = True
        self.visible_as_member = True
        self.movable = True

    @property
    def effectively_visible(self) -> bool:
        return self.visible and self.visible_as_member

    # rotation protocol; classes that rotate on a right drag flip this on
    supports_rotation = False

    def start_rotation(self, p: Point2) -> None:
        pass

    def rotate_step(self, p: Point2) -> bool:
        return False

    def define_cover(self) -> Cover:
        cover = self._cover()
        if not self.movable:
            freeze_cover(cover, self.frozen_cursor())
        return cover

    def _cover(self) -> Cover:
        raise NotImplementedError

    def frozen_cursor(self) -> CursorHint:
        return CursorHint.DEFAULT

    def set_movable(self, flag: bool) -> None:
        """The next cover read reflects the new movability."""
        self.movable = flag

    def move(self, dx: float, dy: float) -> None:
        raise NotImplementedError

    def move_node(self, ordinal: int, dx: float, dy: float, p: Point2,
                  button: MouseButton) -> bool:
        raise NotImplementedError

    def bounds(self) -> Rect:
        raise NotImplementedError

    def reference_point(self) -> Point2:
        """Anchor used for placement asserts and restores: top-left by default."""
        b = self.bounds()
        return (b.x, b.y)

    # interaction hooks, called by the mover
    def on_catch(self, mover, ordinal: int, p: Point2, button: MouseButton) -> None:
        pass

    def on_release(self, mover, p: Point2) -> None:
        pass


def freeze_cover(cover: Cover, cursor: CursorHint) -> Cover:
    for n in cover.nodes:
        if n.behaviour is NodeBehaviour.MOVEABLE:
            n.behaviour = NodeBehaviour.FROZEN
            n.cursor = cursor
    return cover


class Scene:
    """Ordered object list; index 0 is the head of the interaction queue."""

    def __init__(self):
        self.objects: list[SceneObject] = []
        # written id -> object, filled by the snapshot loader
        self.source_ids: dict[int, SceneObject] = {}

    def add(self, obj: SceneObject, pos: int | None = None) -> SceneObject:
        if any(o.id == obj.id for o in self.objects):
            raise ValueError("duplicate object id in scene")
        if pos is None:
            self.objects.append(obj)
        else:
            self.objects.insert(pos, obj)
        return obj

    def remove(self, obj_id: int) -> SceneObject:
        for i, o in enumerate(self.objects):
            if o.id == obj_id:
                return self.objects.pop(i)
        raise KeyError(f"no object with id {obj_id}")

    def find(self, obj_id: int) -> SceneObject:
        for o in self.objects:
            if o.id == obj_id:
                return o
        raise KeyError(f"no object with id {obj_id}")

    def index_of(self, obj_id: int) -> int:
        for i, o in enumerate(self.objects):
            if o.id == obj_id:
                return i
        raise KeyError(f"no object with id {obj_id}")

    def children_of(self, obj_id: int) -> list[SceneObject]:
        return [o for o in self.objects if o.parent_id == obj_id]

    def __iter__(self):
        return iter(self.objects)

    def __len__(self):
        return len(self.objects)
