"""JSON-lines loop for a frontend: pointer messages in, frame deltas out.

One request per line, one JSON reply per line.  A pointer message routes
to catch/move/release/sensed; the reply carries the full draw list
(deepest object first, the reverse of the queue), a cursor hint, and an
optional menu request.  Everything the frontend shows comes from here; it
never computes geometry of its own.

Ring-sector angles follow the engine's ray convention (y grows down the
screen, angles run counterclockwise from the x axis), so a canvas arc
draws them negated.
"""
from __future__ import annotations

import json
import math

from .charts import (BarChartObj, PieChartObj, PlotComposite, RingSetObj,
                     ScaleObj, SectoredRing, pie_sweeps, set_visible)
from .editors import (BoundedSlider, DotNest, GraphDots, SegmentedSliders,
                      VerticalDots)
from .geometry import Rect
from .groups import ElasticFrame
from .harness import build_mover, covers_text
from .mover import ReleaseKind, classify_release
from .persist import (ProfileStore, default_view_reset, load_scene,
                      restore_object_at, save_object, save_scene)
from .scene import MouseButton, Scene
from .shapes import (CircleNR, OneSideRect, RingShape, SectorShape, TextRM)

_BUTTONS = {"L": MouseButton.LEFT, "R": MouseButton.RIGHT}
_PALETTE = ("khaki", "lightsteelblue", "thistle", "lightgreen", "wheat",
            "powderblue", "salmon", "plum")

TWO_PI = 2.0 * math.pi


def _sector_color(obj, i: int) -> str:
    colors = getattr(obj, "colors", None) or ()
    if i < len(colors):
        return colors[i]
    return _PALETTE[i % len(_PALETTE)]


def _rect_record(obj, r: Rect, color: str, fill: bool = False) -> dict:
    return {"kind": "rect", "id": obj.id, "tag": obj.type_tag,
            "x": r.x, "y": r.y, "w": r.w, "h": r.h,
            "color": color, "fill": fill}


def _text_record(obj, box: Rect, text: str, color: str = "black",
                 angle: float = 0.0) -> dict:
    return {"kind": "text", "id": obj.id, "tag": obj.type_tag,
            "x": box.x, "y": box.y, "w": box.w, "h": box.h,
            "text": text, "color": color, "angle": angle}


def _circle_record(obj, center, r: float, color: str) -> dict:
    return {"kind": "circle", "id": obj.id, "tag": obj.type_tag,
            "cx": center[0], "cy": center[1], "r": r, "color": color}


def _ring_sector(obj, center, r0, r1, a0, a1, color) -> dict:
    return {"kind": "ring-sector", "id": obj.id, "tag": obj.type_tag,
            "cx": center[0], "cy": center[1], "r0": r0, "r1": r1,
            "a0": a0, "a1": a1, "color": color}


def _polyline(obj, points, color) -> dict:
    return {"kind": "polyline", "id": obj.id, "tag": obj.type_tag,
            "points": [[x, y] for x, y in points], "color": color}


def draw_records(obj) -> list[dict]:
    """How one object looks, in the five primitive record kinds."""
    if isinstance(obj, (PieChartObj,)):
        out = []
        a = obj.phase
        for i, sweep in enumerate(obj.sweeps):
            out.append(_ring_sector(obj, obj.center, 0.0, obj.radius,
                                    a, a + sweep, _sector_color(obj, i)))
            a += sweep
        return out
    if isinstance(obj, SectoredRing):
        out = []
        a = obj.phase
        for i, sweep in enumerate(obj.sweeps):
            out.append(_ring_sector(obj, obj.center, obj.r_inner, obj.r_outer,
                                    a, a + sweep, _sector_color(obj, i)))
            a += sweep
        return out
    if isinstance(obj, RingShape):
        return [_ring_sector(obj, obj.center, obj.r_inner, obj.r_outer,
                             0.0, TWO_PI, obj.color)]
    if isinstance(obj, SectorShape):
        return [_ring_sector(obj, obj.center, 0.0, obj.radius,
                             obj.start_angle, obj.start_angle + obj.sweep,
                             obj.color)]
    if isinstance(obj, CircleNR):
        return [_circle_record(obj, obj.center, obj.radius, obj.color)]
    if isinstance(obj, TextRM):
        return [_text_record(obj, obj.bounds(), obj.text, obj.color,
                             obj.box.angle)]
    if isinstance(obj, PlotComposite):
        return [_rect_record(obj, obj.rect, obj.color, fill=True)]
    if isinstance(obj, ScaleObj):
        return [_rect_record(obj, obj.bounds(), "gray")]
    if isinstance(obj, BarChartObj):
        return [_rect_record(obj, obj.rect, "dimgray")]
    if obj.type_tag == "single_bar":
        track = obj.track
        fh = track.h * min(max(obj.value_fill, 0.0), 1.0)
        filled = Rect(track.x, track.bottom - fh, track.w, fh)
        return [_rect_record(obj, track, "dimgray"),
                _rect_record(obj, filled, _sector_color(obj.chart, obj.segment),
                             fill=True)]
    if isinstance(obj, GraphDots):
        out = [_polyline(obj, obj.points, "steelblue")]
        out += [_circle_record(obj, p, obj.dot_radius, "steelblue")
                for p in obj.points]
        return out
    if isinstance(obj, DotNest):
        return [_rect_record(obj, obj.panel, "gray"),
                _circle_record(obj, obj.patch_point, obj.patch_radius,
                               "indianred")]
    if isinstance(obj, VerticalDots):
        return [_circle_record(obj, p, obj.radius, "seagreen")
                for p in obj.points]
    if isinstance(obj, SegmentedSliders):
        out = [_rect_record(obj, obj.area, "gray")]
        out += [_polyline(obj, [(x, obj.area.top), (x, obj.area.bottom)],
                          "indianred") for x in obj.line_xs[1:-1]]
        return out
    if isinstance(obj, BoundedSlider):
        return [_polyline(obj, [(obj.x, obj.y_top), (obj.x, obj.y_bottom)],
                          "indianred")]
    if isinstance(obj, ElasticFrame):
        return [_rect_record(obj, obj.frame, obj.background, fill=True)]
    if isinstance(obj, OneSideRect):
        return [_rect_record(obj, obj.track, "lightsteelblue", fill=True),
                _polyline(obj, [(obj.track.left, obj.slider_coord),
                                (obj.track.right, obj.slider_coord)],
                          "black")]
    # rects, barriers, helpers, comments: bounds plus whatever text they carry
    box = obj.bounds()
    color = getattr(obj, "color", "black")
    text = getattr(obj, "text", None)
    if text is not None:
        tilt = getattr(getattr(obj, "box", None), "angle", 0.0)
        return [_text_record(obj, box, text, color, tilt)]
    return [_rect_record(obj, box, color, fill=obj.type_tag != "corner_helper")]


def _family(scene: Scene):
    """Every object a menu can name, children included."""
    for obj in scene.objects:
        yield obj
        if isinstance(obj, PlotComposite):
            yield obj.helper
            yield from obj.h_scales
            yield from obj.v_scales
            yield from obj.comments
        elif isinstance(obj, PieChartObj):
            yield from obj.sector_comments
            yield from obj.circle_comments
        elif isinstance(obj, RingSetObj):
            for ring in obj.rings:
                yield ring
                yield from ring.comments
        elif isinstance(obj, SectoredRing):
            yield from obj.comments
        elif isinstance(obj, BarChartObj):
            yield from obj.bars
            yield obj.num_scale
            yield obj.text_scale


class EngineBridge:
    """One scene, one mover, and the message handlers over them."""

    def __init__(self, scene: Scene):
        self.scene = scene
        self.mover = build_mover(scene)
        self.initial = save_scene(scene)
        self.store = ProfileStore()
        self.down_point = None
        self.down_button = None
        self.pointer = (0.0, 0.0)

    def rebuild(self) -> None:
        self.mover = build_mover(self.scene)

    # frame assembly

    def frame(self, menu_request=None) -> dict:
        draw_list = []
        for qi in range(len(self.mover.queue) - 1, -1, -1):
            draw_list += draw_records(self.mover.queue[qi].obj)
        return {"draw_list": draw_list,
                "cursor_hint": self.mover.cursor_hint(self.pointer).value,
                "menu_request": menu_request}

    def _path(self, obj) -> list[int]:
        by_id = {o.id: o for o in _family(self.scene)}
        path = [obj.id]
        seen = {obj.id}
        cur = obj
        while getattr(cur, "parent_id", None) in by_id:
            cur = by_id[cur.parent_id]
            if cur.id in seen:  # defensive: never loop on a bad link
                break
            seen.add(cur.id)
            path.append(cur.id)
        path.reverse()
        return path

    def _menu_request(self, obj, point, reason: str) -> dict:
        return {"tag": obj.type_tag, "point": [point[0], point[1]],
                "path": self._path(obj), "reason": reason}

    # message handlers

    def on_pointer(self, msg: dict) -> dict:
        kind = msg["kind"]
        p = (msg["x"], msg["y"])
        self.pointer = p
        menu = None
        if kind == "down":
            button = _BUTTONS[msg.get("button", "L")]
            self.mover.catch(p, button)
            self.down_point = p
            self.down_button = button
        elif kind == "move":
            self.mover.move(p)
        elif kind == "up":
            target = self.mover.caught_object
            had = self.mover.release(p)[0]
            if (had and target is not None
                    and self.down_button is MouseButton.RIGHT
                    and self.down_point is not None
                    and classify_release(self.down_point, p)
                    is ReleaseKind.CLICK):
                menu = self._menu_request(target, p, "menu")
            self.down_point = None
            self.down_button = None
        elif kind == "dblclick":
            info = self.mover.sensed(p)
            if info is not None and info.catchable:
                obj = self.mover.queue[info.queue_index].obj
                menu = self._menu_request(obj, p, "tune")
        else:
            raise ValueError(f"unknown pointer kind {kind!r}")
        return self.frame(menu)

    def _resolve(self, path: list[int]):
        by_id = {o.id: o for o in _family(self.scene)}
        return by_id[path[-1]]

    def _top_of(self, obj):
        for top in self.scene.objects:
            if top is obj or any(child is obj for child in _subtree(top)):
                return top
        raise KeyError(f"object {obj.id} is not in the scene")

    def on_menu(self, msg: dict) -> dict:
        command = msg["command"]
        extra = {}
        if command == "restore-at":
            obj = restore_object_at(msg["record"], tuple(msg["point"]))
            self.scene.add(obj)
        elif command == "default-view":
            default_view_reset("layout", self.store)
            self.scene = load_scene(self.initial)
        elif command == "save-view":
            self.store.write("layout", save_scene(self.scene).splitlines())
        elif command == "load-view":
            held = self.store.read("layout")
            if held is not None:
                self.scene = load_scene("\n".join(held[1]) + "\n")
        else:
            obj = self._resolve(msg["path"])
            if command == "hide":
                set_visible(obj, False)
            elif command == "unveil":
                set_visible(obj, True)
            elif command == "fix":
                obj.movable = False
            elif command == "unfix":
                obj.movable = True
            elif command in ("level-up", "level-down", "level-top",
                             "level-bottom"):
                self._relevel(self._top_of(obj), command)
            elif command == "duplicate":
                top = self._top_of(obj)
                record = save_object(top)
                x, y = top.reference_point()
                self.scene.add(restore_object_at(record, (x + 12, y + 12)))
            elif command == "delete":
                self.scene.objects.remove(self._top_of(obj))
            elif command == "save-object":
                extra["record"] = save_object(self._top_of(obj))
            else:
                raise ValueError(f"unknown menu command {command!r}")
        self.rebuild()
        out = self.frame()
        out.update(extra)
        return out

    def _relevel(self, top, command: str) -> None:
        objs = self.scene.objects
        i = objs.index(top)
        objs.pop(i)
        # scene order is queue order; the head of the queue is on top
        if command == "level-top":
            objs.insert(0, top)
        elif command == "level-bottom":
            objs.append(top)
        elif command == "level-up":
            objs.insert(max(i - 1, 0), top)
        else:
            objs.insert(min(i + 1, len(objs)), top)

    def handle(self, msg: dict) -> dict:
        op = msg.get("op", "pointer")
        if op == "pointer":
            return self.on_pointer(msg)
        if op == "menu":
            return self.on_menu(msg)
        if op == "snapshot":
            return {"scene": save_scene(self.scene)}
        if op == "load":
            self.scene = load_scene(msg["scene"])
            self.rebuild()
            return self.frame()
        if op == "sensed":
            info = self.mover.sensed((msg["x"], msg["y"]))
            if info is None:
                return {"hit": None}
            return {"hit": {"queue_index": info.queue_index,
                            "object_id": info.object_id,
                            "node_ordinal": info.node_ordinal,
                            "cursor": info.cursor.value,
                            "catchable": info.catchable}}
        if op == "frame":
            return self.frame()
        if op == "covers":
            return {"covers": covers_text(self.mover)}
        raise ValueError(f"unknown op {op!r}")


def _subtree(top):
    probe = Scene()
    probe.objects = [top]
    found = list(_family(probe))
    return found[1:]


def run_bridge(scene: Scene, stdin, stdout) -> None:
    """Reads one JSON message per line until quit or end of input."""
    bridge = EngineBridge(scene)
    stdout.write(json.dumps(bridge.frame(), sort_keys=True) + "\n")
    stdout.flush()
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            msg = json.loads(line)
            if msg.get("op") == "quit":
                break
            reply = bridge.handle(msg)
        except (KeyError, TypeError, ValueError) as bad:
            reply = {"error": str(bad)}
        stdout.write(json.dumps(reply, sort_keys=True) + "\n")
        stdout.flush()
