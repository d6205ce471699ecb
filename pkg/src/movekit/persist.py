"""Scene snapshots in one canonical text form, plus the profile store.

Snapshot grammar, one record per line after the header `movekit-scene v1`:

    object <type_tag> { key=value key=value ... }

Records appear parent-first: a composite writes its own record, then one
record per member carrying `parent=<id>`. A group's members name earlier
records; a nest's graph link may name any record in the file. Ids written
to a file are the record positions 0..n-1, regardless of the objects'
live ids; live ids are issued fresh on every load, so files stay
byte-stable while the process never reuses an id. Reals carry six
decimals, strings are percent-quoted, lists are comma-separated in square
brackets with no spaces.
"""
from __future__ import annotations

import json
from pathlib import Path
from urllib.parse import quote, unquote

from .charts import (AnchoredComment, BarChartObj, CornerHelper, PieChartObj,
                     PlotComposite, RadialComment, RadialMode, RingSetObj,
                     ScaleDirection, ScaleObj, SectoredRing, SingleBarObj,
                     set_visible)
from .editors import (BoundedSlider, DotNest, GraphDots, SegmentedSliders,
                      VerticalDots)
from .geometry import Rect, TextBasis
from .groups import ElasticFrame
from .scene import Scene, SceneObject
from .shapes import (Barrier, CircleNR, OneSideRect, ResizableRect, RingShape,
                     SectorShape, TextRM)

HEADER = "movekit-scene v1"


class UnsupportedVersion(ValueError):
    pass


class SnapshotParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line = line_no


class WrongKind(ValueError):
    pass


# value formatting


def fmt_real(v: float) -> str:
    s = f"{float(v):.6f}"
    return "0.000000" if s == "-0.000000" else s


def fmt_bool(v: bool) -> str:
    return "true" if v else "false"


def fmt_str(s: str) -> str:
    return quote(s, safe="")


def fmt_list(values, item=fmt_real) -> str:
    return "[" + ",".join(item(v) for v in values) + "]"


# save: walk composites parent-first, then emit with positional ids


def _walk(obj):
    """(object, tag, parent) triples for one top entry and its members."""
    if isinstance(obj, PlotComposite):
        yield obj, "plot", None
        yield obj.helper, "corner_helper", obj
        for s in obj.v_scales + obj.h_scales:
            yield s, "scale", obj
        for c in obj.comments:
            yield c, "comment", c.parent
        return
    if isinstance(obj, BarChartObj):
        yield obj, "bar_chart", None
        for b in obj.bars:
            yield b, "single_bar", obj
        yield obj.num_scale, "scale", obj
        yield obj.text_scale, "scale", obj
        return
    if isinstance(obj, PieChartObj):
        yield obj, "pie", None
        for c in obj.sector_comments + obj.circle_comments:
            yield c, "radial_comment", obj
        return
    if isinstance(obj, RingSetObj):
        yield obj, "ring_set", None
        for g in obj.rings:
            yield g, "sectored_ring", obj
            for c in g.comments:
                yield c, "radial_comment", g
        return
    if isinstance(obj, SectoredRing):
        yield obj, "sectored_ring", None
        for c in obj.comments:
            yield c, "radial_comment", obj
        return
    yield obj, obj.type_tag, None


def _common_fields(obj) -> list:
    out = []
    if isinstance(obj, SceneObject):
        out.append(("visible", fmt_bool(obj.visible)))
        out.append(("movable", fmt_bool(obj.movable)))
    return out


def _type_fields(obj, tag, wid) -> list:
    r = fmt_real
    if tag in ("rect", "plot"):
        t = obj.rect
        return [("x", r(t.x)), ("y", r(t.y)), ("w", r(t.w)), ("h", r(t.h)),
                ("color", fmt_str(obj.color))]
    if tag == "barrier":
        t = obj.rect
        return [("x", r(t.x)), ("y", r(t.y)), ("w", r(t.w)), ("h", r(t.h)),
                ("color", fmt_str(obj.color))]
    if tag == "one_side_rect":
        t = obj.track
        return [("x", r(t.x)), ("y", r(t.y)), ("w", r(t.w)), ("h", r(t.h)),
                ("slider", r(obj.slider_coord))]
    if tag == "circle":
        return [("cx", r(obj.center[0])), ("cy", r(obj.center[1])),
                ("r", r(obj.radius)), ("min_r", r(obj.min_radius)),
                ("color", fmt_str(obj.color))]
    if tag == "ring":
        return [("cx", r(obj.center[0])), ("cy", r(obj.center[1])),
                ("r_in", r(obj.r_inner)), ("r_out", r(obj.r_outer)),
                ("color", fmt_str(obj.color))]
    if tag == "sector":
        return [("cx", r(obj.center[0])), ("cy", r(obj.center[1])),
                ("r", r(obj.radius)), ("start", r(obj.start_angle)),
                ("sweep", r(obj.sweep)), ("min_r", r(obj.min_radius)),
                ("color", fmt_str(obj.color))]
    if tag == "text":
        b = obj.box
        return [("text", fmt_str(obj.text)), ("x", r(b.anchor[0])),
                ("y", r(b.anchor[1])), ("w", r(b.width)), ("h", r(b.height)),
                ("angle", r(b.angle)), ("mark", str(b.anchor_basis.value)),
                ("color", fmt_str(obj.color))]
    if tag == "corner_helper":
        return []
    if tag == "scale":
        return [("direction", obj.direction.value),
                ("thickness", r(obj.thickness)),
                ("offset", r(obj.offset_from_area)),
                ("v0", r(obj.value_range[0])), ("v1", r(obj.value_range[1]))]
    if tag == "comment":
        return [("text", fmt_str(obj.text)), ("u", r(obj.u)), ("v", r(obj.v)),
                ("w", r(obj.box.width)), ("h", r(obj.box.height)),
                ("angle", r(obj.box.angle))]
    if tag == "radial_comment":
        return [("text", fmt_str(obj.text)), ("mode", obj.mode.value),
                ("coef", r(obj.coef)), ("angle", r(obj.anchor_angle)),
                ("inside", fmt_bool(obj.inside)), ("w", r(obj.box.width)),
                ("h", r(obj.box.height)), ("text_angle", r(obj.box.angle))]
    if tag == "pie":
        return [("cx", r(obj.center[0])), ("cy", r(obj.center[1])),
                ("r", r(obj.radius)), ("values", fmt_list(obj.values)),
                ("phase", r(obj.phase)),
                ("fix", fmt_bool(obj.fix_angles_on_rotation)),
                ("easy", fmt_bool(obj.easy_to_read)),
                ("colors", fmt_list(obj.colors, fmt_str))]
    if tag == "sectored_ring":
        return [("cx", r(obj.center[0])), ("cy", r(obj.center[1])),
                ("r_in", r(obj.r_inner)), ("r_out", r(obj.r_outer)),
                ("values", fmt_list(obj.values)), ("phase", r(obj.phase)),
                ("colors", fmt_list(obj.colors, fmt_str))]
    if tag == "ring_set":
        return [("cx", r(obj.center[0])), ("cy", r(obj.center[1]))]
    if tag == "bar_chart":
        flat = [v for row in obj.values for v in row]
        return [("x", r(obj.rect.x)), ("y", r(obj.rect.y)),
                ("w", r(obj.rect.w)), ("h", r(obj.rect.h)),
                ("sets", str(obj.n_sets)), ("values", fmt_list(flat)),
                ("v0", r(obj.value_range[0])), ("v1", r(obj.value_range[1])),
                ("base", r(obj.base_level)), ("f_lo", r(obj.fill[0])),
                ("f_hi", r(obj.fill[1])),
                ("orientation", str(obj.orientation)),
                ("colors", fmt_list(obj.colors, fmt_str))]
    if tag == "single_bar":
        t = obj.track
        return [("x", r(t.x)), ("y", r(t.y)), ("w", r(t.w)), ("h", r(t.h)),
                ("fill", r(obj.value_fill)), ("segment", str(obj.segment)),
                ("set", str(obj.set_index))]
    if tag == "graph_dots":
        a = obj.plot_area
        return [("x", r(a.x)), ("y", r(a.y)), ("w", r(a.w)), ("h", r(a.h)),
                ("args", fmt_list(obj.args)), ("vals", fmt_list(obj.vals)),
                ("x0", r(obj.x_range[0])), ("x1", r(obj.x_range[1])),
                ("y0", r(obj.y_range[0])), ("y1", r(obj.y_range[1])),
                ("r", r(obj.dot_radius))]
    if tag == "dot_nest":
        a = obj.panel
        # the link survives only when the graph is part of the same save
        link = "none" if obj.graph is None or obj.graph not in wid \
            else str(wid[obj.graph])
        return [("x", r(a.x)), ("y", r(a.y)), ("w", r(a.w)), ("h", r(a.h)),
                ("patch_r", r(obj.patch_radius)),
                ("patch_x", r(obj.patch_point[0])),
                ("patch_y", r(obj.patch_point[1])), ("graph", link)]
    if tag == "segmented_sliders":
        a = obj.area
        return [("x", r(a.x)), ("y", r(a.y)), ("w", r(a.w)), ("h", r(a.h)),
                ("xs", fmt_list(obj.xs)), ("ys", fmt_list(obj.ys)),
                ("inner", fmt_list(obj.line_xs[1:-1])),
                ("x0", r(obj.x_range[0])), ("x1", r(obj.x_range[1])),
                ("half", r(obj.half_sense))]
    if tag == "bounded_slider":
        return [("x", r(obj.x)), ("y_top", r(obj.y_top)),
                ("y_bottom", r(obj.y_bottom))]
    if tag == "vertical_dots":
        a = obj.area
        return [("x", r(a.x)), ("y", r(a.y)), ("w", r(a.w)), ("h", r(a.h)),
                ("xs", fmt_list(p[0] for p in obj.points)),
                ("values", fmt_list(obj.values)),
                ("v0", r(obj.value_range[0])), ("v1", r(obj.value_range[1])),
                ("r", r(obj.radius))]
    if tag == "group":
        try:
            members = [str(wid[m]) for m in obj.members]
        except KeyError:
            raise ValueError("group member not in the scene") from None
        return [("members", "[" + ",".join(members) + "]"),
                ("margin", r(obj.margin)),
                ("background", fmt_str(obj.background)),
                ("transparency", r(obj.transparency)),
                ("recompute", fmt_bool(obj.recompute_on_release))]
    raise ValueError(f"no writer for type tag {tag!r}")


def save_scene(scene) -> str:
    """The whole scene as canonical text; equal scenes give equal bytes."""
    tops = scene.objects if isinstance(scene, Scene) else list(scene)
    triples = [t for top in tops for t in _walk(top)]
    wid = {trip[0]: i for i, trip in enumerate(triples)}
    lines = [HEADER]
    for obj, tag, parent in triples:
        fields = [("id", str(wid[obj]))]
        if parent is not None:
            fields.append(("parent", str(wid[parent])))
        fields += _common_fields(obj)
        fields += _type_fields(obj, tag, wid)
        body = " ".join(f"{k}={v}" for k, v in fields)
        lines.append(f"object {tag} {{ {body} }}")
    return "\n".join(lines) + "\n"


def save_object(obj) -> str:
    """One top-level object (with its members) in snapshot form."""
    return save_scene([obj])


def scene_equivalent(a, b) -> bool:
    """Structural equality through canonical form; ids never matter."""
    return save_scene(a) == save_scene(b)


# load


class _Fields:
    """One record's key=value pairs with typed, validated access."""

    def __init__(self, line_no: int, tag: str, pairs: dict):
        self.line_no = line_no
        self.tag = tag
        self.pairs = pairs

    def fail(self, message: str):
        raise SnapshotParseError(self.line_no, message)

    def raw(self, key: str) -> str:
        if key not in self.pairs:
            self.fail(f"missing key {key!r} in {self.tag}")
        return self.pairs[key]

    def real(self, key: str) -> float:
        try:
            return float(self.raw(key))
        except ValueError:
            self.fail(f"bad number for {key!r}")

    def integer(self, key: str) -> int:
        try:
            return int(self.raw(key))
        except ValueError:
            self.fail(f"bad integer for {key!r}")

    def boolean(self, key: str) -> bool:
        v = self.raw(key)
        if v not in ("true", "false"):
            self.fail(f"bad flag for {key!r}")
        return v == "true"

    def text(self, key: str) -> str:
        return unquote(self.raw(key))

    def items(self, key: str) -> list:
        v = self.raw(key)
        if not (v.startswith("[") and v.endswith("]")):
            self.fail(f"bad list for {key!r}")
        inner = v[1:-1]
        return inner.split(",") if inner else []

    def reals(self, key: str) -> list:
        try:
            return [float(s) for s in self.items(key)]
        except ValueError:
            self.fail(f"bad list for {key!r}")

    def integers(self, key: str) -> list:
        try:
            return [int(s) for s in self.items(key)]
        except ValueError:
            self.fail(f"bad list for {key!r}")

    def texts(self, key: str) -> list:
        return [unquote(s) for s in self.items(key)]


def _parse_record(line_no: int, line: str) -> _Fields:
    if not line.startswith("object "):
        raise SnapshotParseError(line_no, "expected an object record")
    tag, sep, rest = line[len("object "):].partition(" { ")
    if not sep or not rest.endswith(" }") or not tag:
        raise SnapshotParseError(line_no, "malformed record")
    pairs = {}
    body = rest[:-2]
    for chunk in body.split(" ") if body else []:
        key, eq, value = chunk.partition("=")
        if not eq or not key:
            raise SnapshotParseError(line_no, f"malformed field {chunk!r}")
        if key in pairs:
            raise SnapshotParseError(line_no, f"repeated key {key!r}")
        pairs[key] = value
    return _Fields(line_no, tag, pairs)


def _apply_flags(obj, f: _Fields) -> None:
    obj.visible = f.boolean("visible")
    obj.movable = f.boolean("movable")


def _build_top(f: _Fields):
    tag = f.tag
    if tag == "rect":
        return ResizableRect(f.real("x"), f.real("y"), f.real("w"),
                             f.real("h"), color=f.text("color"))
    if tag == "barrier":
        return Barrier(f.real("x"), f.real("y"), f.real("w"), f.real("h"),
                       color=f.text("color"))
    if tag == "one_side_rect":
        return OneSideRect(f.real("x"), f.real("y"), f.real("w"), f.real("h"),
                           slider_coord=f.real("slider"))
    if tag == "circle":
        return CircleNR(f.real("cx"), f.real("cy"), f.real("r"),
                        min_radius=f.real("min_r"), color=f.text("color"))
    if tag == "ring":
        return RingShape(f.real("cx"), f.real("cy"), f.real("r_in"),
                         f.real("r_out"), color=f.text("color"))
    if tag == "sector":
        return SectorShape(f.real("cx"), f.real("cy"), f.real("r"),
                           f.real("start"), f.real("sweep"),
                           min_radius=f.real("min_r"), color=f.text("color"))
    if tag == "text":
        return TextRM(f.text("text"), (f.real("x"), f.real("y")), f.real("w"),
                      f.real("h"), angle=f.real("angle"),
                      rotation_anchor=TextBasis(f.integer("mark")),
                      color=f.text("color"))
    if tag == "plot":
        return PlotComposite(f.real("x"), f.real("y"), f.real("w"),
                             f.real("h"), color=f.text("color"))
    if tag == "pie":
        return PieChartObj(f.real("cx"), f.real("cy"), f.real("r"),
                           f.reals("values"), phase=f.real("phase"),
                           fix_angles_on_rotation=f.boolean("fix"),
                           easy_to_read=f.boolean("easy"),
                           colors=f.texts("colors"))
    if tag == "sectored_ring":
        return SectoredRing(f.real("cx"), f.real("cy"), f.real("r_in"),
                            f.real("r_out"), f.reals("values"),
                            phase=f.real("phase"), colors=f.texts("colors"))
    if tag == "ring_set":
        return RingSetObj(f.real("cx"), f.real("cy"))
    if tag == "bar_chart":
        sets = f.integer("sets")
        flat = f.reals("values")
        if sets < 1 or len(flat) % sets:
            f.fail("values do not tile into sets")
        rows = [flat[i:i + sets] for i in range(0, len(flat), sets)]
        return BarChartObj(f.real("x"), f.real("y"), f.real("w"), f.real("h"),
                           rows, value_range=(f.real("v0"), f.real("v1")),
                           base_level=f.real("base"),
                           fill=(f.real("f_lo"), f.real("f_hi")),
                           colors=f.texts("colors"),
                           orientation=f.integer("orientation"))
    if tag == "single_bar":
        return SingleBarObj(Rect(f.real("x"), f.real("y"), f.real("w"),
                                 f.real("h")), value_fill=f.real("fill"),
                            segment=f.integer("segment"),
                            set_index=f.integer("set"))
    if tag == "graph_dots":
        return GraphDots(Rect(f.real("x"), f.real("y"), f.real("w"),
                              f.real("h")), f.reals("args"), f.reals("vals"),
                         x_range=(f.real("x0"), f.real("x1")),
                         y_range=(f.real("y0"), f.real("y1")),
                         dot_radius=f.real("r"))
    if tag == "dot_nest":
        d = DotNest(Rect(f.real("x"), f.real("y"), f.real("w"), f.real("h")),
                    patch_radius=f.real("patch_r"))
        d.patch_point = (f.real("patch_x"), f.real("patch_y"))
        return d
    if tag == "segmented_sliders":
        return SegmentedSliders(Rect(f.real("x"), f.real("y"), f.real("w"),
                                     f.real("h")), f.reals("xs"),
                                f.reals("ys"), f.reals("inner"),
                                x_range=(f.real("x0"), f.real("x1")),
                                half_sense=f.real("half"))
    if tag == "bounded_slider":
        return BoundedSlider(f.real("x"), f.real("y_top"), f.real("y_bottom"))
    if tag == "vertical_dots":
        return VerticalDots(Rect(f.real("x"), f.real("y"), f.real("w"),
                                 f.real("h")), f.reals("xs"),
                            f.reals("values"),
                            value_range=(f.real("v0"), f.real("v1")),
                            radius=f.real("r"))
    f.fail(f"unknown type tag {f.tag!r}")


def _attach_member(f: _Fields, parent):
    tag = f.tag
    if tag == "corner_helper":
        if not isinstance(parent, PlotComposite):
            f.fail("corner helper outside a plot")
        return parent.helper
    if tag == "scale":
        direction = ScaleDirection(f.raw("direction"))
        if isinstance(parent, BarChartObj):
            s = parent.num_scale if direction is ScaleDirection.VERTICAL \
                else parent.text_scale
        elif isinstance(parent, PlotComposite):
            s = parent.add_scale(direction)
        else:
            f.fail("scale outside a plot")
        s.thickness = f.real("thickness")
        s.offset_from_area = f.real("offset")
        s.value_range = (f.real("v0"), f.real("v1"))
        return s
    if tag == "comment":
        if isinstance(parent, PlotComposite):
            plot = parent
        elif isinstance(parent, ScaleObj) and isinstance(parent.parent,
                                                         PlotComposite):
            plot = parent.parent
        else:
            f.fail("comment outside a plot family")
        return plot.add_comment(f.text("text"), parent, u=f.real("u"),
                                v=f.real("v"), width=f.real("w"),
                                height=f.real("h"), angle=f.real("angle"))
    if tag == "radial_comment":
        c = RadialComment(f.text("text"), RadialMode(f.raw("mode")),
                          coef=f.real("coef"), anchor_angle=f.real("angle"),
                          inside=f.boolean("inside"), width=f.real("w"),
                          height=f.real("h"))
        c.box.angle = f.real("text_angle")
        c.parent_id = getattr(parent, "id", None)
        if isinstance(parent, PieChartObj):
            dest = parent.sector_comments \
                if c.mode is RadialMode.TO_SECTOR else parent.circle_comments
            dest.append(c)
            parent.sync_comments()
        elif isinstance(parent, SectoredRing):
            parent.comments.append(c)
            parent.sync_comments()
        else:
            f.fail("radial comment outside a round chart")
        return c
    if tag == "single_bar":
        if not isinstance(parent, BarChartObj):
            f.fail("single bar outside a bar chart")
        seg, si = f.integer("segment"), f.integer("set")
        for b in parent.bars:
            if b.segment == seg and b.set_index == si:
                return b
        f.fail("single bar does not match its chart")
    if tag == "sectored_ring":
        if not isinstance(parent, RingSetObj):
            f.fail("ring member outside a ring set")
        return parent.add_ring(f.real("r_in"), f.real("r_out"),
                               f.reals("values"), phase=f.real("phase"))
    f.fail(f"type tag {f.tag!r} cannot be a member")


def _build_group(f: _Fields, by_wid: dict):
    members = []
    for w in f.integers("members"):
        if w not in by_wid:
            f.fail(f"group member id {w} not loaded")
        members.append(by_wid[w])
    return ElasticFrame(members, margin=f.real("margin"),
                        background=f.text("background"),
                        transparency=f.real("transparency"),
                        recompute_on_release=f.boolean("recompute"))


def _load_records(text: str):
    lines = text.splitlines()
    if not lines or lines[0] != HEADER:
        raise UnsupportedVersion(
            f"expected header {HEADER!r}, got {lines[0]!r}" if lines
            else "empty snapshot")
    return [(i + 1, _parse_record(i + 1, line))
            for i, line in enumerate(lines[1:], start=1) if line.strip()]


def load_scene(text: str) -> Scene:
    """Rebuilds the scene; every object gets a fresh id.

    The written ids stay reachable through scene.source_ids for scripts
    that reference them.
    """
    scene = Scene()
    by_wid: dict[int, object] = {}
    nest_links = []
    for line_no, f in _load_records(text):
        w = f.integer("id")
        if w in by_wid:
            f.fail(f"repeated object id {w}")
        try:
            if f.tag == "group":
                obj = _build_group(f, by_wid)
                scene.add(obj)
            elif "parent" in f.pairs:
                pw = f.integer("parent")
                if pw not in by_wid:
                    f.fail(f"parent id {pw} not loaded")
                obj = _attach_member(f, by_wid[pw])
            else:
                obj = _build_top(f)
                scene.add(obj)
        except SnapshotParseError:
            raise
        except (ValueError, TypeError) as bad:
            raise SnapshotParseError(line_no, str(bad)) from bad
        if f.tag == "dot_nest" and f.raw("graph") != "none":
            nest_links.append((f, obj))
        if isinstance(obj, SceneObject):
            _apply_flags(obj, f)
        by_wid[w] = obj
    for f, nest in nest_links:
        try:
            target = by_wid[int(f.raw("graph"))]
        except (ValueError, KeyError):
            target = None
        if not isinstance(target, GraphDots):
            f.fail("graph link does not name a graph record")
        nest.graph = target
    for obj in scene.objects:
        if isinstance(obj, PlotComposite):
            set_visible(obj, obj.visible)
        if isinstance(obj, (PieChartObj, SectoredRing)):
            obj.sync_comments()
        if isinstance(obj, BarChartObj):
            obj.sync_bars()
    scene.source_ids = by_wid
    return scene


def restore_object_at(text: str, anchor, expect_tag: str | None = None):
    """One saved object, rebuilt with fresh ids, reference point on anchor."""
    records = _load_records(text)
    tops = [f for _, f in records
            if "parent" not in f.pairs and f.tag != "group"]
    if len(tops) != 1:
        raise SnapshotParseError(records[0][0] if records else 1,
                                 "expected exactly one object")
    if expect_tag is not None and tops[0].tag != expect_tag:
        raise WrongKind(f"saved object is {tops[0].tag!r}, "
                        f"not {expect_tag!r}")
    scene = load_scene(text)
    obj = scene.objects[0]
    if isinstance(obj, RingSetObj):
        ref = obj.center
        obj.move_all(anchor[0] - ref[0], anchor[1] - ref[1])
    else:
        ref = obj.reference_point()
        obj.move(anchor[0] - ref[0], anchor[1] - ref[1])
    return obj


# profile store


class ProfileStore:
    """Named string-list records with a version, optionally file-backed."""

    def __init__(self, path: str | None = None):
        self.path = Path(path) if path is not None else None
        self._data: dict = {}
        if self.path is not None and self.path.exists():
            self._data = json.loads(self.path.read_text())

    def write(self, key: str, strings: list, version: int = 1) -> None:
        self._data[key] = {"version": version, "strings": list(strings)}
        self._flush()

    def read(self, key: str):
        rec = self._data.get(key)
        if rec is None:
            return None
        return rec["version"], list(rec["strings"])

    def delete(self, key: str) -> None:
        self._data.pop(key, None)
        self._flush()

    def _flush(self) -> None:
        if self.path is not None:
            self.path.write_text(json.dumps(self._data, indent=1,
                                            sort_keys=True))


def default_view_reset(form_key: str, store: ProfileStore) -> None:
    """Dropping the stored record sends the next open back to defaults."""
    store.delete(form_key)
