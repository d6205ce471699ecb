"""Headless driving of scenes: event scripts, hit maps, cover renders, fuzz.

Everything here is deterministic by construction.  There is no wall clock;
a double click is an explicit script command, never a timing inference.
Scripts refer to objects by the ids written in the scene file, and all
text output uses fixed six-decimal reals, so the same inputs give the
same bytes on every run.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .charts import (BarChartObj, PieChartObj, PlotComposite, RingSetObj,
                     ScaleDirection, SectoredRing, plot_into_mover)
from .editors import DotNest, GraphDots, SegmentedSliders, VerticalDots
from .expr import ParseError, analyse, calculate
from .geometry import Point2, Rect
from .groups import ElasticFrame, group_queue_position
from .mover import ClippingMode, Mover, ReleaseKind, classify_release
from .persist import fmt_real, load_scene, save_scene
from .scene import MouseButton, Scene
from .shapes import (Barrier, CircleNR, OneSideRect, ResizableRect,
                     SectorShape, TextRM)

MAX_HITMAP_CELLS = 4096 * 4096


class ScriptError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line = line_no


# scene -> mover assembly


def build_mover(scene: Scene, work_area: Rect | None = None,
                clipping: ClippingMode | None = None) -> Mover:
    """Registers the scene the way the UI would: composites expand
    themselves, frames slot in right behind their deepest member."""
    mover = Mover(work_area=work_area, clipping=clipping)
    frames = []
    for obj in scene.objects:
        if isinstance(obj, ElasticFrame):
            frames.append(obj)
        elif isinstance(obj, RingSetObj):
            obj.into_mover(mover, len(mover))
        elif isinstance(obj, PlotComposite):
            plot_into_mover(obj, mover, len(mover))
        elif isinstance(obj, BarChartObj):
            if obj.effectively_visible:
                obj.into_mover(mover, len(mover))
        elif obj.effectively_visible:
            mover.add(obj)
    for g in frames:
        try:
            pos = group_queue_position(g, [reg.obj for reg in mover.queue])
        except ValueError:
            continue  # every member hidden: the frame has nothing to wrap
        mover.insert(pos, g)
    return mover


# event scripts


@dataclass(frozen=True)
class Command:
    line_no: int
    raw: str
    kind: str
    args: tuple


_BUTTONS = {"L": MouseButton.LEFT, "R": MouseButton.RIGHT}


def _int_args(parts: list[str], n: int, line_no: int) -> tuple:
    if len(parts) != n:
        raise ScriptError(line_no, f"expected {n} fields, got {len(parts)}")
    out = []
    for s in parts:
        try:
            out.append(int(s))
        except ValueError:
            raise ScriptError(line_no, f"not an integer: {s!r}") from None
    return tuple(out)


def parse_script(text: str) -> list[Command]:
    commands = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        kind, rest = parts[0], parts[1:]
        if kind in ("down", "up"):
            if len(rest) != 3 or rest[2] not in _BUTTONS:
                raise ScriptError(line_no, f"usage: {kind} x y L|R")
            args = _int_args(rest[:2], 2, line_no) + (rest[2],)
        elif kind in ("move", "dblclick"):
            args = _int_args(rest, 2, line_no)
        elif kind == "assert-pos":
            args = _int_args(rest, 3, line_no)
        elif kind == "assert-eq":
            if len(rest) != 2:
                raise ScriptError(line_no, "usage: assert-eq path value")
            args = tuple(rest)
        elif kind == "snapshot":
            if len(rest) != 1 or not rest[0].isidentifier():
                raise ScriptError(line_no, "usage: snapshot name")
            args = (rest[0],)
        else:
            raise ScriptError(line_no, f"unknown command {kind!r}")
        commands.append(Command(line_no, stripped, kind, args))
    return commands


def _resolve_path(scene: Scene, path: str):
    """`<id>.attr.attr[i]...` down from a written object id."""
    head, _, rest = path.partition(".")
    obj = scene.source_ids.get(int(head))
    if obj is None:
        raise KeyError(f"no object {head}")
    value = obj
    for token in rest.split(".") if rest else []:
        name, _, index = token.partition("[")
        value = getattr(value, name)
        if index:
            value = value[int(index.rstrip("]"))]
    return value


def _values_agree(actual, expected: str) -> bool:
    if expected in ("true", "false"):
        return actual is (expected == "true")
    try:
        return math.isclose(float(actual), float(expected),
                            rel_tol=1e-9, abs_tol=1e-9)
    except (TypeError, ValueError):
        return str(actual) == expected


@dataclass
class ReplayReport:
    lines: list[str] = field(default_factory=list)
    snapshots: dict[str, str] = field(default_factory=dict)
    failures: int = 0

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def replay(scene_text: str, script_text: str) -> ReplayReport:
    """Drives the scene exactly as a UI would, one command per line."""
    scene = load_scene(scene_text)
    commands = parse_script(script_text)
    mover = build_mover(scene)
    wid_of = {id(o): w for w, o in scene.source_ids.items()}
    report = ReplayReport()
    report.lines.append("replay v1")
    down_point: Point2 | None = None

    def label(obj) -> str:
        return str(wid_of.get(id(obj), f"live{obj.id}"))

    for c in commands:
        if c.kind == "down":
            x, y, b = c.args
            caught = mover.catch((x, y), _BUTTONS[b])
            down_point = (x, y)
            result = f"caught {label(mover.caught_object)}" if caught else "missed"
        elif c.kind == "move":
            if mover.move(c.args):
                result = "drag accepted" if mover.last_move_accepted else "drag held"
            else:
                result = "idle"
        elif c.kind == "up":
            x, y, b = c.args
            had_drag = mover.drag is not None
            mover.release((x, y))
            if had_drag and down_point is not None:
                kind = classify_release(down_point, (x, y))
                result = "release click" if kind is ReleaseKind.CLICK else "release drag"
            else:
                result = "release idle"
            down_point = None
        elif c.kind == "dblclick":
            # the headless stand-in for the tuning dialog: report the target
            info = mover.sensed(c.args)
            if info is None or not info.catchable:
                result = "tune none"
            else:
                result = f"tune {label(mover.queue[info.queue_index].obj)}"
        elif c.kind == "assert-pos":
            wid, x, y = c.args
            obj = scene.source_ids.get(wid)
            if obj is None:
                result = f"fail no object {wid}"
            else:
                px, py = obj.reference_point()
                if abs(px - x) <= 1e-6 and abs(py - y) <= 1e-6:
                    result = "pass"
                else:
                    result = f"fail at {fmt_real(px)} {fmt_real(py)}"
            report.failures += result != "pass"
        elif c.kind == "assert-eq":
            path, expected = c.args
            try:
                actual = _resolve_path(scene, path)
            except (AttributeError, IndexError, KeyError, TypeError, ValueError) as bad:
                actual, result = None, f"fail {bad}"
            else:
                result = "pass" if _values_agree(actual, expected) \
                    else f"fail got {actual!r}"
            report.failures += result != "pass"
        else:  # snapshot
            name = c.args[0]
            text = save_scene(scene)
            report.snapshots[name] = text
            result = f"saved {len(text.splitlines()) - 1} records"
        report.lines.append(f"{c.line_no} {c.raw} -> {result}")
    status = "fail" if report.failures else "ok"
    report.lines.append(f"result {status} failures={report.failures}")
    return report


# hit maps


def parse_region(text: str) -> Rect:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("region must be x,y,w,h")
    x, y, w, h = (int(s) for s in parts)
    if w <= 0 or h <= 0:
        raise ValueError("region must have positive size")
    if w * h > MAX_HITMAP_CELLS:
        raise ValueError("region exceeds 4096 x 4096 cells")
    return Rect(x, y, w, h)


def hitmap_grid(mover: Mover, region: Rect) -> list[list[str]]:
    """Cell labels over every integer point: queue index, B, or a dot.

    Pure query: sensed never changes mover state.
    """
    grid = []
    for y in range(int(region.y), int(region.y + region.h)):
        row = []
        for x in range(int(region.x), int(region.x + region.w)):
            info = mover.sensed((x, y))
            if info is None:
                row.append(".")
            elif not info.catchable:
                row.append("B")
            else:
                row.append(str(info.queue_index))
        grid.append(row)
    return grid


def hitmap_text(grid: list[list[str]], region: Rect) -> str:
    head = (f"hitmap {int(region.x)} {int(region.y)} "
            f"{int(region.w)} {int(region.h)}")
    return "\n".join([head] + [" ".join(row) for row in grid]) + "\n"


# cover renders


def covers_text(mover: Mover) -> str:
    """Covers exactly as the mover sees them, in plain drawing commands.

    Deeper covers come first (queue tail to head) and inside one cover the
    last node is drawn first, so what the scan hits first lands on top.
    Interiors are filled only where the node asks for clearance.
    """
    lines = ["covers v1"]
    for qi in range(len(mover.queue) - 1, -1, -1):
        reg = mover.queue[qi]
        lines.append(f"cover {qi} color={reg.color}")
        for n in reversed(reg.cover.nodes):
            fill = n.fill_color if n.clearance else "none"
            if n.center is not None:
                lines.append(f" node {n.ordinal} circle cx={fmt_real(n.center[0])}"
                             f" cy={fmt_real(n.center[1])} r={fmt_real(n.radius)}"
                             f" fill={fill}")
            elif n.segment is not None:
                a, b = n.segment.a, n.segment.b
                lines.append(f" node {n.ordinal} strip x1={fmt_real(a[0])}"
                             f" y1={fmt_real(a[1])} x2={fmt_real(b[0])}"
                             f" y2={fmt_real(b[1])} half={fmt_real(n.radius)}"
                             f" fill={fill}")
            else:
                pts = ",".join(f"{fmt_real(x)}:{fmt_real(y)}"
                               for x, y in n.vertices)
                lines.append(f" node {n.ordinal} polygon pts={pts} fill={fill}")
    return "\n".join(lines) + "\n"


# invariant suites; each returns human-readable violations, empty when clean


def _every_chart(scene: Scene):
    for obj in scene.objects:
        if isinstance(obj, RingSetObj):
            yield from obj.rings
        elif isinstance(obj, (PieChartObj, SectoredRing)):
            yield obj


def invariant_sweep_sums(scene: Scene) -> list[str]:
    out = []
    for chart in _every_chart(scene):
        total = sum(chart.sweeps)
        if abs(total - 2.0 * math.pi) > 1e-9:
            out.append(f"object {chart.id}: sweeps sum to {total!r}")
        if any(s < 0 for s in chart.sweeps):
            out.append(f"object {chart.id}: negative sweep")
    return out


def invariant_visibility(mover: Mover) -> list[str]:
    return [f"object {reg.obj.id} registered while invisible"
            for reg in mover.queue if not reg.obj.effectively_visible]


def invariant_frames(scene: Scene) -> list[str]:
    out = []
    for obj in scene.objects:
        if not isinstance(obj, ElasticFrame):
            continue
        frame = obj.frame
        for m in obj.members:
            if not frame.contains_rect(m.bounds()):
                out.append(f"frame {obj.id} does not contain member {m.id}")
    return out


def invariant_args_order(scene: Scene) -> list[str]:
    out = []
    for obj in scene.objects:
        if isinstance(obj, GraphDots):
            if any(a > b for a, b in zip(obj.args, obj.args[1:])):
                out.append(f"graph {obj.id}: args not nondecreasing")
        if isinstance(obj, SegmentedSliders):
            if any(a >= b for a, b in zip(obj.line_xs, obj.line_xs[1:])):
                out.append(f"sliders {obj.id}: lines not strictly increasing")
    return out


def invariant_clip(mover: Mover) -> list[str]:
    if mover.drag is None or mover.work_area is None:
        return []
    x, y = mover.drag.last_point
    wa = mover.work_area
    if mover.clipping is ClippingMode.VISUAL:
        if not (wa.left <= x <= wa.right and wa.top <= y <= wa.bottom):
            return [f"pointer {x},{y} escaped the work area"]
    if mover.clipping is ClippingMode.SAFE:
        if x < wa.left or y < wa.top:
            return [f"pointer {x},{y} escaped left/above the work area"]
    return []


def invariant_sizes(scene: Scene) -> list[str]:
    out = []
    for obj in scene.objects:
        if isinstance(obj, ResizableRect):
            r = obj.rect
            ok = (obj.min_size[0] <= r.w <= obj.max_size[0]
                  and obj.min_size[1] <= r.h <= obj.max_size[1])
            if not ok:
                out.append(f"rect {obj.id} size {r.w}x{r.h} out of bounds")
        if isinstance(obj, CircleNR) and obj.radius < obj.min_radius:
            out.append(f"circle {obj.id} radius {obj.radius} below minimum")
        if isinstance(obj, SectorShape) and obj.radius < obj.min_radius:
            out.append(f"sector {obj.id} radius {obj.radius} below minimum")
    return out


def run_invariants(scene: Scene, mover: Mover) -> list[str]:
    return (invariant_sweep_sums(scene) + invariant_visibility(mover)
            + invariant_frames(scene) + invariant_args_order(scene)
            + invariant_clip(mover) + invariant_sizes(scene))


# fuzzing


def default_scene() -> Scene:
    """The mixed scene the fuzzer and the demo start from."""
    s = Scene()
    r = ResizableRect(40, 40, 120, 80)
    s.add(r)
    s.add(Barrier(250, 30, 24, 140))
    s.add(CircleNR(420, 90, 45))
    s.add(OneSideRect(550, 40, 100, 50, 590))
    s.add(TextRM("fuzz me", (120, 200), 70, 16))

    plot = PlotComposite(40, 260, 220, 140)
    plot.add_scale(ScaleDirection.HORIZONTAL)
    plot.add_scale(ScaleDirection.VERTICAL)
    plot.add_comment("note", u=0.3, v=0.2)
    s.add(plot)

    pie = PieChartObj(430, 250, 70, [1.0, 2.0, 3.0, 2.0])
    pie.add_sector_comment(1, "big")
    s.add(pie)
    s.add(SectoredRing(640, 260, 30, 60, [1.0, 1.0, 2.0]))
    s.add(BarChartObj(40, 460, 200, 120, [[0.3, 0.6], [0.8, 0.4]]))

    g = GraphDots(Rect(300, 460, 180, 120), [0.2, 0.5, 0.8], [0.3, 0.7, 0.5])
    s.add(g)
    s.add(DotNest(Rect(520, 470, 40, 40), graph=g))
    s.add(VerticalDots(Rect(600, 460, 120, 80), [620.0, 660.0], [0.4, 0.8]))
    s.add(SegmentedSliders(Rect(580, 560, 180, 60),
                           [590.0, 640.0, 700.0, 750.0], [0.0] * 4,
                           (620.0, 680.0), x_range=(580.0, 760.0)))
    s.add(ElasticFrame([r]))
    return s


@dataclass
class FuzzReport:
    seed: int
    steps: int
    script_lines: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    start_scene: str = ""

    @property
    def text(self) -> str:
        head = f"fuzz seed={self.seed} steps={self.steps}"
        tail = [f"violation {v}" for v in self.violations]
        tail.append(f"result {'fail' if self.violations else 'ok'} "
                    f"violations={len(self.violations)}")
        return "\n".join([head] + tail) + "\n"


def fuzz(seed: int, steps: int, scene: Scene | None = None,
         work_area: Rect | None = None) -> FuzzReport:
    """Seeded pointer streams; every invariant suite runs after every event.

    The first violation stops the run; the report then carries the starting
    scene and the script so far, which replay to the same failure.
    """
    if scene is None:
        scene = default_scene()
    if work_area is None:
        work_area = Rect(0, 0, 800, 700)
    report = FuzzReport(seed, steps, start_scene=save_scene(scene))
    rng = random.Random(seed)
    mover = build_mover(scene, work_area=work_area)
    pointer = (0, 0)
    down_button = None

    for _ in range(steps):
        if down_button is None:
            if rng.random() < 0.1:
                p = (rng.randrange(0, 800), rng.randrange(0, 700))
                report.script_lines.append(f"dblclick {p[0]} {p[1]}")
                mover.sensed(p)
            else:
                pointer = (rng.randrange(0, 800), rng.randrange(0, 700))
                down_button = "L" if rng.random() < 0.85 else "R"
                report.script_lines.append(
                    f"down {pointer[0]} {pointer[1]} {down_button}")
                mover.catch(pointer, _BUTTONS[down_button])
        elif rng.random() < 0.25:
            report.script_lines.append(
                f"up {pointer[0]} {pointer[1]} {down_button}")
            mover.release(pointer)
            down_button = None
        else:
            pointer = (pointer[0] + rng.randrange(-40, 41),
                       pointer[1] + rng.randrange(-40, 41))
            report.script_lines.append(f"move {pointer[0]} {pointer[1]}")
            mover.move(pointer)
        bad = run_invariants(scene, mover)
        if bad:
            step = len(report.script_lines)
            report.violations += [f"step {step}: {b}" for b in bad]
            break
    if down_button is not None:
        report.script_lines.append(f"up {pointer[0]} {pointer[1]} {down_button}")
        mover.release(pointer)
    return report


# expression corpus runs


def eval_corpus(lines: list[str], seed: int = 0, args_per_expr: int = 5) -> str:
    """One line of outcome per expression; parse errors stay in the report."""
    rng = random.Random(seed)
    out = [f"eval seed={seed} args={args_per_expr}"]
    for line in lines:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        program = analyse(text)
        if isinstance(program, ParseError):
            out.append(f"error {program.kind.name} pos={program.position} | {text}")
            continue
        oks = 0
        for _ in range(args_per_expr):
            if calculate(program, rng.uniform(-10.0, 10.0)).ok:
                oks += 1
        probe = calculate(program, 0.5)
        shown = fmt_real(probe.value) if probe.ok else "nan"
        out.append(f"ok {oks}/{args_per_expr} at0.5={shown} | {text}")
    return "\n".join(out) + "\n"
