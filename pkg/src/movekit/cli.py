"""Command line front door.

Exit codes: 0 clean, 1 a replay assertion or fuzz invariant failed,
2 usage or input that does not parse.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .harness import (ScriptError, build_mover, covers_text, default_scene,
                      eval_corpus, fuzz, hitmap_grid, hitmap_text,
                      parse_region, replay)
from .persist import (SnapshotParseError, UnsupportedVersion, load_scene,
                      save_scene)

USAGE_ERROR = 2
ASSERT_ERROR = 1


def _read(path: str) -> str:
    return Path(path).read_text()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load(path: str):
    return load_scene(_read(path))


def _cmd_replay(args) -> int:
    report = replay(_read(args.scene), _read(args.script))
    sys.stdout.write(report.text)
    if args.out is not None:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, text in report.snapshots.items():
            (out_dir / f"{name}.scene").write_text(text)
    return ASSERT_ERROR if report.failures else 0


def _cmd_hitmap(args) -> int:
    region = parse_region(args.region)
    mover = build_mover(_load(args.scene))
    grid = hitmap_grid(mover, region)
    _emit(hitmap_text(grid, region), args.out)
    if args.figure is not None:
        from .report import render_hitmap_figure
        render_hitmap_figure(grid, region, args.figure)
    return 0


def _cmd_covers(args) -> int:
    mover = build_mover(_load(args.scene))
    _emit(covers_text(mover), args.out)
    if args.figure is not None:
        from .report import render_covers_figure
        render_covers_figure(mover, args.figure)
    return 0


def _cmd_fuzz(args) -> int:
    scene = _load(args.scene) if args.scene is not None else None
    report = fuzz(args.seed, args.steps, scene=scene)
    sys.stdout.write(report.text)
    if report.violations:
        out_dir = Path(args.out) if args.out is not None else Path.cwd()
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "fuzz-scene.scene").write_text(report.start_scene)
        (out_dir / "fuzz-script.events").write_text(
            "\n".join(report.script_lines) + "\n")
        sys.stderr.write(f"dumped scene and script to {out_dir}\n")
        return ASSERT_ERROR
    return 0


def _cmd_eval(args) -> int:
    lines = _read(args.script).splitlines()
    _emit(eval_corpus(lines, seed=args.seed, args_per_expr=args.steps),
          args.out)
    return 0


def _cmd_scene_fmt(args) -> int:
    _emit(save_scene(_load(args.scene)), args.out)
    return 0


def _cmd_bridge(args) -> int:
    from .bridge import run_bridge
    scene = _load(args.scene) if args.scene is not None else default_scene()
    run_bridge(scene, sys.stdin, sys.stdout)
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="movekit",
                                description="headless scene driving")
    sub = p.add_subparsers(dest="command", required=True)

    replay_p = sub.add_parser("replay", help="run an event script")
    replay_p.add_argument("--scene", required=True)
    replay_p.add_argument("--script", required=True)
    replay_p.add_argument("--out", help="directory for snapshot files")
    replay_p.set_defaults(run=_cmd_replay)

    hitmap_p = sub.add_parser("hitmap", help="catch target per integer point")
    hitmap_p.add_argument("--scene", required=True)
    hitmap_p.add_argument("--region", required=True, metavar="x,y,w,h")
    hitmap_p.add_argument("--out")
    hitmap_p.add_argument("--figure", help="also render the grid to an image")
    hitmap_p.set_defaults(run=_cmd_hitmap)

    covers_p = sub.add_parser("covers", help="draw covers as text commands")
    covers_p.add_argument("--scene", required=True)
    covers_p.add_argument("--out")
    covers_p.add_argument("--figure", help="also render the covers to an image")
    covers_p.set_defaults(run=_cmd_covers)

    fuzz_p = sub.add_parser("fuzz", help="seeded events with invariant checks")
    fuzz_p.add_argument("--scene")
    fuzz_p.add_argument("--seed", type=int, default=1)
    fuzz_p.add_argument("--steps", type=int, default=1000)
    fuzz_p.add_argument("--out", help="directory for violation dumps")
    fuzz_p.set_defaults(run=_cmd_fuzz)

    eval_p = sub.add_parser("eval", help="run an expression corpus")
    eval_p.add_argument("--script", required=True, help="corpus file")
    eval_p.add_argument("--seed", type=int, default=0)
    eval_p.add_argument("--steps", type=int, default=5,
                        help="random arguments per expression")
    eval_p.add_argument("--out")
    eval_p.set_defaults(run=_cmd_eval)

    scene_p = sub.add_parser("scene", help="scene file utilities")
    scene_sub = scene_p.add_subparsers(dest="scene_command", required=True)
    fmt_p = scene_sub.add_parser("fmt", help="rewrite in canonical form")
    fmt_p.add_argument("--scene", required=True)
    fmt_p.add_argument("--out")
    fmt_p.set_defaults(run=_cmd_scene_fmt)

    bridge_p = sub.add_parser("bridge",
                              help="JSON-lines engine loop for a frontend")
    bridge_p.add_argument("--scene")
    bridge_p.set_defaults(run=_cmd_bridge)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.run(args)
    except (OSError, ScriptError, SnapshotParseError, UnsupportedVersion,
            ValueError) as bad:
        sys.stderr.write(f"movekit: {bad}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
