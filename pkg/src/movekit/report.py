"""Figure rendering for the report path.

The text outputs are the source of truth; these renderings exist so a
human can glance at a cover layout or a hit map without decoding grids.
matplotlib loads lazily and only when a figure is actually requested.
"""
from __future__ import annotations

import math

from .cover import CoverNode, ShapeKind
from .geometry import Rect
from .mover import Mover

_CAP_POINTS = 24


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _capsule_outline(node: CoverNode) -> list[tuple[float, float]]:
    (ax, ay), (bx, by) = node.segment.a, node.segment.b
    r = node.radius
    theta = math.atan2(by - ay, bx - ax)
    pts = []
    for k in range(_CAP_POINTS + 1):  # cap around b, then cap around a
        t = theta - math.pi / 2 + math.pi * k / _CAP_POINTS
        pts.append((bx + r * math.cos(t), by + r * math.sin(t)))
    for k in range(_CAP_POINTS + 1):
        t = theta + math.pi / 2 + math.pi * k / _CAP_POINTS
        pts.append((ax + r * math.cos(t), ay + r * math.sin(t)))
    return pts


def render_covers_figure(mover: Mover, path: str) -> None:
    """Same order as the text render: deeper covers first, last node first."""
    plt = _pyplot()
    from matplotlib.patches import Circle, Polygon

    fig, ax = plt.subplots(figsize=(8, 7))
    for qi in range(len(mover.queue) - 1, -1, -1):
        reg = mover.queue[qi]
        for n in reversed(reg.cover.nodes):
            style = {"edgecolor": reg.color, "linewidth": 1.0,
                     "facecolor": n.fill_color if n.clearance else "none"}
            if n.shape_kind is ShapeKind.CIRCLE:
                ax.add_patch(Circle(n.center, n.radius, **style))
            elif n.shape_kind is ShapeKind.STRIP:
                ax.add_patch(Polygon(_capsule_outline(n), closed=True, **style))
            else:
                ax.add_patch(Polygon(n.vertices, closed=True, **style))
    ax.autoscale_view()
    ax.set_aspect("equal")
    ax.invert_yaxis()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_hitmap_figure(grid: list[list[str]], region: Rect, path: str) -> None:
    """White for empty cells, black for blocked, a cycled palette for ids."""
    plt = _pyplot()
    from matplotlib import colormaps

    palette = colormaps["tab20"].colors
    rows = []
    for row in grid:
        shaded = []
        for cell in row:
            if cell == ".":
                shaded.append((1.0, 1.0, 1.0))
            elif cell == "B":
                shaded.append((0.0, 0.0, 0.0))
            else:
                shaded.append(palette[int(cell) % len(palette)][:3])
        rows.append(shaded)
    fig, ax = plt.subplots(figsize=(8, 7))
    ax.imshow(rows, origin="upper", interpolation="nearest",
              extent=(region.left, region.right, region.bottom, region.top))
    ax.set_aspect("equal")
    fig.savefig(path, dpi=120)
    plt.close(fig)
