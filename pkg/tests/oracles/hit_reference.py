"""Reference hit scan written independently of the package internals.

Containment is recomputed here with different formulations (hypot, explicit
endpoint branches, winding numbers) and the scan rules are spelled out as a
plain double loop, so the engine has something honest to disagree with.
"""
from __future__ import annotations

import math

from .planar import winding_contains


def _circle_has(p, center, r):
    return math.hypot(p[0] - center[0], p[1] - center[1]) <= r


def _strip_has(p, a, b, r):
    abx, aby = b[0] - a[0], b[1] - a[1]
    apx, apy = p[0] - a[0], p[1] - a[1]
    denom = abx * abx + aby * aby
    if denom == 0:
        return math.hypot(apx, apy) <= r
    t = (apx * abx + apy * aby) / denom
    if t < 0:
        d = math.hypot(apx, apy)
    elif t > 1:
        d = math.hypot(p[0] - b[0], p[1] - b[1])
    else:
        d = math.hypot(apx - t * abx, apy - t * aby)
    return d <= r


def node_has(node, p):
    kind = node.shape_kind.value
    if kind == "circle":
        return _circle_has(p, node.center, node.radius)
    if kind == "strip":
        return _strip_has(p, node.segment.a, node.segment.b, node.radius)
    return winding_contains(node.vertices, p)


def reference_cover_hit(cover, p):
    """("hit"|"blocked", ordinal) or None, by the declared scan rules.

    The earliest node containing the point speaks for the object: if it is
    transparent the object is looked through here (None), if nonmoveable
    the spot is blocked, otherwise it is a catchable hit.
    """
    for node in cover.nodes:
        if not node_has(node, p):
            continue
        b = node.behaviour.value
        if b == "transparent":
            return None
        if b == "nonmoveable":
            return ("blocked", node.ordinal)
        return ("hit", node.ordinal)
    return None


def reference_scene_scan(covers, p):
    """Catch target over a whole queue of covers, head first.

    Returns ("hit", queue_index, ordinal), ("blocked", queue_index, ordinal)
    or None.  Transparent coverage falls through to deeper objects; a
    nonmoveable node occludes everything beneath it.
    """
    for qi, cover in enumerate(covers):
        res = reference_cover_hit(cover, p)
        if res is None:
            continue
        return (res[0], qi, res[1])
    return None
