import random

import pytest

from movekit.cover import (
    BlockedHit, Cover, CursorHint, HitInfo, NodeBehaviour, ShapeKind,
    circle_node, cover_hit, node_contains, polygon_node, set_clearance,
    set_node_behaviour_cursor, strip_node,
)
from oracles.hit_reference import reference_cover_hit

SQUARE = [(-10.0, -10.0), (10.0, -10.0), (10.0, 10.0), (-10.0, 10.0)]


def test_node_contains_dispatch():
    assert node_contains(circle_node(0, (0, 0), 5), (3, 4))
    assert node_contains(strip_node(0, (0, 0), (10, 0), 3), (12, 0))
    assert not node_contains(polygon_node(0, [(0, 0), (10, 0), (10, 10), (0, 10)]), (11, 5))


def test_clearance_defaults_by_shape():
    assert circle_node(0, (0, 0), 5).clearance is True
    assert strip_node(0, (0, 0), (1, 0), 3).clearance is True
    assert polygon_node(0, SQUARE).clearance is False


def test_zero_area_nodes_rejected():
    with pytest.raises(ValueError):
        circle_node(0, (0, 0), 0.5)
    with pytest.raises(ValueError):
        strip_node(0, (0, 0), (5, 0), 0)
    with pytest.raises(ValueError):
        polygon_node(0, [(0, 0), (1, 1)])


def test_cover_ordinals_must_be_dense():
    with pytest.raises(ValueError):
        Cover([circle_node(1, (0, 0), 5)])
    with pytest.raises(ValueError):
        Cover([])


def test_transparent_node_cuts_a_hole_through_the_cover():
    c = Cover([
        circle_node(0, (0, 0), 5, behaviour=NodeBehaviour.TRANSPARENT),
        polygon_node(1, SQUARE, behaviour=NodeBehaviour.MOVEABLE),
    ])
    assert cover_hit(c, (0, 0)) is None
    hit = cover_hit(c, (8, 8))  # off the hole the body still answers
    assert isinstance(hit, HitInfo) and hit.node_ordinal == 1


def test_frozen_node_is_sensed_but_marked():
    c = Cover([strip_node(0, (0, 0), (10, 0), 3, behaviour=NodeBehaviour.FROZEN)])
    hit = cover_hit(c, (5, 1))
    assert isinstance(hit, HitInfo)
    assert hit.behaviour is NodeBehaviour.FROZEN
    assert hit.shape_kind is ShapeKind.STRIP


def test_miss_outside_everything():
    c = Cover([circle_node(0, (0, 0), 5)])
    assert cover_hit(c, (20, 20)) is None


def test_nonmoveable_blocks():
    c = Cover([
        polygon_node(0, SQUARE, behaviour=NodeBehaviour.NONMOVEABLE),
        circle_node(1, (0, 0), 8),
    ])
    hit = cover_hit(c, (0, 0))
    assert isinstance(hit, BlockedHit) and hit.node_ordinal == 0


def test_transparent_only_coverage_misses():
    c = Cover([circle_node(0, (0, 0), 5, behaviour=NodeBehaviour.TRANSPARENT)])
    assert cover_hit(c, (1, 1)) is None


def test_set_clearance_all_and_filtered():
    c = Cover([
        circle_node(0, (0, 0), 5),
        strip_node(1, (0, 0), (9, 0), 3),
        polygon_node(2, SQUARE),
    ])
    set_clearance(c, False)
    assert [n.clearance for n in c.nodes] == [False, False, False]
    set_clearance(c, True, ShapeKind.CIRCLE)
    assert [n.clearance for n in c.nodes] == [True, False, False]


def test_set_node_behaviour_cursor():
    c = Cover([polygon_node(0, SQUARE)])
    set_node_behaviour_cursor(c, 0, NodeBehaviour.FROZEN, CursorHint.DEFAULT)
    assert c.nodes[0].behaviour is NodeBehaviour.FROZEN
    assert c.nodes[0].cursor is CursorHint.DEFAULT
    with pytest.raises(IndexError):
        set_node_behaviour_cursor(c, 5, NodeBehaviour.FROZEN, CursorHint.DEFAULT)


def _random_cover(rng: random.Random) -> Cover:
    nodes = []
    count = rng.randint(1, 6)
    for i in range(count):
        kind = rng.randrange(3)
        behaviour = rng.choice(list(NodeBehaviour))
        if kind == 0:
            nodes.append(circle_node(i, (rng.uniform(-30, 30), rng.uniform(-30, 30)),
                                     rng.uniform(1, 15), behaviour=behaviour))
        elif kind == 1:
            nodes.append(strip_node(i, (rng.uniform(-30, 30), rng.uniform(-30, 30)),
                                    (rng.uniform(-30, 30), rng.uniform(-30, 30)),
                                    rng.uniform(1, 8), behaviour=behaviour))
        else:
            x, y = rng.uniform(-30, 20), rng.uniform(-30, 20)
            w, h = rng.uniform(2, 25), rng.uniform(2, 25)
            nodes.append(polygon_node(i, [(x, y), (x + w, y), (x + w, y + h), (x, y + h)],
                                      behaviour=behaviour))
    return Cover(nodes)


def test_cover_hit_matches_reference_scan():
    rng = random.Random(90021)
    for _ in range(100000):
        c = _random_cover(rng)
        p = (rng.uniform(-40, 40), rng.uniform(-40, 40))
        got = cover_hit(c, p)
        want = reference_cover_hit(c, p)
        if want is None:
            assert got is None
        elif want[0] == "blocked":
            assert isinstance(got, BlockedHit) and got.node_ordinal == want[1]
        else:
            assert isinstance(got, HitInfo) and got.node_ordinal == want[1]
        if isinstance(got, HitInfo):
            assert got.behaviour is not NodeBehaviour.TRANSPARENT
