import random

import pytest

from movekit.groups import (ElasticFrame, SelectionBand, band_commit,
                            group_move, group_queue_position,
                            group_recompute_on_release)
from movekit.mover import Mover
from movekit.shapes import ResizableRect


def rect_at(x, y, w=30, h=20):
    return ResizableRect(x, y, w, h)


def test_frame_hugs_the_members_with_the_margin():
    a = rect_at(100, 100)
    b = rect_at(200, 300, 40, 10)
    g = ElasticFrame([a, b])
    f = g.frame
    assert f.left == 90 and f.top == 90
    assert f.right == 250 and f.bottom == 320
    b.move(0, 50)  # the frame re-derives itself, nothing to call
    assert g.frame.bottom == 370


def test_band_needs_at_least_two_full_captures():
    objs = [rect_at(0, 0), rect_at(100, 0), rect_at(200, 0),
            rect_at(400, 400), rect_at(500, 400)]
    band = SelectionBand((-10, -10))
    band.current = (260, 40)
    g = band_commit(band, objs)
    assert g is not None and len(g.members) == 3

    band.current = (35, 25)  # clips the first object's corner only
    assert band_commit(band, objs) is None

    band.current = (-5, -5)
    assert band_commit(band, objs) is None


def test_partial_overlap_never_joins():
    objs = [rect_at(0, 0), rect_at(100, 0)]
    band = SelectionBand((-10, -10))
    band.current = (115, 30)  # second object sticks out
    assert band_commit(band, objs) is None


def test_group_moves_rigidly_and_restores_exactly():
    a = rect_at(100, 100)
    b = rect_at(200, 300)
    g = ElasticFrame([a, b])
    group_move(g, 10, -5)
    assert (a.rect.x, a.rect.y) == (110, 95)
    assert (b.rect.x, b.rect.y) == (210, 295)
    assert b.rect.x - a.rect.x == 100
    group_move(g, -10, 5)
    assert (a.rect.x, a.rect.y) == (100, 100)
    assert (b.rect.x, b.rect.y) == (200, 300)


def test_loose_object_joins_when_the_frame_lands_on_it():
    a = rect_at(100, 100)
    b = rect_at(160, 100)
    loose = rect_at(400, 102, 10, 10)
    g = ElasticFrame([a, b], recompute_on_release=True)
    m = Mover()
    m.add(a)
    m.add(b)
    m.add(loose)
    m.add(g)
    assert m.catch((150, 95))  # a frame spot off every member
    assert m.caught_object is g
    m.move((400, 95))
    m.release()
    assert loose in g.members and len(g.members) == 3


def test_group_dissolves_below_two_members():
    a = rect_at(100, 100)
    b = rect_at(900, 900)
    g = ElasticFrame([a], recompute_on_release=True)
    m = Mover()
    m.add(a)
    m.add(b)
    m.add(g)
    assert m.catch((95, 95))
    m.release()
    assert all(reg.obj is not g for reg in m.queue)


def test_members_always_precede_the_group():
    queue = [rect_at(i * 50, 0) for i in range(8)]
    g = ElasticFrame([queue[2], queue[5]])
    assert group_queue_position(g, queue) == 6
    g2 = ElasticFrame([queue[6], queue[7]])
    assert group_queue_position(g2, queue) == 8
    g3 = ElasticFrame([rect_at(0, 0), rect_at(1, 1)])
    with pytest.raises(ValueError):
        group_queue_position(g3, queue)


def test_runaway_member_keeps_the_frame_around_it():
    a = rect_at(100, 100)
    b = rect_at(200, 100)
    g = ElasticFrame([a, b])
    a.move(-500, 700)
    f = g.frame
    assert f.contains_rect(a.bounds()) and f.contains_rect(b.bounds())
    assert f.left == a.rect.x - 10 and f.bottom == a.rect.bottom + 10


def test_recompute_matches_brute_force_containment():
    rng = random.Random(99)
    for _ in range(300):
        objs = [rect_at(rng.uniform(0, 400), rng.uniform(0, 400),
                        rng.uniform(5, 60), rng.uniform(5, 60))
                for _ in range(8)]
        seed = [objs[0], objs[1]]
        g = ElasticFrame(seed)
        frame = g.frame
        got = group_recompute_on_release(g, objs)
        expected = [o for o in objs if frame.contains_rect(o.bounds())]
        assert got == expected
