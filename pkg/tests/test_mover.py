import random

import pytest

from movekit.cover import Cover, CursorHint, NodeBehaviour, ShapeKind, circle_node, polygon_node, strip_node
from movekit.geometry import Rect
from movekit.mover import ClippingMode, Mover, ReleaseKind, classify_release, cooperate
from movekit.scene import MouseButton, Scene, SceneObject
from oracles.hit_reference import reference_scene_scan

L = MouseButton.LEFT
R = MouseButton.RIGHT


class Box(SceneObject):
    """Single-polygon-node test object, optionally gated to a bounds rect."""

    type_tag = "box"

    def __init__(self, x, y, w, h, behaviour=NodeBehaviour.MOVEABLE, gate=None):
        super().__init__()
        self.rect = Rect(x, y, w, h)
        self.node_behaviour = behaviour
        self.gate = gate
        self.releases = 0

    def _cover(self):
        return Cover([polygon_node(0, self.rect.corners(),
                                   behaviour=self.node_behaviour,
                                   cursor=CursorHint.SIZE_ALL)])

    def move(self, dx, dy):
        self.rect = self.rect.moved(dx, dy)

    def move_node(self, ordinal, dx, dy, p, button):
        if button is not L:
            return False
        moved = self.rect.moved(dx, dy)
        if self.gate is not None and not self.gate.contains_rect(moved):
            return False
        self.rect = moved
        return True

    def bounds(self):
        return self.rect.copy()

    def on_release(self, mover, p):
        self.releases += 1


class Restructurer(SceneObject):
    """Grows a circle node under the press and asks the mover to re-catch."""

    type_tag = "restructurer"

    def __init__(self):
        super().__init__()
        self.grown = None

    def _cover(self):
        nodes = []
        if self.grown is not None:
            nodes.append(circle_node(0, self.grown, 5, cursor=CursorHint.HAND))
        k = len(nodes)
        nodes.append(strip_node(k, (0, 50), (100, 50), 3,
                                behaviour=NodeBehaviour.FROZEN,
                                cursor=CursorHint.HAND))
        return Cover(nodes)

    def move(self, dx, dy):
        pass

    def move_node(self, ordinal, dx, dy, p, button):
        if self.grown is not None and ordinal == 0:
            self.grown = (self.grown[0] + dx, self.grown[1] + dy)
            return True
        return False

    def bounds(self):
        return Rect(0, 47, 100, 6)

    def on_catch(self, mover, ordinal, p, button):
        strip_ordinal = 1 if self.grown is not None else 0
        if ordinal == strip_ordinal:
            self.grown = (p[0], 50.0)
            mover.request_recatch()


def test_catch_prefers_queue_head():
    a = Box(0, 0, 40, 40)
    b = Box(0, 0, 40, 40)
    m = Mover()
    m.add(a)
    m.add(b)
    assert m.catch((10, 10), L)
    assert m.caught_object is a


def test_empty_queue_catches_nothing():
    assert Mover().catch((5, 5), L) is False


def test_frozen_is_caught_but_never_moves():
    a = Box(0, 0, 40, 40, behaviour=NodeBehaviour.FROZEN)
    m = Mover()
    m.add(a)
    assert m.catch((10, 10), L)
    assert m.move((30, 30)) is True
    assert m.last_move_accepted is False
    assert (a.rect.x, a.rect.y) == (0, 0)


def test_blocked_object_occludes_deeper():
    wall = Box(0, 0, 40, 40, behaviour=NodeBehaviour.NONMOVEABLE)
    under = Box(0, 0, 40, 40)
    m = Mover()
    m.add(wall)
    m.add(under)
    assert m.catch((10, 10), L) is False
    info = m.sensed((10, 10))
    assert info.object_id == wall.id and info.catchable is False


def test_transparent_topmost_falls_through_to_deeper_object():
    ghost = Box(0, 0, 40, 40, behaviour=NodeBehaviour.TRANSPARENT)
    under = Box(0, 0, 40, 40)
    m = Mover()
    m.add(ghost)
    m.add(under)
    info = m.sensed((10, 10))
    assert info.object_id == under.id
    assert m.catch((10, 10), L)
    assert m.caught_object is under


def test_move_true_even_when_object_rejects():
    a = Box(0, 0, 20, 20, gate=Rect(0, 0, 30, 30))
    m = Mover()
    m.add(a)
    m.catch((10, 10), L)
    assert m.move((100, 10)) is True
    assert m.last_move_accepted is False
    assert a.rect.x == 0


def test_rigid_move_reversibility():
    rng = random.Random(31415)
    a = Box(100, 100, 50, 30)
    m = Mover()
    m.add(a)
    for _ in range(300):
        x0, y0 = a.rect.x, a.rect.y
        px, py = rng.randint(100, 149), rng.randint(100, 129)
        dx, dy = rng.randint(-40, 40), rng.randint(-40, 40)
        m.catch((px, py), L)
        m.move((px + dx, py + dy))
        m.move((px, py))
        m.release()
        assert (a.rect.x, a.rect.y) == (x0, y0)


def test_visual_clipping_confines_pointer():
    wa = Rect(0, 0, 200, 150)
    a = Box(10, 10, 50, 50)
    m = Mover(work_area=wa)
    assert m.clipping is ClippingMode.VISUAL
    m.add(a)
    m.catch((20, 20), L)
    m.move((500, 400))
    st = m.drag
    assert wa.contains(st.last_point)
    assert st.last_point == (200, 150)
    m.release()


def test_safe_clipping_open_past_right_bottom_only():
    wa = Rect(0, 0, 200, 150)
    a = Box(10, 10, 50, 50)
    m = Mover(work_area=wa, clipping=ClippingMode.SAFE)
    m.add(a)
    m.catch((20, 20), L)
    m.move((-50, -70))
    assert m.drag.last_point == (0, 0)
    m.move((900, 800))
    assert m.drag.last_point == (900, 800)
    m.release()


def test_release_reports_identity_and_clears_clip():
    a = Box(0, 0, 40, 40)
    m = Mover(work_area=Rect(0, 0, 100, 100))
    m.add(a)
    m.catch((10, 10), L)
    released, qi, node, shape = m.release()
    assert released and qi == 0 and node == 0 and shape is ShapeKind.POLYGON
    assert m._clip is None
    assert m.release()[0] is False
    assert m.was_caught_object is a


def test_release_with_nothing_caught_still_clears_clip():
    m = Mover(work_area=Rect(0, 0, 100, 100))
    m._clip = Rect(0, 0, 10, 10)
    assert m.release()[0] is False
    assert m._clip is None


def test_catch_while_dragging_releases_first():
    a = Box(0, 0, 40, 40)
    b = Box(100, 100, 40, 40)
    m = Mover()
    m.add(a)
    m.add(b)
    m.catch((10, 10), L)
    assert m.catch((110, 110), L)
    assert a.releases == 1
    assert m.caught_object is b


def test_was_caught_cleared_on_next_catch():
    a = Box(0, 0, 40, 40)
    m = Mover()
    m.add(a)
    m.catch((10, 10), L)
    m.release()
    assert m.was_caught is not None
    m.catch((500, 500), L)
    assert m.was_caught is None


def test_classify_release_thresholds():
    assert classify_release((0, 0), (3, 0)) is ReleaseKind.CLICK
    assert classify_release((0, 0), (2, 2)) is ReleaseKind.CLICK
    assert classify_release((0, 0), (4, 0)) is ReleaseKind.DRAG


def test_queue_errors():
    a = Box(0, 0, 10, 10)
    m = Mover()
    m.add(a)
    with pytest.raises(ValueError):
        m.add(a)
    with pytest.raises(IndexError):
        m.insert(5, Box(0, 0, 10, 10))
    with pytest.raises(IndexError):
        m.remove(3)
    m.clear()
    assert len(m) == 0


def test_insert_order():
    a, b = Box(0, 0, 10, 10), Box(0, 0, 10, 10)
    m = Mover()
    m.insert(0, a)
    m.insert(0, b)
    assert [reg.obj for reg in m.queue] == [b, a]


def test_restructure_recatch_transfers_drag():
    r = Restructurer()
    m = Mover()
    m.add(r)
    assert m.catch((40, 50), L)
    st = m.drag
    assert st.node_ordinal == 0 and st.shape_kind is ShapeKind.CIRCLE
    assert r.grown == (40.0, 50.0)
    m.move((60, 55))
    assert r.grown == (60.0, 55.0)
    m.release()


def test_cursor_hint_tracks_topmost_sensed():
    a = Box(0, 0, 40, 40)
    m = Mover()
    m.add(a)
    assert m.cursor_hint((10, 10)) is CursorHint.SIZE_ALL
    assert m.cursor_hint((500, 500)) is CursorHint.DEFAULT


def test_cooperate_catch_first_wins():
    a, b = Box(0, 0, 40, 40), Box(0, 0, 40, 40)
    m1, m2 = Mover(), Mover()
    m1.add(a)
    m2.add(b)
    winner = cooperate([m1, m2], "catch", (10, 10), L)
    assert winner is m1 and m1.drag is not None and m2.drag is None
    cooperate([m1, m2], "release", (10, 10))
    assert m1.drag is None


def test_cooperate_move_prefers_sensing_mover():
    a = Box(0, 0, 40, 40, behaviour=NodeBehaviour.FROZEN)
    b = Box(0, 0, 40, 40)
    m1, m2 = Mover(), Mover()
    m1.add(a)
    m2.add(b)
    handler = cooperate([m1, m2], "move", (10, 10))
    assert handler is m1


def test_frozen_toggle_never_changes_catch_target():
    rng = random.Random(8181)
    for _ in range(200):
        boxes = [Box(rng.randint(0, 60), rng.randint(0, 60),
                     rng.randint(10, 50), rng.randint(10, 50))
                 for _ in range(4)]
        m = Mover()
        for box in boxes:
            m.add(box)
        p = (rng.uniform(0, 110), rng.uniform(0, 110))
        before = m.sensed(p)
        flip = rng.choice(boxes)
        flip.node_behaviour = NodeBehaviour.FROZEN
        m.refresh_covers()
        after = m.sensed(p)
        if before is None:
            assert after is None
        else:
            assert after is not None and after.object_id == before.object_id


def test_sensed_matches_reference_scan_on_grid():
    rng = random.Random(8282)
    scene = Scene()
    m = Mover()
    for i in range(6):
        behaviour = [NodeBehaviour.MOVEABLE, NodeBehaviour.TRANSPARENT,
                     NodeBehaviour.FROZEN, NodeBehaviour.NONMOVEABLE][i % 4]
        box = Box(rng.randint(0, 50), rng.randint(0, 50),
                  rng.randint(10, 40), rng.randint(10, 40), behaviour=behaviour)
        scene.add(box)
        m.add(box)
    covers = [reg.cover for reg in m.queue]
    for x in range(0, 100, 2):
        for y in range(0, 100, 2):
            got = m.sensed((float(x), float(y)))
            want = reference_scene_scan(covers, (float(x), float(y)))
            if want is None:
                assert got is None
            else:
                kind, qi, ordinal = want
                assert got.queue_index == qi and got.node_ordinal == ordinal
                assert got.catchable == (kind == "hit")
