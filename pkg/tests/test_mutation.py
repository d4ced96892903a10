import random

import pytest

from infgon import (
    Arc,
    ArcSet,
    Band,
    DividerSet,
    HalfLeft,
    HalfRight,
    LeftFan,
    ModelParams,
    RightFan,
    Window,
    contains,
    cross,
    frame,
    is_admissible,
    members_in_window,
    mutate_pair,
    mutation_via_triangle,
    predecessor,
    rotate_arc,
    rotate_arc_inverse,
    rotate_set,
    shift,
    successor,
)
from infgon.cellwalk import walk_predecessor, walk_successor
from infgon.errors import (
    DNotInCore,
    DNotInFrame,
    IncompatibleArc,
    PairCheckFailed,
)
from infgon.oracles import (
    random_divider_case,
    random_family_rotation_case,
    run_mutation_fuzz,
)

P1, P3 = ModelParams(1), ModelParams(3)
D1 = DividerSet.of(P3, [Arc(-4, 6)])


def test_divider_validation():
    with pytest.raises(IncompatibleArc):
        DividerSet.of(P3, [Arc(-4, 3), Arc(-1, 6)])  # crossing
    d = DividerSet.of(P3, [Arc(-4, 6), Arc(-4, 3)])  # shared endpoint is fine
    assert d.span() == 10
    assert d.endpoints() == [-4, 3, 6]


@pytest.mark.parametrize(
    "v,a,expected",
    [
        (-4, Arc(-4, 3), 6),  # wrap along the enclosing divider
        (6, Arc(-7, 6), -4),  # jump along the divider the arc sits outside of
        (9, Arc(-4, 9), 8),  # plain step
    ],
)
def test_predecessor_examples(v, a, expected):
    assert predecessor(v, a, D1) == expected


@pytest.mark.parametrize(
    "v,a,expected",
    [
        (6, Arc(2, 6), -4),
        (2, Arc(2, 6), 3),
        (9, Arc(9, 13), 10),  # bare line to the right
    ],
)
def test_successor_examples(v, a, expected):
    assert successor(v, a, D1) == expected


def test_step_preconditions():
    with pytest.raises(IncompatibleArc):
        predecessor(0, Arc(-4, 3), D1)  # not an endpoint
    with pytest.raises(IncompatibleArc):
        predecessor(-4, Arc(-4, 6), D1)  # divider arc itself
    with pytest.raises(IncompatibleArc):
        predecessor(-1, Arc(-1, 9), D1)  # crosses the divider


def test_nested_divider_ties():
    # all spans admissible for n=1
    inside = DividerSet.of(P1, [Arc(0, 4), Arc(0, 8)])
    assert predecessor(0, Arc(0, 2), inside) == 4  # innermost enclosing arc
    assert predecessor(0, Arc(0, 6), inside) == 8  # between the two
    outside = DividerSet.of(P1, [Arc(-4, 0), Arc(-8, 0)])
    assert predecessor(0, Arc(0, 2), outside) == -8  # outermost jump
    assert successor(-8, Arc(-8, -6), outside) == -7
    mixed = DividerSet.of(P1, [Arc(-4, 0), Arc(0, 4)])
    assert predecessor(0, Arc(0, 6), mixed) == -4
    assert predecessor(0, Arc(0, 2), mixed) == 4
    assert successor(4, Arc(2, 4), mixed) == 0


def test_rotate_arc_regression():
    assert rotate_arc(Arc(-4, 3), D1) == Arc(2, 6)
    assert rotate_arc(Arc(-4, 9), D1) == Arc(-5, 8)
    assert rotate_arc(Arc(-7, 6), D1) == Arc(-8, -4)


def test_rotate_arc_inverse_regression():
    assert rotate_arc_inverse(Arc(2, 6), D1) == Arc(-4, 3)
    assert rotate_arc_inverse(Arc(-5, 8), D1) == Arc(-4, 9)
    with pytest.raises(IncompatibleArc):
        rotate_arc_inverse(Arc(-4, 6), D1)


def test_rotation_fuzz_small():
    rep = run_mutation_fuzz(200, seed=7)
    assert rep.ok, rep


def test_cellwalk_matches_rules_spot():
    rng = random.Random(3)
    for _ in range(80):
        p, d, a = random_divider_case(rng, max_arcs=6, span=40)
        for v in a:
            assert predecessor(v, a, d) == walk_predecessor(v, a, d.arcs)
            assert successor(v, a, d) == walk_successor(v, a, d.arcs)


def test_rotate_set_regression():
    x = ArcSet.of(P3, [Arc(-4, 3), Arc(-4, 6)])
    out = rotate_set(x, D1)
    assert set(out.explicit) == {Arc(2, 6), Arc(-4, 6)}
    assert not out.families


def test_rotate_set_empty_divider_is_global_shift():
    d0 = DividerSet.of(P3, [])
    x = ArcSet.of(
        P3,
        [Arc(-4, 3)],
        [RightFan(-4, 0), LeftFan(5, 0), Band(-5, 6), HalfLeft(-4), HalfRight(6)],
    )
    out = rotate_set(x, d0)
    w = Window(-25, 25)
    expected = sorted(shift(m, 1) for m in members_in_window(x, Window(-24, 26)))
    got = members_in_window(out, w)
    assert [a for a in expected if w.lo <= a.t and a.u <= w.hi] == got


def test_rotate_set_requires_frame_membership():
    x = ArcSet.of(P3, [Arc(-4, 3)])
    with pytest.raises(DNotInFrame):
        rotate_set(x, D1)  # divider not a member
    y = ArcSet.of(P3, [Arc(-4, 6), Arc(-1, 9)])
    with pytest.raises(DNotInFrame):
        rotate_set(y, D1)  # divider crossed by a member


def test_rotate_set_families_match_pointwise():
    y = ArcSet.of(
        P3,
        [Arc(-3, 1), Arc(-2, 2), Arc(-1, 3)],
        [RightFan(-4, 0), Band(-5, 6), HalfLeft(-4), HalfRight(6)],
    )
    out = rotate_set(y, D1)  # internal window assertion also runs
    for w in (Window(-30, 30), Window(-45, 45)):
        src = Window(w.lo - 11, w.hi + 11)
        expected = {rotate_arc(m, D1) for m in members_in_window(y, src) if m not in D1.arcs}
        expected |= D1.arcs
        got = set(members_in_window(out, w))
        assert got == {a for a in expected if w.lo <= a.t and a.u <= w.hi}
    assert contains(out, Arc(-5, 8)) and contains(out, Arc(-8, -4))


def test_rotate_set_of_literal_encoding():
    # The strict set-builder encoding is rotatable mechanically, but it lacks
    # the members (-4,9) and (-7,6), so their pictured images cannot appear;
    # those arise only from the derived closure encoding (tested above).
    y_literal = ArcSet.of(
        P3, [Arc(-4, 3), Arc(-4, 6)], [HalfLeft(-4), HalfRight(6), Band(-5, 7)]
    )
    assert not contains(y_literal, Arc(-4, 9))
    assert not contains(y_literal, Arc(-7, 6))
    out = rotate_set(y_literal, D1)
    assert contains(out, Arc(2, 6))
    assert not contains(out, Arc(-5, 8))
    assert not contains(out, Arc(-8, -4))


def test_rotated_image_always_compatible():
    rng = random.Random(11)
    for _ in range(150):
        p, d, a = random_divider_case(rng, max_arcs=8, span=50)
        img = rotate_arc(a, d)
        assert is_admissible(img, p)
        assert all(not cross(img, b) for b in d.arcs)
        assert img != a
        assert cross(img, a)  # rotation strictly interleaves with its source


GOOD_X = ArcSet.of(P3, [Arc(-4, 3), Arc(-4, 6)])
GOOD_Y = ArcSet.of(
    P3,
    [Arc(-3, 1), Arc(-2, 2), Arc(-1, 3)],
    [RightFan(-4, 0), Band(-5, 6), HalfLeft(-4), HalfRight(6)],
)
W = Window(-20, 20)


def test_mutate_pair_passes_on_shrunk_window():
    x2, y2, rep = mutate_pair(GOOD_X, GOOD_Y, D1, W)
    assert rep.verdict
    assert set(x2.explicit) == {Arc(2, 6), Arc(-4, 6)}
    assert contains(y2, Arc(-5, 8)) and contains(y2, Arc(-8, -4))
    # frame of the mutated set is the rotated frame
    shrunk = W.shrink(D1.span() + 1)
    assert frame(x2, shrunk) == sorted(x2.explicit)


def test_mutate_pair_rejects_divider_outside_core():
    stray = DividerSet.of(P3, [Arc(-7, 6)])
    with pytest.raises(DNotInCore):
        mutate_pair(GOOD_X, GOOD_Y, stray, W)


def test_mutate_pair_force_path():
    broken_y = ArcSet.of(
        P3,
        [Arc(-2, 2), Arc(-1, 3)],  # dropped (-3,1)
        [RightFan(-4, 0), Band(-5, 6), HalfLeft(-4), HalfRight(6)],
    )
    with pytest.raises(PairCheckFailed):
        mutate_pair(GOOD_X, broken_y, D1, W)
    x2, y2, rep = mutate_pair(GOOD_X, broken_y, D1, W, force=True)
    assert not rep.verdict
    assert set(x2.explicit) == {Arc(2, 6), Arc(-4, 6)}


def test_mutate_pair_empty_divider():
    d0 = DividerSet.of(P3, [])
    x2, y2, rep = mutate_pair(GOOD_X, GOOD_Y, d0, W)
    assert rep.verdict
    assert set(x2.explicit) == {Arc(-5, 2), Arc(-5, 5)}


def test_mutation_via_triangle_examples():
    res = mutation_via_triangle(Arc(-4, 3), D1, P3)
    assert res.image == Arc(2, 6)
    assert res.via_triangle.middles() == (Arc(-4, 6),)
    res = mutation_via_triangle(Arc(-4, 9), D1, P3)
    assert res.image == Arc(-5, 8)
    assert res.via_triangle.middles() == ()  # both template corners degenerate
    with pytest.raises(IncompatibleArc):
        mutation_via_triangle(Arc(-1, 9), D1, P3)


def test_mutation_via_triangle_middles_stay_in_divider():
    rng = random.Random(5)
    for _ in range(100):
        p, d, a = random_divider_case(rng)
        res = mutation_via_triangle(a, d, p)
        assert all(m in d.arcs for m in res.via_triangle.middles())
        assert res.via_triangle.left == a
        assert res.via_triangle.right == res.image
