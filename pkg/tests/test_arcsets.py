import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from infgon import (
    Arc,
    ArcSet,
    Band,
    HalfLeft,
    HalfRight,
    LeftFan,
    ModelParams,
    RightFan,
    Window,
    admissible_arcs_in,
    contains,
    cross,
    crosses_set,
    double_nc_extras,
    finiteness_check,
    fountain_loci,
    frame,
    in_nc_nc,
    is_admissible,
    is_ptolemy_window,
    members_in_window,
    nc_window,
)
from infgon.errors import NonAdmissible, UnsupportedFamilies

from conftest import admissible_arcs

P3 = ModelParams(3)

# the worked example: two arcs sharing a left endpoint
X = ArcSet.of(P3, [Arc(-4, 3), Arc(-4, 6)])
# its set-builder companion, encoded literally (strict band bounds)
Y_LITERAL = ArcSet.of(
    P3, [Arc(-4, 3), Arc(-4, 6)], [HalfLeft(-4), HalfRight(6), Band(-5, 7)]
)


def test_window_validation():
    with pytest.raises(ValueError):
        Window(3, 3)
    assert Window(-2, 5).shrink(2) == Window(0, 3)


def test_arcset_validates_explicit():
    with pytest.raises(NonAdmissible):
        ArcSet.of(P3, [Arc(3, 6)])


def test_admissible_arcs_in_window():
    arcs = list(admissible_arcs_in(Window(-3, 5), P3))
    assert arcs == sorted(arcs)
    assert Arc(-3, 1) in arcs and Arc(0, 4) in arcs
    assert all(is_admissible(a, P3) and -3 <= a.t and a.u <= 5 for a in arcs)
    # n=1: every span >= 2 occurs
    assert len(list(admissible_arcs_in(Window(0, 4), ModelParams(1)))) == 6


def test_contains_examples():
    assert contains(Y_LITERAL, Arc(-8, -4))
    assert not contains(Y_LITERAL, Arc(-1, 3))
    assert not contains(ArcSet.of(P3), Arc(-1, 3))


def test_crosses_set_examples():
    s = ArcSet.of(P3, [Arc(-4, 3), Arc(-4, 6)])
    assert not crosses_set(Arc(-1, 3), s)
    assert crosses_set(Arc(-6, -2), s)
    fan = ArcSet.of(P3, families=[LeftFan(2, -5)])
    assert crosses_set(Arc(0, 4), fan)


def test_crosses_set_agrees_with_member_loop():
    w = Window(-9, 9)
    for a in admissible_arcs_in(w, P3):
        direct = any(cross(a, m) for m in X.explicit)
        assert crosses_set(a, X) == direct


def test_nc_window_examples():
    out = nc_window(X, Window(-8, 10))
    assert Arc(-4, 9) in out
    assert Arc(-1, 3) in out
    assert Arc(-6, -2) not in out


def test_members_in_window_merges_families_and_explicit():
    got = members_in_window(Y_LITERAL, Window(-9, 9))
    assert Arc(-4, 3) in got and Arc(-8, -4) in got
    assert got == sorted(set(got))


def test_fountain_loci_examples():
    left, right = fountain_loci(ArcSet.of(P3, families=[RightFan(0, 5)]))
    assert left.is_empty() and right.points == frozenset({0})

    left, right = fountain_loci(Y_LITERAL)
    assert -4 in left and 7 in left  # half-left ray, band heads
    assert 6 in right and -5 in right  # half-right ray, band feet
    assert fountain_loci(X) == (left.empty(), right.empty())


def test_finiteness_examples():
    assert finiteness_check(X) == finiteness_check(ArcSet.of(P3))  # vacuous
    assert finiteness_check(X).contravariant_ok and finiteness_check(X).covariant_ok
    rep = finiteness_check(ArcSet.of(P3, families=[RightFan(0, 5)]))
    assert (rep.contravariant_ok, rep.covariant_ok) == (False, True)
    assert rep.contravariant_witness == 0
    rep = finiteness_check(Y_LITERAL)
    assert rep.covariant_ok is False
    assert rep.covariant_witness == -4


def test_frame_examples():
    assert frame(X, Window(-10, 10)) == [Arc(-4, 3), Arc(-4, 6)]
    crossing = ArcSet.of(P3, [Arc(-4, 0), Arc(-1, 3)])
    assert frame(crossing, Window(-10, 10)) == []
    assert frame(ArcSet.of(P3), Window(-10, 10)) == []


def test_frame_uses_full_symbolic_set():
    # member visible in the window, crossed only by family members outside it:
    # the fan arcs (0,7), (-3,7), ... all stick out past hi=5
    s = ArcSet.of(P3, [Arc(-1, 3)], [LeftFan(7, 0)])
    assert members_in_window(s, Window(-3, 5)) == [Arc(-1, 3)]
    assert frame(s, Window(-3, 5)) == []


def test_ptolemy_examples():
    good = ArcSet.of(P3, [Arc(-4, 0), Arc(-4, 3), Arc(-1, 3)])
    assert is_ptolemy_window(good, Window(-20, 20)).ok
    bad = ArcSet.of(P3, [Arc(-4, 0), Arc(-1, 3)])
    rep = is_ptolemy_window(bad, Window(-20, 20))
    assert not rep.ok
    assert rep.pair == (Arc(-4, 0), Arc(-1, 3))
    assert rep.missing == Arc(-4, 3)
    assert is_ptolemy_window(X, Window(-20, 20)).ok  # no crossing pairs


def test_in_nc_nc_examples():
    assert in_nc_nc(Arc(-4, 3), ArcSet.of(P3, [Arc(-4, 3)]))
    assert not in_nc_nc(Arc(0, 4), ArcSet.of(P3))
    with pytest.raises(UnsupportedFamilies):
        in_nc_nc(Arc(-4, 3), Y_LITERAL)


def test_double_closure_of_ptolemy_example():
    x0 = ArcSet.of(P3, [Arc(-4, 0), Arc(-4, 3), Arc(-1, 3)])
    assert double_nc_extras(x0, Window(-20, 20)) == [Arc(-3, 1), Arc(-2, 2)]


@given(
    st.lists(admissible_arcs(3, -10, 10, 4), min_size=1, max_size=5),
    admissible_arcs(3, -12, 12, 4),
)
@settings(max_examples=60, deadline=None)
def test_in_nc_nc_extensive_and_matches_sweep(arcs, probe):
    s = ArcSet.of(P3, arcs)
    for a in arcs:
        assert in_nc_nc(a, s)
    pts = [e for a in arcs for e in a] + [probe.t, probe.u]
    w = Window(min(pts) - 6, max(pts) + 6)
    extras = double_nc_extras(s, w)
    assert in_nc_nc(probe, s) == (probe in extras or probe in s.explicit)


@given(st.lists(admissible_arcs(3, -10, 10, 4), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_nc_window_antitone(arcs):
    small = ArcSet.of(P3, arcs[:1])
    big = ArcSet.of(P3, arcs)
    w = Window(-16, 16)
    assert set(nc_window(big, w)) <= set(nc_window(small, w))


@given(st.lists(admissible_arcs(3, -10, 10, 4), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_frame_is_pairwise_non_crossing(arcs):
    fr = frame(ArcSet.of(P3, arcs), Window(-16, 16))
    for i, a in enumerate(fr):
        for b in fr[i + 1 :]:
            assert not cross(a, b)
