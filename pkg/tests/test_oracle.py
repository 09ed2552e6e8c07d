import pytest

from ybegarside.errors import BallGuardExceeded
from ybegarside.group import GroupElement, build_germ
from ybegarside.oracle import (
    ball,
    ball_layers,
    check_counts,
    check_pi_injectivity,
    check_span_stabilization,
)
from ybegarside.rep import dimension_report


def test_ball_radius_zero(ex15):
    assert ball(ex15, 0) == {GroupElement((0, 0, 0, 0))}


def test_ball_radius_one(ex15):
    assert len(ball(ex15, 1)) == 9


def test_positive_ball_p3(p3):
    B = ball(p3, 2, inverses=False)
    expected = {(a, b, c) for a in range(3) for b in range(3) for c in range(3) if a + b + c <= 2}
    assert {g.vec for g in B} == expected


def test_ball_agrees_with_germ(ex15_germ):
    G = ex15_germ
    for layer in ball_layers(G.solution, 4):
        for vec, p in layer.items():
            assert G.phi(GroupElement(vec)) == p


def test_ball_closed_under_inverse_and_growing(p3_germ):
    sizes = []
    for r in range(4):
        B = ball(p3_germ, r)
        sizes.append(len(B))
        assert all(p3_germ.inverse(g) in B for g in B)
    assert sizes == sorted(sizes)


def test_ball_guard(ex15):
    with pytest.raises(BallGuardExceeded):
        ball(ex15, 5, max_size=100)


def test_injectivity(ex15, p3, trivial):
    assert check_pi_injectivity(ex15, 4).passed
    assert check_pi_injectivity(p3, 6).passed
    assert check_pi_injectivity(trivial, 3).passed


def test_injectivity_detects_bad_table():
    from ybegarside.solution import SolutionTable

    # not a solution: sigma depends on the letter although r is the flip
    bad = SolutionTable(((1, 0), (0, 1)), ((0, 1), (0, 1)))
    assert not check_pi_injectivity(bad, 3).passed


def test_counts(ex15, p3, trivial):
    c = check_counts(ex15)
    assert c.passed and c.counts == {"simples": 16, "iyb_order": 8, "T": 2, "T_K": 8, "div_delta": 16}
    c = check_counts(p3)
    assert c.passed and c.counts == {"simples": 27, "iyb_order": 3, "T": 9, "T_K": 3, "div_delta": 8}
    c = check_counts(trivial)
    assert c.passed and c.counts["simples"] == 1 and c.counts["iyb_order"] == 1


@pytest.mark.parametrize("fixture,radius,dim", [("ex15", 6, 10), ("p3", 6, 6)])
def test_stabilization(fixture, radius, dim, request):
    S = request.getfixturevalue(fixture)
    rep = check_span_stabilization(S, radius)
    assert rep.agrees and rep.ranks[-1] == dim
    assert list(rep.ranks) == sorted(rep.ranks)
    assert max(rep.ranks) <= rep.bound


def test_stabilization_trivial(trivial):
    rep = check_span_stabilization(trivial, 3)
    assert rep.agrees and rep.ranks[-1] == trivial.n + 1


from hypothesis import given, settings
from hypothesis import strategies as st

from ybegarside.solution import SolutionTable


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.permutations(list(range(n)))))
def test_theorem_dimension_matches_ball_rank(f):
    S = SolutionTable.from_tables([tuple(f)] * len(f))
    G = build_germ(S)
    rep = check_span_stabilization(S, 2 * G.m + 2, germ=G)
    assert rep.ranks[-1] == dimension_report(S, germ=G).dimension <= rep.bound
    assert check_counts(S, germ=G).passed
