import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybegarside import perm as P
from ybegarside.errors import (
    GammaInconsistent,
    IndexOutOfRange,
    NotBijective,
    NotBraided,
    NotInvolutive,
    ParseError,
)
from ybegarside.solution import (
    IRRETRACTABLE,
    SolutionTable,
    apply_r,
    class_of,
    diagonal_inverse_from_gamma,
    diagonal_map,
    frozen_words,
    is_square_free,
    load_solution,
    multipermutation_level,
    profile,
    retraction,
    retraction_levels,
    satisfies_condition_C,
)

from conftest import load, w

EX15_GAMMA_CYCLES = [[[2, 3]], [[2, 1, 3, 4]], [[4, 1]], [[4, 3, 1, 2]]]


def one_based(S):
    return [P.one_based(s) for s in S.sigma], [P.one_based(g) for g in S.gamma]


class TestLoad:
    def test_example15_sigma_from_cycles(self, ex15):
        sigma, _ = one_based(ex15)
        assert sigma == [[1, 2, 4, 3], [4, 3, 1, 2], [2, 1, 3, 4], [3, 4, 2, 1]]

    def test_example15_derived_gamma_matches_literature(self):
        raw = {"sigma": [[1, 2, 4, 3], [4, 3, 1, 2], [2, 1, 3, 4], [3, 4, 2, 1]]}
        S = load_solution(raw)
        expected = [P.from_cycles(c, 4, base=1) for c in EX15_GAMMA_CYCLES]
        assert list(S.gamma) == expected

    def test_trivial(self):
        S = load_solution('{"n": 3, "sigma": [[1,2,3],[1,2,3],[1,2,3]]}')
        assert all(g == (0, 1, 2) for g in S.gamma)

    def test_degenerate_row(self):
        with pytest.raises(NotBijective):
            load_solution({"n": 2, "sigma": [[1, 1], [1, 2]]})

    def test_gamma_cross_checked(self):
        with pytest.raises(GammaInconsistent):
            load_solution({"sigma": [[1, 2], [1, 2]], "gamma": [[2, 1], [2, 1]]})

    def test_not_braided(self):
        # a derived gamma always makes r involutive, so only the braid relation can fail
        with pytest.raises(NotBraided):
            load_solution({"sigma": [[2, 1, 3], [1, 2, 3], [1, 2, 3]]})

    def test_involutivity_checked_directly(self):
        S = SolutionTable(((1, 0), (1, 0)), ((0, 1), (0, 1)))
        with pytest.raises(NotInvolutive):
            S._check_involutive()

    @pytest.mark.parametrize(
        "raw",
        [
            "not json",
            "[1, 2]",
            '{"n": 2}',
            '{"sigma": [[1,2],[1,2]], "sigma_cycles": [[],[]]}',
            '{"n": 3, "sigma": [[1,2],[1,2]]}',
            '{"sigma": []}',
            '{"sigma": [["a", 2], [1, 2]]}',
        ],
    )
    def test_parse_errors(self, raw):
        with pytest.raises(ParseError):
            load_solution(raw)

    def test_cycles_and_one_line_agree(self, ex15):
        raw = {"n": 4, "sigma": [P.one_based(s) for s in ex15.sigma]}
        assert load_solution(json.dumps(raw)) == ex15

    def test_to_dict_roundtrip(self, ex15, p3):
        for S in (ex15, p3):
            assert load_solution(json.dumps(S.to_dict())) == S


class TestR:
    def test_example15_relations(self, ex15):
        assert apply_r(ex15, *w(1, 2)) == w(2, 3)
        assert apply_r(ex15, *w(1, 3)) == w(4, 4)

    def test_trivial_is_flip(self, trivial):
        for x in range(trivial.n):
            for y in range(trivial.n):
                assert apply_r(trivial, x, y) == (y, x)

    def test_out_of_range(self, ex15):
        with pytest.raises(IndexOutOfRange):
            apply_r(ex15, 4, 0)

    def test_example15_full_relation_list(self, ex15):
        relations = {(1, 2): (2, 3), (1, 3): (4, 4), (2, 1): (4, 3), (2, 2): (3, 1), (1, 4): (3, 2), (3, 4): (4, 1)}
        for (x, y), (a, b) in relations.items():
            assert apply_r(ex15, *w(x, y)) == w(a, b)


class TestDiagonalAndClass:
    def test_D(self, ex15, p3, trivial):
        assert P.one_based(diagonal_map(ex15)) == [1, 4, 3, 2]
        assert P.one_based(diagonal_map(p3)) == [2, 3, 1]
        assert diagonal_map(trivial) == P.identity(trivial.n)

    def test_D_inverse_from_gamma(self, ex15, p3):
        for S in (ex15, p3):
            assert diagonal_inverse_from_gamma(S) == P.inverse(diagonal_map(S))

    def test_class(self, ex15, p3, trivial):
        assert class_of(ex15) == 2
        assert class_of(p3) == 3
        assert class_of(trivial) == 1

    def test_condition_C(self, ex15, p3, trivial):
        assert satisfies_condition_C(ex15)
        assert not satisfies_condition_C(p3)
        assert satisfies_condition_C(trivial)

    def test_frozen_words(self, ex15, p3, trivial):
        assert frozen_words(ex15) == [w(1, 1), w(2, 4), w(3, 3), w(4, 2)]
        assert frozen_words(p3) == [w(1, 2, 3), w(2, 3, 1), w(3, 1, 2)]
        assert frozen_words(trivial) == [(k,) for k in range(trivial.n)]

    def test_fixed_pairs(self, ex15, p3):
        for S in (ex15, p3):
            D = diagonal_map(S)
            for x in range(S.n):
                assert S.r(x, D[x]) == (x, D[x])

    def test_square_free(self, ex15, trivial):
        assert not is_square_free(ex15)
        assert is_square_free(trivial)


class TestRetraction:
    def test_p3_collapses(self, p3):
        R, cls = retraction(p3)
        assert R.n == 1 and cls == (0, 0, 0)
        assert multipermutation_level(p3) == 1

    def test_example15_irretractable(self, ex15):
        R, cls = retraction(ex15)
        assert R.n == 4 and cls == (0, 1, 2, 3)
        assert retraction_levels(ex15) == [4]
        assert multipermutation_level(ex15) == IRRETRACTABLE

    def test_trivial(self, trivial):
        assert retraction(trivial)[0].n == 1
        assert multipermutation_level(trivial) == (0 if trivial.n == 1 else 1)

    def test_level_two(self):
        # sigma_1 = sigma_2 = id, sigma_3 = (1 2): retracts to the 2-point flip, then to a point
        S = load_solution({"sigma_cycles": [[], [], [[1, 2]]]})
        assert retraction_levels(S) == [3, 2, 1]
        assert multipermutation_level(S) == 2


def test_profile_dict(ex15):
    d = profile(ex15).to_dict()
    assert d["class"] == 2 and d["D"] == [1, 4, 3, 2]
    assert d["frozen_words"] == [[1, 1], [2, 4], [3, 3], [4, 2]]
    assert d["multipermutation_level"] == "irretractable"
    assert json.loads(json.dumps(d)) == d


# --- property tests ---------------------------------------------------------


def relabel(S, f):
    """Isomorphic copy of S transported along the bijection f."""
    finv = P.inverse(f)
    sigma = [None] * S.n
    for x in range(S.n):
        sigma[f[x]] = P.compose(f, P.compose(S.sigma[x], finv))
    return SolutionTable.from_tables(sigma)


@st.composite
def permutation_solutions(draw):
    n = draw(st.integers(1, 6))
    f = tuple(draw(st.permutations(list(range(n)))))
    return SolutionTable.from_tables([f] * n), f


def perm_order(f):
    return math.lcm(*(len(c) for c in P.to_cycles(f))) if P.to_cycles(f) else 1


@given(permutation_solutions())
def test_permutation_solution_class_is_order(data):
    S, f = data
    assert class_of(S) == perm_order(f)
    assert satisfies_condition_C(S) == (perm_order(f) <= 2)


@settings(max_examples=30)
@given(st.permutations(list(range(4))))
def test_relabelling_preserves_invariants(f):
    S = load("example15")
    T = relabel(S, tuple(f))
    assert class_of(T) == 2
    assert satisfies_condition_C(T)
    assert multipermutation_level(T) == IRRETRACTABLE
    D, DT = diagonal_map(S), diagonal_map(T)
    assert all(DT[f[x]] == f[D[x]] for x in range(4))


@given(permutation_solutions())
def test_retraction_is_valid(data):
    S, _ = data
    R, cls = retraction(S)
    assert SolutionTable.from_tables(R.sigma, R.gamma) == R
    assert sorted(set(cls)) == list(range(R.n))


@given(permutation_solutions())
def test_frozen_products_are_identity(data):
    S, _ = data
    m = class_of(S)
    for word in frozen_words(S, m):
        assert len(word) == m
        prod = P.identity(S.n)
        for x in word:
            prod = P.compose(prod, S.sigma[x])
        assert prod == P.identity(S.n)
