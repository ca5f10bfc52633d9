import itertools

import pytest
from hypothesis import given, settings

from oracles import KNOTINFO, fraction_det, has_nontrivial_coloring, pd_to_gauss
from strategies import diagrams
from vlink import (
    LaurentPoly, PreconditionError, alexander_polynomial, coloring_divisor, coloring_matrix,
    connected_sum, determinant, elementary_ideal_gcd, eval_at_minus_one, fox_jacobian,
    is_alternating_poly, is_checkerboard_colorable, long_arcs, mod_p_labeling,
    parse_gauss_code, wirtinger,
)
from vlink.alexander import mod_p_labeling_bruteforce
from vlink.numbering import is_almost_classical_diagram

P = parse_gauss_code
TREFOIL = P("O1+U2+O3+U1+O2+U3+")
HOPF = P("O1+;U1+")
L = LaurentPoly


class TestLongArcs:
    def test_counts(self):
        assert long_arcs(TREFOIL).m == 3
        assert long_arcs(P("*")).m == 1
        assert long_arcs(HOPF).m == 2

    def test_trefoil_arcs_pass_over_once(self):
        la = long_arcs(TREFOIL)
        overs = sorted(v for v, _, _ in la.incidence.values())
        assert overs == [0, 1, 2]


class TestWirtinger:
    def test_trefoil(self):
        W = wirtinger(TREFOIL)
        assert W.m == 3 and len(W.relations) == 3

    def test_unknot(self):
        W = wirtinger(P("*"))
        assert W.m == 1 and len(W.relations) == 0


class TestFox:
    def test_rows_vanish_at_one(self):
        for row in fox_jacobian(wirtinger(TREFOIL)):
            assert sum(e(1) for e in row) == 0

    def test_row_shape(self):
        J = fox_jacobian(wirtinger(TREFOIL))
        for row in J:
            assert sorted(row, key=repr) == sorted([L({0: 1}), L({1: -1}), L({0: -1, 1: 1})], key=repr)

    def test_specializes_to_coloring_matrix(self):
        J = fox_jacobian(wirtinger(TREFOIL))
        B = coloring_matrix(TREFOIL)
        for jrow, brow in zip(J, B):
            vals = [e(-1) for e in jrow]
            assert vals == brow or vals == [-b for b in brow]

    def test_unknot_is_empty(self):
        assert fox_jacobian(wirtinger(P("*"))) == []


class TestColoringMatrix:
    def test_trefoil_rows(self):
        for row in coloring_matrix(TREFOIL):
            assert sorted(row) == [-1, -1, 2]

    def test_kink_collapses(self):
        assert coloring_matrix(P("O1+U1+")) == [[0]]

    def test_split_union_is_block_diagonal(self):
        B = coloring_matrix(P("O1+U2+O3+U1+O2+U3+;O4+U5+O6+U4+O5+U6+"))
        assert all(B[i][j] == 0 for i in range(3) for j in range(3, 6))
        assert all(B[i][j] == 0 for i in range(3, 6) for j in range(3))


class TestDeterminant:
    def test_examples(self):
        assert determinant(TREFOIL) == 3
        assert determinant(P("O1+U2+O3+U1+O2+U3+;*")) == 0
        assert determinant(connected_sum(TREFOIL, (0, 0), TREFOIL, (0, 0))) == 9
        assert determinant(P("*")) == 1
        assert determinant(P("*;*")) == 0

    def test_requires_checkerboard(self):
        with pytest.raises(PreconditionError):
            determinant(HOPF)

    def test_knotinfo(self):
        for name, rec in KNOTINFO.items():
            assert determinant(P(pd_to_gauss(rec["pd"]))) == rec["determinant"], name


class TestAlexander:
    def test_trefoil(self):
        assert alexander_polynomial(TREFOIL) == L({0: 1, 1: -1, 2: 1})
        assert alexander_polynomial(TREFOIL, "almost_classical") == L({0: 1, 1: -1, 2: 1})
        assert elementary_ideal_gcd(TREFOIL, 1) == L({0: 1, 1: -1, 2: 1})

    def test_knotinfo(self):
        for name, rec in KNOTINFO.items():
            D = P(pd_to_gauss(rec["pd"]))
            for mode in ("gcd", "almost_classical"):
                assert alexander_polynomial(D, mode) == L(rec["alexander"]).canonical(), (name, mode)

    def test_unknot(self):
        assert alexander_polynomial(P("*")) == L({0: 1})
        with pytest.raises(PreconditionError):
            elementary_ideal_gcd(P("*"), 1)

    def test_split_union_vanishes(self):
        assert elementary_ideal_gcd(P("O1+U2+O3+U1+O2+U3+;*"), 1) == L({})

    def test_mode_checks(self):
        with pytest.raises(PreconditionError):
            alexander_polynomial(P("O1+O2+U1+U2+"), "almost_classical")
        with pytest.raises(ValueError):
            alexander_polynomial(TREFOIL, "bogus")
        with pytest.raises(ValueError):
            elementary_ideal_gcd(TREFOIL, 9)


def test_eval_at_minus_one():
    assert eval_at_minus_one(L({0: 1, 1: -1, 2: 1})) == 3
    assert eval_at_minus_one(L({})) == 0
    assert eval_at_minus_one(L({1: 1, 0: -1, -2: 1})) == 1


def test_alternating_poly():
    assert is_alternating_poly(L({1: 1, 0: -1, -1: 1}))
    assert not is_alternating_poly(L({2: 1, 0: -1, -1: 1}))
    assert is_alternating_poly(L({}))


class TestModP:
    def test_trefoil(self):
        lab = mod_p_labeling(TREFOIL, 3)
        assert lab is not None and len(set(lab)) == 3
        assert mod_p_labeling(TREFOIL, 5) is None
        assert mod_p_labeling(TREFOIL, 2) is None

    def test_non_prime(self):
        with pytest.raises(ValueError):
            mod_p_labeling(TREFOIL, 9)

    def test_library_bruteforce_agrees(self):
        for p in (2, 3, 5, 7):
            assert (mod_p_labeling(TREFOIL, p) is None) == (mod_p_labeling_bruteforce(TREFOIL, p) is None)


# ------------------------------------------------------------ properties

@settings(max_examples=60, deadline=None)
@given(diagrams(min_n=1, max_n=6, max_k=2))
def test_minors_agree_on_checkerboard_diagrams(D):
    if not is_checkerboard_colorable(D):
        return
    B = coloring_matrix(D)
    n, m = len(B), len(B[0])
    if m != n:
        return
    vals = {abs(fraction_det([[B[i][j] for j in range(n) if j != c] for i in range(n) if i != r]))
            for r, c in itertools.product(range(n), repeat=2)}
    assert len(vals) == 1


@settings(max_examples=60, deadline=None)
@given(diagrams(min_n=1, max_n=6, max_k=2))
def test_determinant_is_alexander_at_minus_one(D):
    if not is_almost_classical_diagram(D) or not is_checkerboard_colorable(D):
        return
    assert determinant(D) == eval_at_minus_one(alexander_polynomial(D, "almost_classical"))


@settings(max_examples=60, deadline=None)
@given(diagrams(min_n=1, max_n=6, max_k=1))
def test_knot_determinant_is_odd(D):
    if is_checkerboard_colorable(D):
        assert determinant(D) % 2 == 1


@settings(max_examples=40, deadline=None)
@given(diagrams(min_n=1, max_n=4, max_k=2))
def test_mod_p_matches_coloring_oracle(D):
    if not is_checkerboard_colorable(D):
        return
    det = determinant(D)
    for p in (2, 3, 5, 7):
        exists = mod_p_labeling(D, p) is not None
        assert exists == has_nontrivial_coloring(D, p)
        assert exists == (det % p == 0)


@settings(max_examples=60, deadline=None)
@given(diagrams(max_n=6, max_k=3))
def test_coloring_divisor_matches_determinant(D):
    if is_checkerboard_colorable(D):
        assert coloring_divisor(D) == determinant(D)
