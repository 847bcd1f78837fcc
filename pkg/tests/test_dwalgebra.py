"""Eigenvalue polynomials, membership in D(W) and the bounded-order solver."""

import pytest
from gmpy2 import mpq
from hypothesis import given

from mopdarboux import constructions as C
from mopdarboux.algebra import GaussianRational, Mat, Poly
from mopdarboux.diffop import MatDiffOp, compose, leading_symbol
from mopdarboux.dwalgebra import (
    NotInAlgebra,
    center_candidate_check,
    commutation_check,
    eigenvalue_poly,
    eval_eigen,
    membership_test,
    operator_equal_by_separation,
    real_span_dimension,
    solve_bounded_order,
)
from mopdarboux.mop import monic_sequence
from mopdarboux.weights import formal_symmetry_test

from strategies import eigen_shaped_ops, gaussians

NU = Poly.x()
X = Poly.x()
I_UNIT = GaussianRational(0, 1)


def _span_rank(ops, m, N=2):
    from mopdarboux.dwalgebra import _unknown_layout

    return real_span_dimension(ops + [D.scale(I_UNIT) for D in ops], _unknown_layout(N, m))


def _in_span(D, basis, m, N=2):
    return _span_rank(basis + [D], m, N) == _span_rank(basis, m, N)


# eigenvalue polynomials


def test_eigenvalue_of_hermite_operator():
    # [DERIVED] [nu]_1 (-2) + [nu]_2 0
    assert eigenvalue_poly(C.hermite_delta()) == Mat([[NU * -2]])


def test_eigenvalue_of_first_hermite_example_D1():
    # [PAPER] (-2 nu, 4a nu + 2a; 0, -2 nu + 4)
    for a in (mpq(1), mpq(2), mpq(1, 3)):
        D1 = C.hermite_one(a)["D_list"][0]
        assert eigenvalue_poly(D1) == Mat([[NU * -2, NU * (4 * a) + 2 * a], [0, NU * -2 + 4]])


def test_eigenvalue_at_zero_is_constant_coefficient():
    # [TRIVIAL] [0]_i = 0 for i >= 1
    D = C.laguerre4(1, mpq(1, 2))["D_list"][2]
    assert eval_eigen(eigenvalue_poly(D), 0) == D.coeff(0).evaluate(0)


def test_eigenvalue_rejects_wrong_shape():
    with pytest.raises(ValueError):
        eigenvalue_poly(C.op(Mat([[X]])))


def test_eigenvalue_of_first_hermite_example_D2_matches_display():
    # [PAPER] the displayed entry with its asymmetric second factor is what the
    # computation gives
    for a in (mpq(1), mpq(2), mpq(1, 3)):
        inst = C.hermite_one(a)
        assert eigenvalue_poly(inst["D_list"][1]) == inst["lam"][2]


# membership


def test_identity_is_a_member():
    # [TRIVIAL]
    assert membership_test(MatDiffOp.identity(2), C.hermite_one(1)["target"])


def test_laguerre_D1_is_a_member():
    # [PAPER]
    inst = C.laguerre4(1, mpq(1, 2))
    assert membership_test(inst["D_list"][0], inst["target"], n_check=10)


def test_derivative_is_not_a_member():
    # [TRIVIAL]
    assert not membership_test(MatDiffOp.d(2), C.scalar_hermite_weight(2))


def test_membership_size_mismatch():
    with pytest.raises(ValueError):
        membership_test(MatDiffOp.identity(1), C.scalar_hermite_weight(2))


def test_nonmember_with_eigen_shape_fails():
    # a constant off-diagonal unit has eigen shape but mixes P_n's columns
    W = C.hermite_one(1)["target"]
    assert not membership_test(C.op(Mat.unit(2, 0, 1)), W)


# separation


def test_laguerre_relations_by_separation():
    # [PAPER] D4 = -D1 - D2 and D5 = i(D3 D1 - D1 D3)
    inst = C.laguerre4(1, mpq(1, 2))
    W = inst["target"]
    D1, D2, D3, D4, D5 = inst["D_list"]
    assert operator_equal_by_separation(D4, (D1 + D2).scale(-1), W)
    assert operator_equal_by_separation(D5, (D3 * D1 - D1 * D3).scale(I_UNIT), W)


def test_laguerre_relations_hold_as_operators():
    # [DERIVED] separation agrees with direct coefficient comparison
    inst = C.laguerre4(2, 0)
    D1, D2, D3, D4, D5 = inst["D_list"]
    assert D4 == (D1 + D2).scale(-1)
    assert D5 == (D3 * D1 - D1 * D3).scale(I_UNIT)


def test_operator_equals_itself():
    # [TRIVIAL]
    D = C.hermite_one(1)["D_list"][2]
    assert operator_equal_by_separation(D, D)


def test_separation_refuses_nonmembers():
    W = C.scalar_hermite_weight(2)
    with pytest.raises(NotInAlgebra):
        operator_equal_by_separation(MatDiffOp.d(2), MatDiffOp.d(2), W)


# commutation and center


def test_Z1_commutes_with_D2():
    # [PAPER]
    inst = C.hermite_one(1)
    Z = C.hermite_one_center(inst, 1)
    assert commutation_check(Z[1], inst["D_list"][1])


def test_Z2_eigenvalue():
    # [PAPER] 16 (nu^2 + 3 nu + 2 + 4/a^2)(nu^2 - nu + 4/a^2) I
    for a in (mpq(1), mpq(2)):
        inst = C.hermite_one(a)
        Z = C.hermite_one_center(inst, a)
        expected = Mat.scalar(2, (NU * NU + NU * 3 + 2 + 4 / (a * a)) * (NU * NU - NU + 4 / (a * a)) * 16)
        assert eigenvalue_poly(Z[2]) == expected == inst["lam_center"][2]


def test_center_candidates():
    inst = C.hermite_one(2)
    Z = C.hermite_one_center(inst, 2)
    gens = inst["D_list"]
    assert center_candidate_check(Z[1], gens) and center_candidate_check(Z[2], gens)
    assert not center_candidate_check(inst["D_list"][0], gens)


def test_operator_commutes_with_itself():
    # [TRIVIAL]
    D = C.laguerre4(1, 0)["D_list"][2]
    assert commutation_check(D, D)


# solver


def test_solver_scalar_hermite():
    # [PAPER] order <= 2 part of C[delta] is span{1, delta}
    res = solve_bounded_order(C.scalar_hermite_weight(1), 2)
    assert res.dimension == 2
    assert _in_span(C.hermite_delta(), res.basis, 2, N=1)
    assert _in_span(MatDiffOp.identity(1), res.basis, 2, N=1)


def test_solver_first_hermite_example():
    # [PAPER] order <= 2 is spanned by I and D1
    inst = C.hermite_one(1)
    res = solve_bounded_order(inst["target"], 2)
    assert res.dimension == 2
    assert _in_span(inst["D_list"][0], res.basis, 2)
    assert _in_span(MatDiffOp.identity(2), res.basis, 2)


def test_solver_finds_only_identity_beyond_bochner():
    # [PAPER] no second-order operators
    res = solve_bounded_order(C.beyond_one(1)["target"], 2)
    assert res.dimension == 1
    assert _in_span(MatDiffOp.identity(2), res.basis, 2)


def test_solver_is_deterministic_and_stabilizes():
    W = C.hermite_one(2)["target"]
    r1, r2 = solve_bounded_order(W, 2), solve_bounded_order(W, 2)
    assert r1.basis == r2.basis and r1.trace == r2.trace
    dims = [d for _, d in r1.trace]
    assert dims[-1] == dims[-2] == dims[-3]
    for B in r1.basis:
        assert membership_test(B, W, r1.n_check)


def test_solver_rejects_negative_order():
    with pytest.raises(ValueError):
        solve_bounded_order(C.scalar_hermite_weight(1), -1)


def test_solver_json_shape():
    res = solve_bounded_order(C.scalar_hermite_weight(1), 2).to_json()
    assert res["dimension"] == 2 and res["symmetric_dimension"] == 2
    assert res["membership_checked_to"] == res["K"] + 4


# invariants


CATALOG_PAIRS = [
    (C.laguerre4(1, mpq(1, 2))["D_list"], "laguerre-4"),
    (C.hermite_one(2)["D_list"], "hermite-I"),
    (C.hermite_two(mpq(1, 3))["D_list"], "hermite-II"),
]


@pytest.mark.parametrize("ops,name", CATALOG_PAIRS, ids=[n for _, n in CATALOG_PAIRS])
def test_representation_property_on_catalog(ops, name):
    for A in ops:
        for B in ops:
            assert eigenvalue_poly(compose(A, B)) == eigenvalue_poly(A) * eigenvalue_poly(B)


@given(eigen_shaped_ops(2, max_order=2), eigen_shaped_ops(2, max_order=2))
def test_representation_property(A, B):
    assert eigenvalue_poly(compose(A, B)) == eigenvalue_poly(A) * eigenvalue_poly(B)


@given(eigen_shaped_ops(2), eigen_shaped_ops(2), gaussians())
def test_eigenvalue_is_linear(A, B, c):
    assert eigenvalue_poly(A.scale(c) + B) == eigenvalue_poly(A).scale(Poly([c])) + eigenvalue_poly(B)


@given(eigen_shaped_ops(2, max_order=3))
def test_eigenvalue_matches_leading_symbol(D):
    assert eigenvalue_poly(D) == leading_symbol(D)


@pytest.mark.parametrize("W,m", [
    (C.hermite_one(1)["target"], 2),
    (C.laguerre4(1, mpq(1, 2))["target"], 2),
    (C.scalar_hermite_weight(2), 2),
])
def test_symmetric_split(W, m):
    """S(W) + i S(W) recovers the complex span: real dimension doubles."""
    res = solve_bounded_order(W, m)
    from mopdarboux.dwalgebra import _unknown_layout

    layout = _unknown_layout(W.n, m)
    S = res.symmetric_basis
    assert len(S) == res.dimension
    for D in S:
        assert formal_symmetry_test(D, W)
    full = res.basis + [B.scale(I_UNIT) for B in res.basis]
    both = S + [D.scale(I_UNIT) for D in S]
    assert real_span_dimension(both, layout) == real_span_dimension(full, layout) == 2 * res.dimension


def test_symmetric_operators_over_hermite_identity():
    # even-order symmetric operators over e^{-x^2} I_2 have constant Hermitian leading coefficients
    W = C.scalar_hermite_weight(2)
    res = solve_bounded_order(W, 2)
    for D in res.symmetric_basis:
        if D.order == 2:
            F = D.coeff(2)
            assert F.degree() <= 0 and F == F.H()


def test_symmetric_operators_over_diagonal_laguerre():
    # even order 2m: leading coefficient diag(k1 x^m, k4 x^m)
    w = C.laguerre4(1, mpq(1, 2))["source"]
    res = solve_bounded_order(w, 2)
    assert any(D.order == 2 for D in res.symmetric_basis)
    for D in res.symmetric_basis:
        if D.order == 2:
            F = D.coeff(2)
            assert F[0, 1].is_zero() and F[1, 0].is_zero()
            for p in range(2):
                entry = F[p, p].as_poly()
                assert entry.is_zero() or (entry.degree == 1 and not entry.coeffs[0])


def test_solver_over_laguerre_source():
    # [DERIVED] two idempotents, the two diagonal Laguerre operators and the
    # two first-order off-diagonal pieces of E3 and E5
    inst = C.laguerre4(1, mpq(1, 2))
    w = inst["source"]
    res = solve_bounded_order(w, 2)
    assert res.dimension == 6
    tab = monic_sequence(w, 6)
    for k in (2, 3, 4, 5):
        assert membership_test(inst["E"][k], w, 6, tab)
        assert _in_span(inst["E"][k], res.basis, 2)
    assert not _in_span(inst["E"][3], [inst["E"][5]], 2)
