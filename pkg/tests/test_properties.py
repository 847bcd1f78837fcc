"""Algebraic laws on random small instances, all checked exactly.

These suites back the property criterion of the acceptance run; the
functions listed in PROPERTY_SUITES are re-run from there.
"""

from functools import lru_cache

from gmpy2 import mpq
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mopdarboux import constructions as C
from mopdarboux.algebra import GaussianRational, Mat, Poly
from mopdarboux.darboux import conjugate, verify_strong
from mopdarboux.diffop import MatDiffOp, compose, formal_adjoint
from mopdarboux.dwalgebra import eigenvalue_poly, solve_bounded_order
from mopdarboux.weights import formal_symmetry_test, inner_product, w_adjoint

from strategies import eigen_shaped_ops, gaussians, matrices, polynomial_ops, rationals, weights


@given(polynomial_ops(2))
def test_formal_adjoint_involution(D):
    assert formal_adjoint(formal_adjoint(D)) == D


@given(weights(), polynomial_ops(2))
def test_weighted_adjoint_involution(W, D):
    assert w_adjoint(w_adjoint(D, W), W) == D


@given(polynomial_ops(2), polynomial_ops(2))
def test_formal_adjoint_anti_homomorphism(A, B):
    assert formal_adjoint(compose(A, B)) == compose(formal_adjoint(B), formal_adjoint(A))


@given(weights(), polynomial_ops(2, max_order=1), polynomial_ops(2, max_order=1), gaussians())
def test_weighted_adjoint_anti_homomorphism(W, A, B, c):
    dag = lambda D: w_adjoint(D, W)  # noqa: E731
    assert dag(compose(A, B)) == compose(dag(B), dag(A))
    assert dag(A.scale(c) + B) == dag(A).scale(c.conj()) + dag(B)


@given(eigen_shaped_ops(2), eigen_shaped_ops(2))
def test_representation_property(A, B):
    assert eigenvalue_poly(compose(A, B)) == eigenvalue_poly(A) * eigenvalue_poly(B)


@given(weights(), matrices(2), matrices(2), matrices(2), gaussians(), gaussians())
def test_sesquilinearity(W, P, Q, R, b, c):
    ip = lambda X, Y: inner_product(X, Y, W)  # noqa: E731
    bP, cR = P.scale(Poly([b])), R.scale(Poly([c]))
    assert ip(bP + cR, Q) == ip(P, Q).scale(b) + ip(R, Q).scale(c)
    assert ip(Q, bP + cR) == ip(Q, P).scale(b.conj()) + ip(Q, R).scale(c.conj())


@given(weights(), matrices(2), matrices(2), matrices(2))
def test_hermitian_form(W, P, Q, M):
    assert inner_product(P, Q, W) == inner_product(Q, P, W).H()
    # constant left factors pull out on the left and, conjugated, on the right
    A = Mat.from_const(M.coeff(0))
    assert inner_product(A * P, Q, W) == M.coeff(0) * inner_product(P, Q, W)
    assert inner_product(P, A * Q, W) == inner_product(P, Q, W) * M.coeff(0).H()


@lru_cache(maxsize=None)
def _strong_instances():
    out = []
    for inst in (C.laguerre4(2, 0), C.hermite_one(mpq(1, 3)), C.hermite_two(2)):
        cert = verify_strong(inst["V"], inst["source"], inst["target"], 6)
        assert cert.strong
        sym = [D for D in inst["D_list"] if formal_symmetry_test(D, inst["target"])]
        out.append((inst, cert, sym))
    return tuple(out)


@settings(max_examples=12)
@given(st.integers(min_value=0, max_value=2), st.lists(rationals(), min_size=5, max_size=5))
def test_parity_and_symmetry_preserved_by_conjugation(which, coeffs):
    inst, cert, sym = _strong_instances()[which]
    A = MatDiffOp.zero(2)
    for c, D in zip(coeffs, sym):
        A = A + D.scale(GaussianRational(c))
    assume(not A.is_zero())
    B = conjugate(A, cert, "up", 8)
    assert formal_symmetry_test(B, inst["source"])
    assert B.order == A.order + 2 * cert.V.order
    assert B.order % 2 == A.order % 2


@lru_cache(maxsize=None)
def _symmetric_outputs(kind):
    if kind == "hermite":
        W = C.scalar_hermite_weight(2)
    else:
        W = C.laguerre4(1, mpq(1, 2))["source"]
    return solve_bounded_order(W, 4).symmetric_basis


@given(st.lists(rationals(), min_size=12, max_size=12))
def test_symmetric_hermite_outputs_have_constant_hermitian_leading_coefficient(coeffs):
    """Even order 2m over e^{-x^2} I: leading coefficient (k1, k2 + i k3; k2 - i k3, k4)."""
    basis = _symmetric_outputs("hermite")
    D = MatDiffOp.zero(2)
    for c, B in zip(coeffs, basis):
        D = D + B.scale(GaussianRational(c))
    assume(not D.is_zero() and D.order % 2 == 0)
    F = D.leading_coefficient()
    assert F.degree() <= 0 and F == F.H()


@given(st.lists(rationals(), min_size=10, max_size=10))
def test_symmetric_laguerre_outputs_have_diagonal_leading_coefficient(coeffs):
    """Even order 2m over diag(w_(alpha+1), w_alpha): leading coefficient diag(k1 x^m, k4 x^m)."""
    basis = _symmetric_outputs("laguerre")
    D = MatDiffOp.zero(2)
    for c, B in zip(coeffs, basis):
        D = D + B.scale(GaussianRational(c))
    assume(not D.is_zero() and D.order % 2 == 0)
    m = D.order // 2
    F = D.leading_coefficient()
    assert F[0, 1].is_zero() and F[1, 0].is_zero()
    for p in range(2):
        entry = F[p, p].as_poly()
        assert entry.is_zero() or entry == Poly.monomial(m).scale(entry.coeff(m))
        assert entry.coeff(m).im == 0


PROPERTY_SUITES = [
    test_formal_adjoint_involution,
    test_weighted_adjoint_involution,
    test_formal_adjoint_anti_homomorphism,
    test_weighted_adjoint_anti_homomorphism,
    test_representation_property,
    test_sesquilinearity,
    test_hermitian_form,
    test_parity_and_symmetry_preserved_by_conjugation,
    test_symmetric_hermite_outputs_have_constant_hermitian_leading_coefficient,
    test_symmetric_laguerre_outputs_have_diagonal_leading_coefficient,
]
