"""Companion operators, certificates, conjugation and mapped sequences."""

import pytest
from gmpy2 import mpq
from hypothesis import given, settings

from mopdarboux import constructions as C
from mopdarboux.algebra import Mat, Poly
from mopdarboux.darboux import (
    FLAGS,
    PLAIN_FLAGS,
    ConjugationError,
    NotStrongCandidate,
    companion_operator,
    conjugate,
    default_cap,
    mapped_sequence,
    reverse,
    transformer_compose,
    verify_strong,
)
from mopdarboux.diffop import MatDiffOp, compose
from mopdarboux.dwalgebra import eigenvalue_poly, membership_test, solve_bounded_order
from mopdarboux.weights import Kernel, MatrixWeight, formal_symmetry_test, inner_product

from strategies import matrices

X = Poly.x()
CAP = 8
SAMPLES = [(1, mpq(1, 2)), (2, 0), (mpq(1, 3), mpq(3, 2))]


@pytest.fixture(scope="module")
def lag():
    inst = C.laguerre4(1, mpq(1, 2))
    inst["cert"] = verify_strong(inst["V"], inst["source"], inst["target"], CAP)
    return inst


@pytest.fixture(scope="module")
def her1():
    inst = C.hermite_one(1)
    inst["cert"] = verify_strong(inst["V"], inst["source"], inst["target"], CAP)
    return inst


def _constant_conjugation(W, M):
    target = MatrixWeight(W.kernel, M * W.H * M.H(), name="M W M*")
    return target, verify_strong(MatDiffOp.multiplication(M.inverse()), W, target, CAP)


# companion operator


@pytest.mark.parametrize("a,alpha", SAMPLES)
def test_laguerre_companion(a, alpha):
    # [PAPER] N = d(-ax, x; -1, 0) + (-a - 1/a, alpha + 1; 0, 1/a)
    inst = C.laguerre4(a, alpha)
    a, alpha = mpq(a), mpq(alpha)
    expected = C.op([[-a - 1 / a, alpha + 1], [0, 1 / a]], [[X * -a, X], [-1, 0]])
    assert companion_operator(inst["V"], inst["source"], inst["target"]) == expected == inst["N"]


@pytest.mark.parametrize("a", [1, 2, mpq(1, 3)])
def test_second_hermite_example_companion(a):
    # [PAPER] V = d(0, 1; 1, -ax) - (2/a) I gives N = d(-ax, -1; -1, 0) + diag(-a - 2/a, -2/a)
    inst = C.hermite_two(a)
    a = mpq(a)
    assert inst["V"] == C.op(Mat.scalar(2, -2 / a), [[0, 1], [1, X * -a]])
    expected = C.op(Mat.diag([-a - 2 / a, -2 / a]), [[X * -a, -1], [-1, 0]])
    assert companion_operator(inst["V"], inst["source"], inst["target"]) == expected


def test_constant_conjugation_companion():
    # [DERIVED] <P M^-1, Q>_{M W M*} = <P, Q M>_W, so N is multiplication by M.
    # For Hermitian M this is M*, the form usually quoted.
    W = C.hermite_one(1)["target"]
    M = Mat([[1, 1], [0, 2]])
    target, cert = _constant_conjugation(W, M)
    assert cert.N == MatDiffOp.multiplication(M)
    assert cert.N != MatDiffOp.multiplication(M.H())
    assert cert.strong
    H = Mat.diag([1, 2])
    assert _constant_conjugation(W, H)[1].N == MatDiffOp.multiplication(H.H())


def test_companion_rejects_non_polynomial_result():
    # W~ I W^-1 = diag((x + 1)/x, 1)
    w = C.laguerre4(1, 0)["source"]
    W = MatrixWeight(w.kernel, Mat([[X + 1, 0], [0, 1]]))
    with pytest.raises(NotStrongCandidate) as info:
        companion_operator(MatDiffOp.identity(2), w, W)
    assert info.value.entry is not None and info.value.order == 0


def test_companion_requires_shared_kernel():
    with pytest.raises(ValueError):
        companion_operator(MatDiffOp.identity(1), C.scalar_hermite_weight(1),
                           MatrixWeight(Kernel.laguerre(0), Mat.identity(1)))


# certificates


@pytest.mark.parametrize("a,alpha", SAMPLES)
def test_laguerre_certificate_is_strong(a, alpha):
    # [PAPER]
    inst = C.laguerre4(a, alpha)
    cert = verify_strong(inst["V"], inst["source"], inst["target"], CAP)
    assert cert.strong and all(cert.flags[f] for f in FLAGS)
    assert cert.D == inst["D"]


def test_three_by_three_is_plain_but_not_strong():
    # [PAPER] plain flags hold; the leading coefficient of V is singular
    inst = C.three_by_three(1, 1)
    cert = verify_strong(inst["V"], inst["source"], inst["target"], CAP)
    assert cert.plain and not cert.strong
    assert all(cert.flags[f] for f in PLAIN_FLAGS)
    assert not cert.flags["V_leading_nonsingular"]


def test_reflexivity():
    # [TRIVIAL]
    W = C.hermite_two(2)["target"]
    cert = verify_strong(MatDiffOp.identity(2), W, W, CAP)
    assert cert.strong and cert.N == MatDiffOp.identity(2)


def test_wrong_target_is_recorded_not_raised():
    inst = C.laguerre4(1, mpq(1, 2))
    cert = verify_strong(inst["V"], inst["source"], inst["source"], 4)
    assert not cert.strong and cert.failures


def test_non_degree_preserving_transformer():
    W = C.scalar_hermite_weight(1)
    cert = verify_strong(MatDiffOp.d(1), W, W, 4)
    assert not cert.flags["V_degree_preserving"] and not cert.plain
    assert cert.failures["V_degree_preserving"]["witness"] == 0


def test_certificate_json_records_the_cap(lag):
    out = lag["cert"].to_json()
    assert out["strong"] and out["proportionality_note"] == f"verified to degree cap {CAP}"
    assert set(out["flags"]) == set(FLAGS)


def test_cap_from_environment(monkeypatch):
    monkeypatch.delenv("MOPDARBOUX_CAP", raising=False)
    assert default_cap() == 12
    monkeypatch.setenv("MOPDARBOUX_CAP", "5")
    assert default_cap() == 5
    monkeypatch.setenv("MOPDARBOUX_CAP", "-1")
    with pytest.raises(ValueError):
        default_cap()


# conjugation


def test_minus_identity_maps_to_D1(lag):
    # [PAPER] D1 = N E1 V
    assert conjugate(lag["E"][1], lag["cert"], "down") == lag["D_list"][0]


def test_identity_maps_to_the_factorization(lag):
    # [TRIVIAL]
    cert = lag["cert"]
    assert conjugate(MatDiffOp.identity(2), cert, "up") == cert.D == compose(cert.V, cert.N)
    assert conjugate(MatDiffOp.identity(2), cert, "down") == compose(cert.N, cert.V)


def test_odd_order_member_in_three_by_three():
    # [DERIVED] the witness E21 lands on an odd-order member of the target algebra
    inst = C.three_by_three(1, 1)
    cert = verify_strong(inst["V"], inst["source"], inst["target"], CAP)
    odd = conjugate(inst["E21"], cert, "down")
    assert odd.order % 2 == 1
    assert membership_test(odd, inst["target"], 12)


def test_conjugation_rejects_nonmembers(lag):
    with pytest.raises(ConjugationError):
        conjugate(MatDiffOp.d(2), lag["cert"], "down")


def test_conjugation_rejects_unknown_direction(lag):
    with pytest.raises(ValueError):
        conjugate(MatDiffOp.identity(2), lag["cert"], "sideways")


# composition and reversal


def test_compose_with_identity_certificate(lag):
    # [TRIVIAL]
    w = lag["source"]
    ident = verify_strong(MatDiffOp.identity(2), w, w, CAP)
    composed = transformer_compose(ident, lag["cert"])
    assert composed.V == lag["V"] and composed.strong


def test_reverse_uses_the_companion(lag):
    # [PAPER]
    back = reverse(lag["cert"])
    assert back.strong and back.V == lag["cert"].N and back.N == lag["V"]
    assert back.source == lag["target"] and back.target == lag["source"]


def test_compose_with_constant_conjugation(lag):
    # [DERIVED]
    M = Mat.diag([1, 2])
    target, second = _constant_conjugation(lag["target"], M)
    composed = transformer_compose(lag["cert"], second)
    assert composed.strong and composed.target == target
    assert composed.V == compose(lag["V"], MatDiffOp.multiplication(M.inverse()))


def test_compose_refuses_broken_chain(lag, her1):
    with pytest.raises(ValueError):
        transformer_compose(lag["cert"], her1["cert"])


def test_reverse_refuses_non_strong():
    inst = C.three_by_three(1, 1)
    cert = verify_strong(inst["V"], inst["source"], inst["target"], 4)
    with pytest.raises(ValueError):
        reverse(cert)


# mapped sequences


@pytest.mark.parametrize("a", [1, 2, mpq(1, 3)])
def test_second_hermite_example_sequence(a):
    # [PAPER] entry (2,2) of Q_n is -(2/a) H_n - a n x H_{n-1}
    inst = C.hermite_two(a)
    a = mpq(a)
    cert = verify_strong(inst["V"], inst["source"], inst["target"], CAP)
    seq = mapped_sequence(cert)
    Hs = C.scalar_monic(Kernel.hermite(), CAP)
    for n in range(CAP + 1):
        prev = Hs[n - 1] if n else Poly()
        assert seq.polys[n][1, 1].as_poly() == Hs[n] * (-2 / a) - X * prev * (a * n)
        assert seq.polys[n] == inst["Q"](n, Hs)


@pytest.mark.parametrize("a", [1, 2, mpq(1, 3)])
def test_first_hermite_example_leading_coefficients(a):
    # [PAPER] (4/a, -2 - 4n; 0, 4/a + a n(n - 1))
    inst = C.hermite_one(a)
    a = mpq(a)
    cert = verify_strong(inst["V"], inst["source"], inst["target"], CAP)
    seq = mapped_sequence(cert)
    for n, A in enumerate(seq.leading):
        assert A == Mat([[4 / a, -2 - 4 * n], [0, 4 / a + a * n * (n - 1)]]).coeff(0)
        assert A == cert.leading[n]


# invariants


def _strong_catalog():
    out = []
    for name, inst in [("laguerre-4", C.laguerre4(2, 0)), ("hermite-I", C.hermite_one(2)),
                       ("hermite-II", C.hermite_two(mpq(1, 3)))]:
        cert = verify_strong(inst["V"], inst["source"], inst["target"], CAP)
        out.append((name, inst, cert))
    return out


STRONG = _strong_catalog()


@pytest.mark.parametrize("name,inst,cert", STRONG, ids=[s[0] for s in STRONG])
def test_conjugation_preserves_symmetry_and_parity(name, inst, cert):
    W, w = inst["target"], inst["source"]
    for A in inst["D_list"]:
        if not formal_symmetry_test(A, W):
            continue
        B = conjugate(A, cert, "up")
        assert formal_symmetry_test(B, w)
        assert B.order == A.order + 2 * cert.V.order
        assert B.order % 2 == A.order % 2


@pytest.mark.parametrize("name,inst,cert", STRONG, ids=[s[0] for s in STRONG])
def test_round_trip(name, inst, cert):
    """down(up(A)) = (N V) A (N V) for A in the target algebra."""
    Dt = compose(cert.N, cert.V)
    for A in inst["D_list"][:3]:
        back = conjugate(conjugate(A, cert, "up"), cert, "down")
        assert eigenvalue_poly(back) == eigenvalue_poly(compose(compose(Dt, A), Dt))


@pytest.mark.parametrize("inst", [C.hermite_one(1), C.hermite_two(1)], ids=["hermite-I", "hermite-II"])
def test_parity_corollary_at_odd_order_bound(inst):
    # sources are e^{-x^2} I, whose algebra has only even orders
    res = solve_bounded_order(inst["target"], 3)
    assert all(B.order % 2 == 0 for B in res.basis)


@settings(max_examples=15)
@given(matrices(2, max_degree=4), matrices(2, max_degree=4))
def test_adjointness_on_random_polynomials(P, Q):
    inst = C.laguerre4(1, mpq(1, 2))
    w, W, V, N = inst["source"], inst["target"], inst["V"], inst["N"]
    assert inner_product(V.apply(P), Q, W) == inner_product(P, N.apply(Q), w)


@settings(max_examples=15)
@given(matrices(2, max_degree=3), matrices(2, max_degree=3))
def test_adjointness_on_random_polynomials_hermite(P, Q):
    inst = C.hermite_one(mpq(1, 3))
    w, W, V, N = inst["source"], inst["target"], inst["V"], inst["N"]
    assert inner_product(V.apply(P), Q, W) == inner_product(P, N.apply(Q), w)

