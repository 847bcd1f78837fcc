"""Weights, transformers and operators of the catalog examples.

Every builder takes exact rational parameters and returns plain objects;
the checks that use them live in :mod:`mopdarboux.catalog`.
"""

from __future__ import annotations

from gmpy2 import mpq

from .algebra import I_UNIT, Mat, Poly
from .diffop import MatDiffOp, poly_in, scalar_op
from .weights import Kernel, MatrixWeight

X = Poly.x()
ONE = Poly.one()


def op(*coeffs) -> MatDiffOp:
    """Operator from coefficient matrices given lowest order first."""
    mats = [c if isinstance(c, Mat) else Mat(c) for c in coeffs]
    return MatDiffOp(mats[0].n, mats)


def from_blocks(rows) -> MatDiffOp:
    """Matrix of scalar operators; 0 stands for the zero operator."""
    ops = [[scalar_op(0) if (isinstance(e, int) and e == 0) else e for e in r] for r in rows]
    return MatDiffOp.from_blocks(ops)


def hermite_delta() -> MatDiffOp:
    """d^2 - 2 d x."""
    return scalar_op(0, X * -2, 1)


def laguerre_delta(alpha) -> MatDiffOp:
    """d^2 x + d (alpha + 1 - x)."""
    return scalar_op(0, ONE * (alpha + 1) - X, X)


def in_delta(delta: MatDiffOp, coeffs) -> MatDiffOp:
    return poly_in(delta, coeffs)


def poly_coeffs(p: Poly) -> list:
    return list(p.coeffs)


def scalar_hermite_weight(n: int) -> MatrixWeight:
    return MatrixWeight(Kernel.hermite(), Mat.identity(n), name=f"e^(-x^2) I_{n}")


def scalar_monic(kernel: Kernel, K: int) -> list:
    """Monic scalar orthogonal polynomials p_0..p_K of a kernel."""
    from .mop import monic_sequence

    tab = monic_sequence(MatrixWeight(kernel, Mat.identity(1)), K)
    return [P[0, 0].as_poly() for P in tab.polys]


def _check_nonzero(name: str, v):
    if v == 0:
        raise ValueError(f"parameter {name} must be nonzero")


def _check_alpha(alpha):
    if alpha <= -1:
        raise ValueError("parameter alpha must exceed -1")


# ---------------------------------------------------------------------------
# Laguerre 2x2


def laguerre4(a, alpha) -> dict:
    a, alpha = mpq(a), mpq(alpha)
    _check_nonzero("a", a)
    _check_alpha(alpha)
    k = Kernel.laguerre(alpha)
    T = Mat([[1, X * a], [0, 1]])
    H = Mat([[X * (ONE + X * (a * a)), X * a], [X * a, 1]])
    W = MatrixWeight(k, H, T=T, name="laguerre-4 W")
    w = MatrixWeight(k, Mat.diag([X, 1]), name="diag(x^(alpha+1), x^alpha) e^-x")
    ia = 1 / a
    V = op([[-ia, alpha + 1], [0, ia]], [[0, X], [-1, X * a]])
    N = op([[-a - ia, alpha + 1], [0, ia]], [[X * -a, X], [-1, 0]])
    D = op(Mat.diag([1 + ia * ia, ia * ia]),
           Mat.diag([X - (alpha + 2), X - (alpha + 1)]),
           Mat.diag([-X, -X]))
    D1 = op([[-(a * a + 1) / (a * a), a * (alpha + 1)], [0, -ia * ia]],
            [[ONE * (alpha + 2) - X, X * a], [0, ONE * (alpha + 1) - X]],
            Mat.diag([X, X]))
    D2 = op([[(a * a + 1) / (a * a), -(a * a + 1) * (alpha + 1) / a], [0, 0]],
            [[X, X * (-(a * a * alpha + 3 * a * a + 1) / a)], [ia, -(alpha + 1)]],
            [[0, X * X * -a], [0, -X]])
    D3 = op([[-(alpha + 1) / a, (alpha + 1) * (a * a * alpha - 1) / (a * a)], [-ia * ia, (alpha + 1) / a]],
            [[(ONE * (2 * (a * a + 1) * (2 + alpha)) - X) * ia,
              X * (-ia * ia) - X * (2 * (a * a * (alpha + 2) + 1)) - (alpha + 2) * (alpha + 1)],
             [ia * ia, (X - 2 * (alpha + 1)) * ia]],
            [[X * (a * (alpha + 5)) + X * (2 * ia), X * X * (-a * a * (alpha + 5)) - X * (ONE * (2 * alpha + 4) + X)],
             [2 + alpha, X * (-a * (alpha + 2)) - X * (2 * ia)]],
            [[X * X * a, -(X * X) * (X * (a * a) + 1)], [X, X * X * -a]])
    D4 = op([[0, (alpha + 1) / a], [0, ia * ia]],
            [[-alpha - 2, X * ((a * a * alpha + 2 * a * a + 1) / a)], [-ia, X]],
            [[-X, X * X * a], [0, 0]])
    i = I_UNIT
    D5 = op(Mat([[(alpha + 1) / a, -(ia * ia) * (alpha + 1) * (a * a * alpha + 2 * a * a + 1)],
                 [ia * ia, -(alpha + 1) / a]]).scale(i),
            Mat([[(X + 2 * a * a * alpha + 4 * a * a) * ia,
                  X * (-ia * ia) - (X * (2 * a * a) - alpha + X * 4 - 1) * (alpha + 2)],
                 [-ia * ia, X * -ia]]).scale(i),
            Mat([[X * (a * (alpha + 5)), -X * (X * (a * a * alpha) + X * (5 * a * a) - 2 * alpha + X * 3 - 4)],
                 [alpha + 2, X * (-a * (alpha + 2))]]).scale(i),
            Mat([[X * X * a, -(X * X) * (X * (a * a) - 1)], [X, X * X * -a]]).scale(i))
    E = {
        1: op(Mat.scalar(2, -1)),
        2: op(Mat.unit(2, 0, 0)),
        3: from_blocks([[0, scalar_op(alpha + 1, X)], [scalar_op(1, -1), 0]]),
        4: op(Mat.unit(2, 1, 1)),
        5: from_blocks([[0, scalar_op(alpha + 1, X)], [scalar_op(-1, 1), 0]]).scale(i),
    }
    VT = op([[-ia, ONE * (alpha + 1) - X], [0, ia]], [[0, X], [-1, 0]])
    VT_dagger = op([[-ia, alpha + 1], [-1, ia]], [[0, X], [-1, 0]])

    def Q(n, La1, La):
        """Closed form built from monic Laguerre polynomials for alpha+1 and alpha."""
        p1, p0 = La1[n], La[n]
        return Mat([[p1 * -ia, p1 * (alpha + 1) + X * p1.derivative()],
                    [-p0.derivative(), p0 * ia + X * p0.derivative() * a]])

    return dict(source=w, target=W, V=V, N=N, D=D, T=T, D_list=[D1, D2, D3, D4, D5], E=E,
                VT=VT, VT_dagger=VT_dagger, Q=Q,
                kernels=(Kernel.laguerre(alpha + 1), Kernel.laguerre(alpha)))


def lag_directsum(alpha) -> dict:
    alpha = mpq(alpha)
    _check_alpha(alpha)
    k = Kernel.laguerre(alpha)
    shifted = MatrixWeight(k, Mat.diag([X, 1]), name="w_(alpha+1) + w_alpha")
    plain = MatrixWeight(k, Mat.identity(2), name="w_alpha + w_alpha")
    odd = from_blocks([[0, 0], [scalar_op(-1, 1), 0]])
    return dict(shifted=shifted, plain=plain, odd=odd)


# ---------------------------------------------------------------------------
# Hermite examples


def hermite_one(a) -> dict:
    a = mpq(a)
    _check_nonzero("a", a)
    ia = 1 / a
    k = Kernel.hermite()
    T = Mat([[1, X * X * a], [0, 1]])
    W = MatrixWeight(k, Mat([[ONE + X ** 4 * (a * a), X * X * a], [X * X * a, 1]]), T=T, name="hermite-I W")
    w = scalar_hermite_weight(2)
    V = op([[4 * ia, -2], [0, 4 * ia]], [[0, X * -4], [0, 0]], [[0, 1], [-1, X * X * a]])
    N = op([[2 * a + 4 * ia, 2], [0, 4 * ia]], [[X * (4 * a), X * 4], [0, 0]], [[X * X * a, -1], [1, 0]])
    d = hermite_delta()
    D = from_blocks([[in_delta(d, [8 + 16 * ia * ia, -6, 1]), 0], [0, in_delta(d, [16 * ia * ia, 2, 1])]])
    D1 = op([[0, 2 * a], [0, 4]], [[X * -2, X * (4 * a)], [0, X * -2]], Mat.identity(2))
    D2 = op([[8 * ia, 4 + 16 * ia * ia], [16 * ia * ia, -8 * ia]],
            [[X * (16 * ia), X * -16], [0, X * (-16 * ia)]],
            [[-12 * a - 8 * ia, X * X * (12 * a * a) - X * X * 8 + 12], [0, 8 * ia]],
            [[X * (-8 * a), X ** 3 * (8 * a * a) + X * 8], [0, 0]],
            [[X * X * -a, X ** 4 * (a * a) - 1], [-1, X * X * a]])
    D3 = op([[0, 8 * ia], [0, 16 * ia * ia]],
            [[0, X * (16 * ia)], [0, 0]],
            [[-10, X * X * (10 * a) - 4 * ia], [-4 * ia, X * X * 4]],
            [[X * -4, X ** 3 * (4 * a)], [0, 0]],
            [[1, X * X * -a], [0, 0]])
    D4 = op([[8 * (a * a + 2) * ia * ia, -4 * (a * a + 2) * ia], [0, 0]],
            [[X * 16, X * (-16 * (2 * a * a + 1) * ia)], [0, 0]],
            [[X * X * 4, X * X * (-26 * a) + 12 * a + 4 * ia], [4 * ia, -2]],
            [[0, X ** 3 * (-4 * a) + X * (8 * a)], [0, X * -4]],
            [[0, X * X * a], [0, 1]])
    i = I_UNIT
    D5 = op(Mat([[-8 * ia, 12 + 16 * ia * ia], [-16 * ia * ia, 8 * ia]]).scale(i),
            Mat([[X * (-16 * ia), X * 48], [0, X * (16 * ia)]]).scale(i),
            Mat([[-12 * a, X * X * (12 * a * a) + X * X * 24 - 12], [0, 0]]).scale(i),
            Mat([[X * (-8 * a), X ** 3 * (8 * a * a) - X * 8], [0, 0]]).scale(i),
            Mat([[X * X * -a, X ** 4 * (a * a) + 1], [-1, X * X * a]]).scale(i))
    E = {
        1: op([[0, 1], [1, 0]]),
        2: op(Mat.unit(2, 1, 1)),
        3: op(Mat.unit(2, 0, 0)),
        4: op(Mat([[0, i], [-i, 0]])),
    }
    nu = Poly.x()
    a2 = a * a
    lam = {
        1: Mat([[nu * -2, nu * (4 * a) + 2 * a], [0, nu * -2 + 4]]),
        2: Mat([[(nu * 2 + 1) * (8 * ia), (nu * nu * a2 + nu * (2 * a2) - 4) * (nu * nu * a2 - a2 - 4) * (ia * ia)],
                [16 * ia * ia, (nu * 2 + 1) * (-8 * ia)]]),
        3: Mat([[0, (nu * 4 + 2) * (nu * nu * a2 - nu * a2 + 4) * ia],
                [0, (nu * nu * (4 * a2) - nu * (4 * a2) + 16) * (ia * ia)]]),
    }
    lam_center = {
        1: Mat.scalar(2, nu * -4 * (nu * nu * 2 + nu * 3 - 2 + 24 * ia * ia)),
        2: Mat.scalar(2, (nu * nu + nu * 3 + 2 + 4 * ia * ia) * (nu * nu - nu + 4 * ia * ia) * 16),
        3: Mat.scalar(2, nu * mpq(-32, 3) * (nu ** 4 * 3 - nu * nu * 5 + nu * 15 + 2 + nu * nu * (40 * ia * ia)
                                               + 80 * ia * ia + 240 * ia ** 4)),
    }

    def Q(n, Hs):
        h = lambda k: Hs[k] if k >= 0 else Poly.zero()  # noqa: E731
        return Mat([[h(n) * (4 * ia), h(n) * -2 - X * h(n - 1) * (4 * n) + h(n - 2) * (n * (n - 1))],
                    [h(n - 2) * (-n * (n - 1)), h(n) * (4 * ia) + X * X * h(n - 2) * (a * n * (n - 1))]])

    def leading(n):
        return Mat([[4 * ia, -2 - 4 * n], [0, 4 * ia + a * n * (n - 1)]])

    def recurrence(n):
        den = a2 * n * n + a2 * n + 4
        A = Mat([[1, 4 * a / den], [0, (a2 * n * n - a2 * n + 4) / den]])
        C = Mat([[n * (a2 * n * n + 3 * a2 * n + 2 * a2 + 4) / (2 * den), 0], [2 * a * n / den, mpq(n, 2)]])
        return A, C

    return dict(source=w, target=W, V=V, N=N, D=D, T=T, D1=D1, D_list=[D1, D2, D3, D4, D5], E=E,
                lam=lam, lam_center=lam_center, Q=Q, leading=leading, recurrence=recurrence)


def hermite_one_center(inst: dict, a) -> dict:
    """Z_1, Z_2, Z_3 as polynomials in D_1, D_2, D_3.

    Key "Z3_displayed" holds the printed form of Z_3, which carries D_3
    where D_1^3 belongs and a^2 where a^4 belongs; it is not central.
    """
    a = mpq(a)
    ia2 = 1 / (a * a)
    D1, D2, D3 = inst["D_list"][:3]
    Z1 = D1 ** 3 - (D1 ** 2).scale(3) - D1.scale((4 * a * a - 48) * ia2) - D3.scale(12)
    Z2 = D2 ** 2
    head = D1 ** 5 - (D3 ** 2).scale(20) - (D3 * D1).scale(80) - (D1 ** 2).scale(40)
    cubic = 20 * (a * a - 8) * ia2 / 3
    linear = 32 * (a ** 4 + 40 * a * a + 120) / 3
    Z3 = head - (D1 ** 3).scale(cubic) + D1.scale(linear * ia2 * ia2)
    Z3_displayed = head - D3.scale(cubic) + D1.scale(linear * ia2)
    return {1: Z1, 2: Z2, 3: Z3, "Z3_displayed": Z3_displayed}


def hermite_two(a) -> dict:
    a = mpq(a)
    _check_nonzero("a", a)
    ia = 1 / a
    k = Kernel.hermite()
    T = Mat([[1, X * a], [0, 1]])
    W = MatrixWeight(k, Mat([[ONE + X * X * (a * a), X * a], [X * a, 1]]), T=T, name="hermite-II W")
    w = scalar_hermite_weight(2)
    V = op(Mat.scalar(2, -2 * ia), [[0, 1], [1, X * -a]])
    N = op(Mat.diag([-a - 2 * ia, -2 * ia]), [[X * -a, -1], [-1, 0]])
    d = hermite_delta()
    D = from_blocks([[in_delta(d, [2 + 4 * ia * ia, -1]), 0], [0, in_delta(d, [4 * ia * ia, -1])]])
    i = I_UNIT
    D1 = op([[0, 2 + 4 * ia * ia], [4 * ia * ia, 0]],
            [[-2 * a, X * (2 * a * a) + X * 4], [0, 0]],
            [[X * -a, X * X * (a * a) - 1], [-1, X * a]])
    D2 = op([[0, 0], [0, 4 * ia * ia]],
            [[0, 2 * ia], [-2 * ia, X * 2]],
            [[-1, X * a], [0, 0]])
    D3 = op([[2 + 4 * ia * ia, 0], [0, 0]],
            [[X * 2, -2 * a - 2 * ia], [2 * ia, 0]],
            [[0, X * -a], [0, -1]])
    D4 = op(Mat([[0, 2 + 4 * ia * ia], [-4 * ia * ia, 0]]).scale(i),
            Mat([[-2 * a - 4 * ia, X * (2 * a * a) + X * 4], [0, 4 * ia]]).scale(i),
            Mat([[X * -a, X * X * (a * a) + 1], [-1, X * a]]).scale(i))
    D5 = op(Mat.diag([-2 - 4 * ia * ia, -4 * ia * ia]), [[X * -2, 2 * a], [0, X * -2]], Mat.identity(2))
    E = {
        1: op([[0, 1], [1, 0]]),
        2: op(Mat.unit(2, 1, 1)),
        3: op(Mat.unit(2, 0, 0)),
        4: op(Mat([[0, i], [-i, 0]])),
    }

    def Q(n, Hs):
        h1 = Hs[n - 1] if n >= 1 else Poly.zero()
        return Mat([[Hs[n] * (-2 * ia), h1 * n], [h1 * n, Hs[n] * (-2 * ia) - X * h1 * (a * n)]])

    def leading(n):
        return Mat.diag([-2 * ia, -2 * ia - a * n])

    return dict(source=w, target=W, V=V, N=N, D=D, T=T, D_list=[D1, D2, D3, D4, D5], E=E, Q=Q, leading=leading)


def three_by_three(a, b) -> dict:
    a, b = mpq(a), mpq(b)
    _check_nonzero("a", a)
    _check_nonzero("b", b)
    k = Kernel.hermite()
    H = Mat([[X * X * (a * a) + 1, X * a, 0], [X * a, X * X * (b * b) + 1, X * b], [0, X * b, 1]])
    W = MatrixWeight(k, H, name="threebythree W")
    w = scalar_hermite_weight(3)
    a2 = a * a
    V = op([[-2 / a, 0, 0], [-4 / a2, 0, 4 / (a * b)], [0, 8 / (b * a2), 0]],
           [[0, 1, X * -b], [0, 0, 0], [-4 / (a * b), X * (4 / b), -2 * (a2 + 2) / a2]],
           [[0, 0, 0], [1, X * -a, X * X * (a * b)], [0, 0, X * -4]],
           [[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    N = op([[-(a2 + 2) / a, -2 * (a2 + 2) / a2, 0], [0, 0, 4 * (b * b + 2) / (b * a2)], [0, 4 / (a * b), 0]],
           [[X * -a, X * -4, 4 / (a * b)], [-1, 0, X * (4 * b * (a2 + 1) / a2)], [0, 0, 4 / a2]],
           [[0, 1, 0], [0, 0, (X * X * 2 - 3) * b], [0, 0, X * 2]],
           [[0, 0, 0], [0, 0, X * -b], [0, 0, -1]])
    d = hermite_delta()
    c1 = 2 * (a2 + 2) / a2
    c2 = 4 * (a2 + 2) / a ** 3
    c3 = 8 * (a2 * b * b + 2 * (a2 + b * b)) / (a ** 4 * b * b)
    D = from_blocks([
        [in_delta(d, [c1, -1]), in_delta(d, [c2, -2 / a]), 0],
        [in_delta(d, [c2, -2 / a]), in_delta(d, [c3, 0, 1]), 0],
        [0, 0, in_delta(d, [0, -8 * (a2 + 2) / a ** 4, 2 * (a2 + 4) / a2, -1])],
    ])
    E22 = op(Mat.unit(3, 1, 1))
    E21 = op(Mat.unit(3, 1, 0))

    def Q(n, Hs):
        h = Hs[n]
        h1, h2 = h.derivative(), h.derivative(2)
        ab = a * b
        return Mat([[h * (-2 / a), h1, X * h1 * -b],
                    [h2 - h * (4 / ab), X * h2 * -a, X * X * h2 * ab + h * (4 / ab)],
                    [h1 * (-4 / ab), X * h1 * (4 / b) + h * (8 / (b * a2)), X * h2 * -4 - h1 * (2 * (a2 + 2) / a2)]])

    return dict(source=w, target=W, V=V, N=N, D=D, E22=E22, E21=E21, Q=Q)


# ---------------------------------------------------------------------------
# weights without a second-order operator


def beyond_one(a) -> dict:
    a = mpq(a)
    _check_nonzero("a", a)
    k = Kernel.hermite()
    a2 = a * a
    H = Mat([[X ** 4 * (a2 * a2) + X * X * (3 * a2) + 1, X ** 3 * (a2 * a) + X * (2 * a)],
             [X ** 3 * (a2 * a) + X * (2 * a), X * X * a2 + 1]])
    W = MatrixWeight(k, H, name="beyond-1 W")
    w = scalar_hermite_weight(2)
    D4 = op([[4 + 16 / a2, 0], [0, 0]],
            [[X * 12 + X * (16 / a2), -24 * a - 32 / a], [0, X * 4 + X * (16 / a2)]],
            [[12 * a2 + X * X * 4 - 8 / a2, X * (-12 * a2 * a) - X * (24 * a)], [0, X * X * 4 - 12 - 8 / a2]],
            [[X * (4 * a2) - X * 4, X * X * (-4 * a2 * a) + 4 * a], [4 * a, X * (-4 * a2) - X * 4]],
            Mat.identity(2))
    V = op(Mat.scalar(2, -16 / a2 ** 2),
           [[X * (-8 / a2), (12 * a2 + 16) / (a2 * a)], [(12 * a2 + 16) / (a2 * a), X * (-(12 * a2 + 24) / a2)]],
           [[-6, X * (6 * (a2 + 2) / a)], [X * (6 * (a2 + 2) / a), X * X * (-6 * (a2 + 2)) - 6]],
           [[X * -2, X * X * (2 * a) - 4 / a], [X * X * (2 * a) - 4 / a, X ** 3 * (-2 * a2) + X * 2]],
           [[1, X * -a], [X * -a, X * X * a2 + 1]])
    d = hermite_delta()
    t = Poly.x()  # stands for delta
    e1 = (t * a2 - 4) * (t ** 3 * a2 ** 3 - t * t * (6 * (a2 ** 3 + 2 * a2 ** 2)) + t * (8 * (a2 ** 3 + 6 * a2 ** 2 + 6 * a2))
                         - 16 * (3 * a2 ** 2 + 6 * a2 + 4)) * (1 / a2 ** 4)
    e2 = (t ** 3 * a2 ** 3 - t * t * (12 * a2 ** 2) + t * (-4 * a2 ** 3 + 48 * a2) - 64) * (t * a2 - 2 * a2 - 4) * (1 / a2 ** 4)
    D8 = from_blocks([[in_delta(d, poly_coeffs(e1)), 0], [0, in_delta(d, poly_coeffs(e2))]])
    return dict(source=w, target=W, V=V, D=D8, D_low=D4)


def beyond_two(a, b) -> dict:
    a, b = mpq(a), mpq(b)
    _check_nonzero("a", a)
    _check_nonzero("b", b)
    k = Kernel.hermite()
    a2 = a * a
    q = X * X * a + X * b
    H = Mat([[q * q + 1, -q], [-q, 1]])
    W = MatrixWeight(k, H, name="beyond-2 W")
    w = scalar_hermite_weight(2)
    V = op([[-16 / a2, -16 / a], [0, -16 / a2]],
           [[0, -(X * (24 * a) + 8 * b) * (1 / a2)], [-(X * (-8 * a) + 8 * b) * (1 / a2), X * (-(8 * b * b - 12 * a2) / a2)]],
           [[-6, X * X * (-6 * a) - X * (6 * b) + 8 / a], [-8 / a, X * X * 4 - X * (8 * b / a) - 6]],
           [[X * -2, X ** 3 * (-2 * a) - X * X * (2 * b)], [0, X * -6]],
           [[1, q], [0, 1]])
    d = hermite_delta()
    a4 = a2 * a2
    diag1 = [64 * (3 * a2 + 2 * b * b + 4) / a4, 8 * (a4 - 20 * a2 - 8 * b * b) / a4, 4 * (-a2 + 8) / a2, -2, 1]
    off = [128 / a ** 3, 48 * a2 / a ** 3, -24 * a2 / a ** 3]
    diag2 = [256 / a4, 32 * (a2 - 2 * b * b) / a4, 8 * (a2 + 4) / a2, -6, 1]
    D8 = from_blocks([[in_delta(d, diag1), in_delta(d, off)], [in_delta(d, off), in_delta(d, diag2)]])
    D6 = op([[-96 / a2, -48 / a], [0, 0]],
            [[-(X * (48 * a2) - 48 * a * b + X * 96) * (1 / a2), -(X * (72 * a2 * a) - X * (48 * a * b * b) + X * (96 * a) + 96 * b) * (1 / a2)],
             [0, X * (-96 / a2)]],
            [[-(X * X * (48 * a2) - X * (24 * a * b) - 108 * a2 - 48) * (1 / a2),
              -(X * X * (108 * a2) - X * X * (24 * b * b) - X * (72 * a * b) - 72 * a2 + 24) * (1 / a)],
             [-24 / a, -(X * X * (24 * a2) + X * (24 * a * b) - 48) * (1 / a2)]],
            [[X * -4 * (X * X * 2 - 21), X ** 3 * (-24 * a) + X * X * (24 * b) + X * (168 * a) + 24 * b],
             [0, X * -4 * (X * X * 2 - 3)]],
            [[X * X * 12 - 24, X * X * (42 * a) + X * (12 * b) - 30 * a], [0, X * X * 12 - 6]],
            [[X * -6, X * (-12 * a) - 6 * b], [0, X * -6]],
            Mat.identity(2))
    return dict(source=w, target=W, V=V, D=D8, D_low=D6)


def hermite_three_stub() -> dict:
    """Mixed kernels e^{-x^2+2bx} and e^{-x^2} on the diagonal: not representable."""
    return dict(reason="diagonal entries carry different exponential kernels; a weight here has a single kernel")
