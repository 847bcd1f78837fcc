"""Hypothesis strategies for small exact objects."""

from gmpy2 import mpq
from hypothesis import strategies as st

from mopdarboux.algebra import GaussianRational, Mat, Poly
from mopdarboux.diffop import MatDiffOp
from mopdarboux.weights import Kernel, MatrixWeight

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def rationals(draw, max_num=6, max_den=4):
    p = draw(st.integers(min_value=-max_num, max_value=max_num))
    q = draw(st.integers(min_value=1, max_value=max_den))
    return mpq(p, q)


@st.composite
def gaussians(draw, real=False):
    re = draw(rationals())
    im = mpq(0) if real else draw(st.one_of(st.just(mpq(0)), rationals()))
    return GaussianRational(re, im)


def polys(max_degree=3, real=False):
    return st.lists(gaussians(real=real), max_size=max_degree + 1).map(Poly)


def nonzero_polys(max_degree=3, real=False):
    return polys(max_degree, real).filter(lambda p: not p.is_zero())


@st.composite
def matrices(draw, n, max_degree=2, real=False):
    return Mat([[draw(polys(max_degree, real)) for _ in range(n)] for _ in range(n)])


@st.composite
def eigen_shaped_ops(draw, n, max_order=2, real=False):
    """Operators with polynomial coefficients, deg F_j <= j."""
    order = draw(st.integers(min_value=0, max_value=max_order))
    coeffs = [draw(matrices(n, max_degree=j, real=real)) for j in range(order + 1)]
    return MatDiffOp(n, coeffs)


@st.composite
def polynomial_ops(draw, n, max_order=2, max_degree=2, real=False):
    order = draw(st.integers(min_value=0, max_value=max_order))
    return MatDiffOp(n, [draw(matrices(n, max_degree, real)) for _ in range(order + 1)])


@st.composite
def kernels(draw):
    family = draw(st.sampled_from(["hermite", "laguerre", "jacobi"]))
    if family == "hermite":
        return Kernel.hermite()
    params = st.sampled_from([mpq(-1, 2), mpq(0), mpq(1, 2), mpq(1), mpq(3, 2), mpq(2)])
    if family == "laguerre":
        return Kernel.laguerre(draw(params))
    return Kernel.jacobi(draw(params), draw(params))


@st.composite
def weights(draw, n=2):
    """s(x) T(x) T(x)^* with T unit upper triangular, so H is positive definite."""
    kernel = draw(kernels())
    rows = []
    for p in range(n):
        row = []
        for q in range(n):
            if q < p:
                row.append(Poly())
            elif q == p:
                row.append(Poly([1]))
            else:
                row.append(draw(polys(1, real=draw(st.booleans()))))
        rows.append(row)
    T = Mat(rows)
    return MatrixWeight(kernel, T * T.H(), name="random")
