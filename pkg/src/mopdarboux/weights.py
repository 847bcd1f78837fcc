"""Matrix weights W(x) = s(x) H(x) over a classical scalar kernel s.

All integrals are carried out through the kernel's normalized moments
m_k = (integral of x^k s) / unit, so every quantity stays in Q(i); the
common unit constant cancels from orthogonality and adjointness
statements.  Derivatives of s(x) M(x) are taken in the kernel frame,
``(s M)' = s (l M + M')`` with ``l = s'/s`` rational.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from math import comb

from gmpy2 import mpq

from .algebra import (
    CMat,
    GaussianRational,
    Mat,
    Poly,
    RatFun,
    SingularMatrixError,
    gq,
    parse_rational,
)
from .diffop import MatDiffOp, formal_adjoint

__all__ = [
    "Kernel",
    "MatrixWeight",
    "MomentTable",
    "WeightError",
    "kernel_moment",
    "inner_product",
    "w_adjoint",
    "twisted_adjoint",
    "twisted_derivative",
    "formal_symmetry_test",
    "symmetry_equations_hold",
    "boundary_check",
]

FAMILIES = ("hermite", "laguerre", "jacobi")


class WeightError(ValueError):
    """Invalid weight data (domain, Hermitian or positivity violations)."""


def _q(x) -> mpq:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, GaussianRational):
        if x.im:
            raise WeightError("kernel parameters must be real")
        return x.re
    return mpq(x)


@dataclass(frozen=True)
class Kernel:
    """Classical scalar density: Hermite e^{-x^2}, Laguerre x^a e^{-x},
    Jacobi (1-x)^a (1+x)^b."""

    family: str
    alpha: mpq = mpq(0)
    beta: mpq = mpq(0)

    def __post_init__(self):
        fam = self.family.lower()
        if fam not in FAMILIES:
            raise WeightError(f"unknown kernel family {self.family!r}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "alpha", _q(self.alpha))
        object.__setattr__(self, "beta", _q(self.beta))
        if fam == "hermite":
            object.__setattr__(self, "alpha", mpq(0))
            object.__setattr__(self, "beta", mpq(0))
        if fam in ("laguerre", "jacobi") and self.alpha <= -1:
            raise WeightError(f"alpha = {self.alpha} must exceed -1")
        if fam == "jacobi" and self.beta <= -1:
            raise WeightError(f"beta = {self.beta} must exceed -1")
        if fam == "laguerre":
            object.__setattr__(self, "beta", mpq(0))

    @classmethod
    def hermite(cls) -> "Kernel":
        return cls("hermite")

    @classmethod
    def laguerre(cls, alpha) -> "Kernel":
        return cls("laguerre", _q(alpha))

    @classmethod
    def jacobi(cls, alpha, beta) -> "Kernel":
        return cls("jacobi", _q(alpha), _q(beta))

    @property
    def support(self) -> tuple:
        return {
            "hermite": (-math.inf, math.inf),
            "laguerre": (0, math.inf),
            "jacobi": (-1, 1),
        }[self.family]

    @property
    def unit(self) -> str:
        return {
            "hermite": "sqrt(pi)",
            "laguerre": f"Gamma({self.alpha}+1)",
            "jacobi": f"2^({self.alpha}+{self.beta}+1)*B({self.alpha}+1,{self.beta}+1)",
        }[self.family]

    @property
    def logderiv(self) -> RatFun:
        """s'(x)/s(x)."""
        x = Poly.x()
        if self.family == "hermite":
            return RatFun(x * -2)
        if self.family == "laguerre":
            return RatFun(Poly.const(self.alpha) - x, x)
        one = Poly.one()
        return RatFun(
            (one + x) * (-self.alpha) + (one - x) * self.beta,
            one - x * x,
        )

    def moment(self, k: int) -> mpq:
        return kernel_moment(self, k)

    def sample_points(self) -> list:
        """Five rational points interior to the support."""
        if self.family == "hermite":
            return [mpq(-3, 2), mpq(-1, 2), mpq(1, 3), mpq(1), mpq(2)]
        if self.family == "laguerre":
            return [mpq(1, 3), mpq(1, 2), mpq(1), mpq(2), mpq(7, 2)]
        return [mpq(-2, 3), mpq(-1, 3), mpq(0), mpq(1, 4), mpq(3, 5)]

    def endpoint_exponents(self) -> list:
        """(finite endpoint, exponent of the kernel there)."""
        if self.family == "laguerre":
            return [(mpq(0), self.alpha)]
        if self.family == "jacobi":
            return [(mpq(1), self.alpha), (mpq(-1), self.beta)]
        return []

    def to_json(self) -> dict:
        out = {"family": self.family}
        if self.family in ("laguerre", "jacobi"):
            out["alpha"] = _fmt(self.alpha)
        if self.family == "jacobi":
            out["beta"] = _fmt(self.beta)
        return out


def _fmt(r: mpq) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


_moment_lock = threading.Lock()
_moment_cache: dict = {}


def kernel_moment(kernel: Kernel, k: int) -> mpq:
    """m_k with integral of x^k s(x) dx = m_k * unit."""
    if k < 0:
        raise ValueError("moment index must be nonnegative")
    key = (kernel.family, kernel.alpha, kernel.beta)
    with _moment_lock:
        seq = _moment_cache.get(key)
        if seq is not None and k < len(seq):
            return seq[k]
    seq = _moments_upto(kernel, k)
    with _moment_lock:
        old = _moment_cache.get(key)
        if old is None or len(old) < len(seq):
            _moment_cache[key] = seq
    return seq[k]


def _moments_upto(kernel: Kernel, K: int) -> list:
    fam, a, b = kernel.family, kernel.alpha, kernel.beta
    out = []
    if fam == "hermite":
        for k in range(K + 1):
            if k == 0:
                out.append(mpq(1))
            elif k % 2:
                out.append(mpq(0))
            else:
                out.append(out[k - 2] * mpq(k - 1, 2))
    elif fam == "laguerre":
        m = mpq(1)
        for k in range(K + 1):
            if k:
                m = m * (a + k)
            out.append(m)
    else:
        # x = 2t - 1 turns the integral into Beta values
        ratios = [mpq(1)]
        for i in range(1, K + 1):
            ratios.append(ratios[-1] * (b + i) / (a + b + i + 1))
        for k in range(K + 1):
            s = mpq(0)
            for i in range(k + 1):
                term = comb(k, i) * (2**i) * ratios[i]
                s += term if (k - i) % 2 == 0 else -term
            out.append(s)
    return out


class MomentTable:
    """Scalar moments m_0..m_K and matrix moments of a weight."""

    def __init__(self, weight: "MatrixWeight", K: int):
        self.weight = weight
        self.K = K
        self.values = [kernel_moment(weight.kernel, k) for k in range(K + weight.hdeg + 1)]
        hc = weight.H_coeffs
        n = weight.n
        mats = []
        for m in range(K + 1):
            rows = [[GaussianRational(0) for _ in range(n)] for _ in range(n)]
            for j, Hj in enumerate(hc):
                mv = self.values[m + j]
                if not mv:
                    continue
                for p in range(n):
                    for q in range(n):
                        c = Hj.rows[p][q]
                        if c:
                            rows[p][q] = rows[p][q] + c * mv
            mats.append(CMat._raw(rows))
        self.matrix = mats


@dataclass(frozen=True, eq=False)
class MatrixWeight:
    """W(x) = s(x) H(x): a kernel times a Hermitian polynomial matrix.

    ``T`` optionally records a factorization H = T diag(h) T^*.
    """

    kernel: Kernel
    H: Mat
    T: Mat | None = None
    name: str = ""
    validate: bool = True
    _cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        if not self.H.is_polynomial():
            raise WeightError("H must be a polynomial matrix")
        if self.validate:
            self.check()

    def __eq__(self, other):
        if not isinstance(other, MatrixWeight):
            return NotImplemented
        return self.kernel == other.kernel and self.H == other.H

    def __hash__(self):
        return hash((self.kernel, self.H))

    @property
    def n(self) -> int:
        return self.H.n

    @property
    def hdeg(self) -> int:
        d = self.H.degree()
        return int(d) if d != float("-inf") else 0

    @property
    def H_coeffs(self) -> list:
        return self.H.coeff_list()

    def check(self):
        """Raise WeightError unless the weight satisfies its invariants."""
        for k, C in enumerate(self.H_coeffs):
            if not C.is_hermitian():
                raise WeightError(f"coefficient of x^{k} in H is not Hermitian")
        if self.H.det().is_zero():
            raise WeightError("det H vanishes identically")
        for x0 in self.kernel.sample_points():
            if not self.H.evaluate(x0).is_positive_definite():
                raise WeightError(f"H is not positive definite at x = {_fmt(x0)}")
        for x0, expo in self.kernel.endpoint_exponents():
            for c in self.H.entries():
                if c and expo + c.order_at(x0) <= -1:
                    raise WeightError(f"entry {c} is not integrable at x = {_fmt(x0)}")

    @property
    def H_inverse(self) -> Mat:
        with self._lock:
            inv = self._cache.get("Hinv")
        if inv is None:
            try:
                inv = self.H.inverse()
            except SingularMatrixError as exc:
                raise WeightError("H is singular") from exc
            with self._lock:
                self._cache["Hinv"] = inv
        return inv

    def moments(self, K: int) -> MomentTable:
        """Moment table up to total degree K (shared, lock protected)."""
        with self._lock:
            tab = self._cache.get("moments")
            if tab is not None and tab.K >= K:
                return tab
        tab = MomentTable(self, K)
        with self._lock:
            old = self._cache.get("moments")
            if old is None or old.K < tab.K:
                self._cache["moments"] = tab
        return tab

    def to_json(self) -> dict:
        from .serialize import mat_to_json

        out = {"size": self.n, "kernel": self.kernel.to_json(), "H": mat_to_json(self.H)}
        if self.T is not None:
            out["T"] = mat_to_json(self.T)
        return out


def inner_product(P: Mat, Q: Mat, W: MatrixWeight) -> CMat:
    """<P, Q>_W = integral of P W Q^*, in units of the kernel constant."""
    if P.n != W.n or Q.n != W.n:
        raise ValueError("size mismatch in inner product")
    pc = P.coeff_list()
    qc = [C.H() for C in Q.coeff_list()]
    if not pc or not qc:
        return CMat.zeros(W.n)
    tab = W.moments(len(pc) + len(qc) - 2)
    acc = CMat.zeros(W.n)
    for i, Pi in enumerate(pc):
        if Pi.is_zero():
            continue
        left = None
        for k, Qk in enumerate(qc):
            if Qk.is_zero():
                continue
            term = tab.matrix[i + k] * Qk
            left = term if left is None else left + term
        if left is not None:
            acc = acc + Pi * left
    return acc


def twisted_derivative(M: Mat, logderiv: RatFun) -> Mat:
    """T(M) = l M + M', so that (s M)' = s T(M)."""
    return M.scale(logderiv) + M.derivative()


def twisted_adjoint(D: MatDiffOp, H_left: Mat, H_right_inv: Mat, logderiv: RatFun) -> MatDiffOp:
    """(s H_left) D^* (s H_right)^{-1} as a rational-coefficient operator.

    G_k = sum_j (-1)^j C(j,k) T^(j-k)(H_left F_j^*) H_right^{-1}.
    """
    n = D.n
    if D.is_zero():
        return D
    acc = [Mat.zeros(n) for _ in range(D.order + 1)]
    for j, F in enumerate(D.coeffs):
        if F.is_zero():
            continue
        sign = -1 if j % 2 else 1
        chain = [H_left * F.H()]
        for _ in range(j):
            chain.append(twisted_derivative(chain[-1], logderiv))
        for k in range(j + 1):
            M = chain[j - k]
            if not M.is_zero():
                acc[k] = acc[k] + M.scale(sign * comb(j, k))
    return MatDiffOp(n, [G * H_right_inv for G in acc])


def w_adjoint(D: MatDiffOp, W: MatrixWeight) -> MatDiffOp:
    """D^dagger = W D^* W^{-1}."""
    return twisted_adjoint(D, W.H, W.H_inverse, W.kernel.logderiv)


def symmetry_equations_hold(D: MatDiffOp, W: MatrixWeight) -> bool:
    """Check sum_j (-1)^(n-j) C(n-j,k) (F_(n-j) W)^(n-k-j) = W F_k^* for all k."""
    n = D.order
    if D.is_zero():
        return True
    ld = W.kernel.logderiv
    chains = {}
    for i, F in enumerate(D.coeffs):
        c = [F * W.H]
        for _ in range(i):
            c.append(twisted_derivative(c[-1], ld))
        chains[i] = c
    for k in range(n + 1):
        lhs = Mat.zeros(W.n)
        for j in range(n - k + 1):
            i = n - j
            coef = (-1) ** i * comb(i, k)
            lhs = lhs + chains[i][n - k - j].scale(coef)
        if lhs != W.H * D.coeff(k).H():
            return False
    return True


def formal_symmetry_test(D: MatDiffOp, W: MatrixWeight) -> bool:
    """True iff D^dagger = D.

    The adjoint route and the symmetry-equation route are computed
    independently and must agree; a disagreement is a bug and raises.
    """
    via_adjoint = w_adjoint(D, W) == D
    via_equations = symmetry_equations_hold(D, W)
    if via_adjoint != via_equations:
        raise AssertionError("W-adjoint and symmetry equations disagree")
    if D.order == 2 and via_adjoint:
        F0, F1, F2 = D.coeffs
        H, ld = W.H, W.kernel.logderiv
        T = lambda M: twisted_derivative(M, ld)  # noqa: E731
        ok = (
            F2 * H == H * F2.H()
            and T(F2 * H).scale(2) - F1 * H == H * F1.H()
            and T(T(F2 * H)) - T(F1 * H) + F0 * H == H * F0.H()
        )
        if not ok:
            raise AssertionError("second-order symmetry equations disagree with D^dagger = D")
    return via_adjoint


def _vanishes_at_endpoints(entry: RatFun, kernel: Kernel) -> bool:
    if not entry:
        return True
    for x0, expo in kernel.endpoint_exponents():
        if expo + entry.order_at(x0) <= 0:
            return False
    # infinite endpoints: exponential decay beats rational growth
    return True


def boundary_check(D: MatDiffOp, W: MatrixWeight) -> bool:
    """Vanishing of the integration-by-parts boundary sums at the endpoints.

    For 1 <= p <= n and 0 <= k <= n - p the sum
    sum_{j<p} (-1)^(n-j+p-1) C(n-j,k) (F_(n-j) W)^(p-1-j)
    is s(x) times a rational matrix; each entry must tend to 0 at every
    endpoint of the support.
    """
    if not D.is_polynomial:
        raise ValueError("boundary_check expects polynomial coefficients")
    n = D.order
    if D.is_zero() or n == 0:
        return True
    ld = W.kernel.logderiv
    chains = {}
    for i, F in enumerate(D.coeffs):
        c = [F * W.H]
        for _ in range(i):
            c.append(twisted_derivative(c[-1], ld))
        chains[i] = c
    for p in range(1, n + 1):
        for k in range(0, n - p + 1):
            acc = Mat.zeros(W.n)
            for j in range(p):
                i = n - j
                coef = (-1) ** (n - j + p - 1) * comb(i, k)
                if coef:
                    acc = acc + chains[i][p - 1 - j].scale(coef)
            if not all(_vanishes_at_endpoints(e, W.kernel) for e in acc.entries()):
                return False
    return True
