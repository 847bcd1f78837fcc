"""Matrix differential operators acting on the right.

An operator ``D = sum_j d^j F_j(x)`` acts on a matrix function ``P`` by
``P . D = sum_j P^(j)(x) F_j(x)``.  Products are read in the same
direction: ``compose(A, B)`` (also ``A * B``) applies ``A`` first, so
``P . (A*B) = (P . A) . B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .algebra import (
    DEG_ZERO,
    CMat,
    GaussianRational,
    Mat,
    Poly,
    RatFun,
    falling_factorial,
    gq,
    nonnegative_integer_roots,
)

__all__ = [
    "MatDiffOp",
    "apply",
    "compose",
    "formal_adjoint",
    "degree_preserving_test",
    "DegreePreserving",
    "leading_symbol",
]


def _as_mat(n: int, F) -> Mat:
    if isinstance(F, Mat):
        return F
    if isinstance(F, CMat):
        return Mat.from_const(F)
    if isinstance(F, (list, tuple)):
        return Mat(F)
    return Mat.scalar(n, F)


class MatDiffOp:
    """``sum_j d^j F_j`` with N x N rational-function coefficients.

    Trailing zero coefficients are dropped, so ``order`` is the true order;
    the zero operator has no coefficients and order ``DEG_ZERO``.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence = ()):
        cs = [_as_mat(n, F) for F in coeffs]
        for F in cs:
            if F.n != n:
                raise ValueError(f"coefficient of size {F.n} in an operator of size {n}")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.n = n
        self.coeffs = tuple(cs)

    # constructors
    @classmethod
    def zero(cls, n: int) -> "MatDiffOp":
        return cls(n, [])

    @classmethod
    def identity(cls, n: int) -> "MatDiffOp":
        return cls(n, [Mat.identity(n)])

    @classmethod
    def multiplication(cls, M) -> "MatDiffOp":
        M = M if isinstance(M, Mat) else Mat.from_const(M)
        return cls(M.n, [M])

    @classmethod
    def d(cls, n: int = 1) -> "MatDiffOp":
        """The operator d/dx times the identity."""
        return cls(n, [Mat.zeros(n), Mat.identity(n)])

    @classmethod
    def from_terms(cls, n: int, terms: dict) -> "MatDiffOp":
        """Build from ``{j: F_j}``."""
        if not terms:
            return cls.zero(n)
        top = max(terms)
        return cls(n, [terms.get(j, Mat.zeros(n)) for j in range(top + 1)])

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["MatDiffOp"]]) -> "MatDiffOp":
        """Assemble an N x N operator from scalar (1 x 1) operator entries."""
        n = len(blocks)
        top = max((b.order for row in blocks for b in row if not b.is_zero()), default=-1)
        coeffs = []
        zero = RatFun(Poly.zero())
        for j in range(int(top) + 1):
            rows = []
            for row in blocks:
                rows.append([b.coeffs[j][0, 0] if j < len(b.coeffs) else zero for b in row])
            coeffs.append(Mat._raw(rows))
        return cls(n, coeffs)

    # inspection
    @property
    def order(self):
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> Mat:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Mat.zeros(self.n)

    def leading_coefficient(self) -> Mat:
        return self.coeffs[-1] if self.coeffs else Mat.zeros(self.n)

    @property
    def is_polynomial(self) -> bool:
        return all(F.is_polynomial() for F in self.coeffs)

    def has_eigen_shape(self) -> bool:
        """Polynomial with deg F_j <= j for every j."""
        return self.first_shape_violation() is None

    def first_shape_violation(self):
        for j, F in enumerate(self.coeffs):
            if not F.is_polynomial() or F.degree() > j:
                return j
        return None

    def __eq__(self, other):
        if isinstance(other, MatDiffOp):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"MatDiffOp({self.pretty()})"

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            F = self.coeffs[j]
            if F.is_zero():
                continue
            prefix = "" if j == 0 else ("d*" if j == 1 else f"d^{j}*")
            parts.append(prefix + F.pretty())
        return " + ".join(parts)

    # linear structure
    def __add__(self, other: "MatDiffOp") -> "MatDiffOp":
        _check_sizes(self, other)
        m = max(len(self.coeffs), len(other.coeffs))
        return MatDiffOp(self.n, [self.coeff(j) + other.coeff(j) for j in range(m)])

    def __sub__(self, other: "MatDiffOp") -> "MatDiffOp":
        return self + (-other)

    def __neg__(self) -> "MatDiffOp":
        return MatDiffOp(self.n, [-F for F in self.coeffs])

    def scale(self, c) -> "MatDiffOp":
        return MatDiffOp(self.n, [F.scale(c) for F in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, MatDiffOp):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int) -> "MatDiffOp":
        out = MatDiffOp.identity(self.n)
        for _ in range(k):
            out = compose(out, self)
        return out

    def right_mul(self, M: Mat) -> "MatDiffOp":
        """The operator ``self`` followed by multiplication by M."""
        return MatDiffOp(self.n, [F * M for F in self.coeffs])

    def apply(self, P: Mat) -> Mat:
        return apply(P, self)

    def adjoint(self) -> "MatDiffOp":
        return formal_adjoint(self)

    def conj(self) -> "MatDiffOp":
        """Entrywise complex conjugation of all coefficients (no transpose)."""
        return MatDiffOp(self.n, [Mat._raw([[c.conj() for c in r] for r in F.rows]) for F in self.coeffs])


def _check_sizes(a: MatDiffOp, b: MatDiffOp):
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")


def apply(P: Mat, D: MatDiffOp) -> Mat:
    """``P . D = sum_j P^(j) F_j``."""
    if P.n != D.n:
        raise ValueError(f"size mismatch: polynomial {P.n}, operator {D.n}")
    out = Mat.zeros(D.n)
    deriv = P
    for j, F in enumerate(D.coeffs):
        if j:
            deriv = deriv.derivative()
            if deriv.is_zero():
                break
        if not F.is_zero():
            out = out + deriv * F
    return out


def _derivatives(F: Mat, upto: int) -> list:
    out = [F]
    for _ in range(upto):
        out.append(out[-1].derivative())
    return out


def compose(A: MatDiffOp, B: MatDiffOp) -> MatDiffOp:
    """The operator applying A first, then B.

    Uses ``(d^i F)(d^j G) = sum_k C(j,k) d^(i+k) F^(j-k) G``.
    """
    _check_sizes(A, B)
    if A.is_zero() or B.is_zero():
        return MatDiffOp.zero(A.n)
    n = A.n
    top = A.order + B.order
    acc = [Mat.zeros(n) for _ in range(top + 1)]
    for i, F in enumerate(A.coeffs):
        if F.is_zero():
            continue
        dF = _derivatives(F, B.order)
        for j, G in enumerate(B.coeffs):
            if G.is_zero():
                continue
            for k in range(j + 1):
                D = dF[j - k]
                if D.is_zero():
                    continue
                acc[i + k] = acc[i + k] + (D * G).scale(comb(j, k))
    return MatDiffOp(n, acc)


def formal_adjoint(D: MatDiffOp) -> MatDiffOp:
    """The involution extending conjugate transpose with d -> -d.

    ``(d^j F)^* = F^* (-d)^j``; the multiply-then-differentiate operator
    ``F^* d^j`` is brought to standard form by the Leibniz rule.
    """
    n = D.n
    if D.is_zero():
        return D
    acc = [Mat.zeros(n) for _ in range(D.order + 1)]
    for j, F in enumerate(D.coeffs):
        if F.is_zero():
            continue
        sign = -1 if j % 2 else 1
        dF = _derivatives(F.H(), j)
        for k in range(j + 1):
            if not dF[j - k].is_zero():
                acc[k] = acc[k] + dF[j - k].scale(sign * comb(j, k))
    return MatDiffOp(n, acc)


def leading_symbol(V: MatDiffOp) -> Mat:
    """L(nu) = sum_j [nu]_j (x^j-coefficient of F_j), entries polynomial in nu.

    For any P with leading term x^n C, the x^n coefficient of P . V is
    C L(n), provided deg F_j <= j.
    """
    n = V.n
    nu = Poly.x()
    out = Mat.zeros(n)
    for j, F in enumerate(V.coeffs):
        top = Mat.from_const(F.coeff(j))
        out = out + top.scale(RatFun(falling_factorial(nu, j)))
    return out


@dataclass(frozen=True)
class DegreePreserving:
    ok: bool
    witness: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def degree_preserving_test(V: MatDiffOp) -> DegreePreserving:
    """Decide whether deg(P . V) = deg(P) for every matrix polynomial P.

    True iff deg F_j <= j for all j and det L(n) != 0 for all integers
    n >= 0; on failure the witness is the offending index j or the
    smallest n with L(n) singular.
    """
    bad = V.first_shape_violation()
    if bad is not None:
        return DegreePreserving(False, bad, f"deg F_{bad} > {bad} or non-polynomial")
    if V.is_zero():
        return DegreePreserving(False, 0, "zero operator")
    det = leading_symbol(V).det().as_poly()
    roots = nonnegative_integer_roots(det)
    if roots:
        return DegreePreserving(False, min(roots), "leading symbol singular")
    return DegreePreserving(True)


def scalar_op(*coeffs) -> MatDiffOp:
    """1 x 1 operator from coefficients given lowest order first."""
    return MatDiffOp(1, [Mat([[c]]) for c in coeffs])


def poly_in(op: MatDiffOp, coeffs: Sequence) -> MatDiffOp:
    """sum_k coeffs[k] op^k (Horner, composition as product)."""
    out = MatDiffOp.zero(op.n)
    for c in reversed(list(coeffs)):
        out = compose(out, op) + MatDiffOp.identity(op.n).scale(c)
    return out
