"""The algebra D(W) of operators having the monic sequence as eigenfunctions.

Eigenvalues are carried as matrices of polynomials in a formal variable
nu, Lambda(nu) = sum_i [nu]_i F_i^i, so identities "for all n" between
members of D(W) are decided exactly via the separation property.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .algebra import (
    CMat,
    GaussianRational,
    Mat,
    Poly,
    RowReducer,
    falling_factorial,
    gq,
)
from .diffop import MatDiffOp, leading_symbol
from .mop import MOPTable, monic_sequence
from .weights import MatrixWeight, w_adjoint

__all__ = [
    "eigenvalue_poly",
    "eval_eigen",
    "membership_test",
    "operator_equal_by_separation",
    "SolveResult",
    "solve_bounded_order",
    "commutation_check",
    "center_candidate_check",
    "NotInAlgebra",
    "real_span_dimension",
]


class NotInAlgebra(ValueError):
    """An operator expected in D(W) failed the membership test."""


def eigenvalue_poly(D: MatDiffOp) -> Mat:
    """Lambda(nu) as an N x N matrix of polynomials in nu."""
    bad = D.first_shape_violation()
    if bad is not None:
        raise ValueError(f"deg F_{bad} exceeds {bad}; no eigenvalue polynomial")
    return leading_symbol(D)


def eval_eigen(L: Mat, n: int) -> CMat:
    """Concrete eigenvalue Lambda_n from Lambda(nu)."""
    return L.evaluate(n)


def _table(W: MatrixWeight, K: int, table: MOPTable | None) -> MOPTable:
    if table is not None and table.K >= K:
        return table
    return monic_sequence(W, K, start=table)


def membership_test(D: MatDiffOp, W: MatrixWeight, n_check: int = 12, table: MOPTable | None = None) -> bool:
    """P_n . D == Lambda(n) P_n exactly for n = 0..n_check."""
    if D.n != W.n:
        raise ValueError("size mismatch")
    if not D.has_eigen_shape():
        return False
    L = eigenvalue_poly(D)
    tab = _table(W, n_check, table)
    for n in range(n_check + 1):
        P = tab.polys[n]
        if D.apply(P) != Mat.from_const(L.evaluate(n)) * P:
            return False
    return True


def operator_equal_by_separation(D1: MatDiffOp, D2: MatDiffOp, W: MatrixWeight | None = None,
                                 n_check: int = 12, table: MOPTable | None = None) -> bool:
    """Equality of members of D(W) through Lambda(nu).

    When W is given both operators are first certified members; otherwise
    membership is the caller's responsibility.
    """
    if W is not None:
        tab = _table(W, n_check, table)
        for D in (D1, D2):
            if not membership_test(D, W, n_check, tab):
                raise NotInAlgebra("operand is not in D(W)")
    return eigenvalue_poly(D1) == eigenvalue_poly(D2)


def commutation_check(D1: MatDiffOp, D2: MatDiffOp) -> bool:
    """D1 D2 = D2 D1 for members of D(W), decided on eigenvalues."""
    L1, L2 = eigenvalue_poly(D1), eigenvalue_poly(D2)
    return L1 * L2 == L2 * L1


def center_candidate_check(Z: MatDiffOp, generators: Sequence[MatDiffOp]) -> bool:
    return all(commutation_check(Z, G) for G in generators)


# ---------------------------------------------------------------------------
# bounded-order solver


@dataclass
class SolveResult:
    m: int
    basis: list
    trace: list  # (K, dimension) pairs
    K: int
    n_check: int
    symmetric_basis: list = field(default_factory=list)
    unknowns: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        from .serialize import op_to_json

        return {
            "max_order": self.m,
            "dimension": self.dimension,
            "orders": [int(b.order) for b in self.basis],
            "basis": [op_to_json(b) for b in self.basis],
            "symmetric_dimension": len(self.symmetric_basis),
            "symmetric_basis": [op_to_json(b) for b in self.symmetric_basis],
            "stabilization": [{"K": k, "dimension": d} for k, d in self.trace],
            "K": self.K,
            "membership_checked_to": self.n_check,
        }


def _unknown_layout(N: int, m: int) -> list:
    """Unknown (i, j, p, q) is the x^j coefficient of entry (p, q) of F_i.

    Highest order first, so the echelon pivots of a basis element sit on
    its leading coefficient.
    """
    out = []
    for i in range(m, -1, -1):
        for j in range(i, -1, -1):
            for p in range(N):
                for q in range(N):
                    out.append((i, j, p, q))
    return out


def _residual_rows(P: Mat, n: int, layout: list, N: int) -> list:
    """Linear equations of P_n . D - Lambda(n) P_n = 0 over the unknowns."""
    pc = [[P[r, c].num for c in range(N)] for r in range(N)]
    derivs = {}
    maxi = max(u[0] for u in layout)
    for i in range(maxi + 1):
        derivs[i] = [[pc[r][c].derivative(i) for c in range(N)] for r in range(N)]
    ncols = len(layout)
    # row index: (r, c, d) for entry (r, c), power x^d, d <= n
    nrows = N * N * (n + 1)
    rows = [[0] * ncols for _ in range(nrows)]

    def rix(r, c, d):
        return (r * N + c) * (n + 1) + d

    for u, (i, j, p, q) in enumerate(layout):
        # P^(i) x^j E_pq: column q receives column p of P^(i) shifted by x^j
        for r in range(N):
            poly = derivs[i][r][p]
            for d, coef in enumerate(poly.coeffs):
                if coef and d + j <= n:
                    rows[rix(r, q, d + j)][u] += coef
        if j == i:
            ff = falling_factorial(n, i)
            if ff:
                # -[n]_i E_pq P: row p receives row q of P
                for c in range(N):
                    poly = pc[q][c]
                    for d, coef in enumerate(poly.coeffs):
                        if coef:
                            rows[rix(p, c, d)][u] -= coef * ff
    return rows


def _to_field(row, real: bool):
    if real:
        return [c.re if isinstance(c, GaussianRational) else mpq(c) for c in row]
    return [gq(c) for c in row]


def _vector_to_op(vec, layout: list, N: int, m: int) -> MatDiffOp:
    coeff_entries = {i: [[Poly.zero()] * N for _ in range(N)] for i in range(m + 1)}
    for c, (i, j, p, q) in zip(vec, layout):
        if c:
            coeff_entries[i][p][q] = coeff_entries[i][p][q] + Poly.monomial(j, c)
    return MatDiffOp(N, [Mat(coeff_entries[i]) for i in range(m + 1)])


def _op_to_vector(D: MatDiffOp, layout: list):
    out = []
    for (i, j, p, q) in layout:
        F = D.coeff(i)
        out.append(F[p, q].as_poly().coeff(j))
    return out


def solve_bounded_order(W: MatrixWeight, m: int, K: int | None = None,
                        table: MOPTable | None = None, symmetric: bool = True) -> SolveResult:
    """Upper-bound space for D(W) restricted to order <= m.

    Equations P_n . D = Lambda(n) P_n for n = 0..K are linear in the
    coefficients of D.  K grows in steps of two until the nullity has
    been stable for two consecutive steps.  The basis is returned in
    reduced row echelon form (highest order unknowns first) and every
    element is re-checked by membership_test at K + 4.
    """
    if m < 0:
        raise ValueError("order bound must be nonnegative")
    N = W.n
    layout = _unknown_layout(N, m)
    ncols = len(layout)
    K = 2 * m + 2 if K is None else K
    tab = _table(W, K + 8, table)
    real = W.H.is_real()
    red = RowReducer(ncols, real=real)
    trace = []
    done = -1

    def feed(upto):
        nonlocal done, tab
        if tab.K < upto:
            tab = _table(W, upto + 4, tab)
        for n in range(done + 1, upto + 1):
            for row in _residual_rows(tab.polys[n], n, layout, N):
                if any(row):
                    red.add_row(_to_field(row, real))
        done = max(done, upto)
        return ncols - red.rank

    trace.append((K, feed(K)))
    while len(trace) < 3 or not (trace[-1][1] == trace[-2][1] == trace[-3][1]):
        K += 2
        trace.append((K, feed(K)))
    null = red.nullspace()
    # canonical basis: reduced echelon form of the nullspace vectors
    echelon = RowReducer(ncols, real=real)
    for v in null:
        echelon.add_row(v)
    vecs = echelon.rref()
    if real:
        vecs = [[GaussianRational(c, 0) for c in v] for v in vecs]
    basis = [_vector_to_op(v, layout, N, m) for v in vecs]
    n_check = K + 4
    tab = _table(W, n_check, tab)
    for B in basis:
        if not membership_test(B, W, n_check, tab):
            raise NotInAlgebra("solver basis element failed the membership re-check")
    result = SolveResult(m=m, basis=basis, trace=trace, K=K, n_check=n_check, unknowns=layout)
    if symmetric:
        result.symmetric_basis = symmetric_sub_basis(basis, W, layout)
    return result


def symmetric_sub_basis(basis: Sequence[MatDiffOp], W: MatrixWeight, layout: list | None = None) -> list:
    """Real basis of {D in span(basis) : D^dagger = D}.

    With D = sum (u_i + i v_i) B_i, D - D^dagger =
    sum u_i (B_i - B_i^dagger) + v_i i (B_i + B_i^dagger); real and
    imaginary parts of every coefficient give a real linear system.
    """
    if not basis:
        return []
    N = W.n
    m = max(int(B.order) for B in basis)
    layout = layout or _unknown_layout(N, m)
    daggers = [w_adjoint(B, W) for B in basis]
    for Bd in daggers:
        if not Bd.is_polynomial or not Bd.has_eigen_shape() or (not Bd.is_zero() and Bd.order > m):
            raise NotInAlgebra("adjoint of a basis element left the solver's operator space")
    cols = []
    iu = GaussianRational(0, 1)
    for B, Bd in zip(basis, daggers):
        cols.append(_op_to_vector(B - Bd, layout))
    for B, Bd in zip(basis, daggers):
        cols.append([iu * c for c in _op_to_vector(B + Bd, layout)])
    # rows: real and imaginary part of each coordinate
    nvar = len(cols)
    rows = []
    for k in range(len(layout)):
        rows.append([cols[v][k].re for v in range(nvar)])
        rows.append([cols[v][k].im for v in range(nvar)])
    red = RowReducer(nvar, real=True)
    for r in rows:
        if any(r):
            red.add_row(r)
    sols = red.nullspace()
    d = len(basis)
    ops = []
    for s in sols:
        D = MatDiffOp.zero(N)
        for i in range(d):
            c = GaussianRational(s[i], s[d + i])
            if c:
                D = D + basis[i].scale(c)
        ops.append(D)
    # canonical real echelon form over the real coordinates
    vecs = []
    for D in ops:
        v = _op_to_vector(D, layout)
        vecs.append([c.re for c in v] + [c.im for c in v])
    ech = RowReducer(2 * len(layout), real=True)
    for v in vecs:
        ech.add_row(v)
    L = len(layout)
    out = []
    for v in ech.rref():
        cv = [GaussianRational(v[k], v[L + k]) for k in range(L)]
        out.append(_vector_to_op(cv, layout, N, m))
    return out


def real_span_dimension(ops: Sequence[MatDiffOp], layout: list) -> int:
    """Dimension over R of the real span of the given operators."""
    red = RowReducer(2 * len(layout), real=True)
    for D in ops:
        v = _op_to_vector(D, layout)
        red.add_row([c.re for c in v] + [c.im for c in v])
    return red.rank
