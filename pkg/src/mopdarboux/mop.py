"""Monic matrix orthogonal polynomials from exact moments."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CMat, Mat, Poly, solve_left
from .weights import MatrixWeight, inner_product

__all__ = [
    "MOPTable",
    "MOPError",
    "monic_sequence",
    "recurrence_coeffs",
    "general_recurrence",
    "x_times",
]


class MOPError(ValueError):
    pass


@dataclass(frozen=True)
class MOPTable:
    weight: MatrixWeight
    polys: tuple  # P_0..P_K as Mat
    norms: tuple  # <P_n, P_n> as CMat

    @property
    def K(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, n: int) -> Mat:
        return self.polys[n]


def x_times(P: Mat) -> Mat:
    return P.scale(Poly.x())


def monic_sequence(W: MatrixWeight, K: int, start: MOPTable | None = None) -> MOPTable:
    """P_0..P_K with P_n = x^n I + sum_{k<n} C_k x^k and <P_n, x^j I> = 0, j < n.

    Each P_n comes from its own block Hankel system
    sum_k C_k M_{k+j} = -M_{n+j}, where M_m = integral of x^m W.
    Passing ``start`` reuses an existing shorter table for the same weight.
    """
    if K < 0:
        raise ValueError("K must be nonnegative")
    N = W.n
    tab = W.moments(2 * K)
    M = tab.matrix
    polys, norms = [], []
    if start is not None:
        if start.weight is not W and start.weight != W:
            raise ValueError("start table belongs to another weight")
        if start.K >= K:
            return MOPTable(W, start.polys[: K + 1], start.norms[: K + 1])
        polys, norms = list(start.polys), list(start.norms)
    for n in range(len(polys), K + 1):
        if n == 0:
            coeffs = [CMat.identity(N)]
        else:
            # unknown X = [C_0 ... C_{n-1}] (N x nN); X A = B with A_{kj} = M_{k+j}
            size = n * N
            At = [[None] * size for _ in range(size)]  # transpose of A
            for k in range(n):
                for j in range(n):
                    blk = M[k + j]
                    for p in range(N):
                        for q in range(N):
                            At[j * N + q][k * N + p] = blk.rows[p][q]
            Bt = [[None] * N for _ in range(size)]
            for j in range(n):
                blk = M[n + j]
                for p in range(N):
                    for q in range(N):
                        Bt[j * N + q][p] = -blk.rows[p][q]
            sol = solve_left(CMat._raw(At), CMat._raw(Bt))
            if sol is None:
                raise MOPError(f"singular moment system at degree {n}")
            coeffs = []
            for k in range(n):
                coeffs.append(CMat._raw([[sol.rows[k * N + q][p] for q in range(N)] for p in range(N)]))
            coeffs.append(CMat.identity(N))
        P = Mat.from_coeffs(coeffs)
        polys.append(P)
        norms.append(inner_product(P, P, W))
    return MOPTable(W, tuple(polys), tuple(norms))


def recurrence_coeffs(table: MOPTable, n: int):
    """(B_n, C_n) of x P_n = P_{n+1} + B_n P_n + C_n P_{n-1}, verified exactly."""
    if n < 0 or n + 1 > table.K:
        raise IndexError(f"need 0 <= n <= K-1 = {table.K - 1}")
    W = table.weight
    P = table.polys
    xP = x_times(P[n])
    B = inner_product(xP, P[n], W) * table.norms[n].inverse()
    if n == 0:
        C = CMat.zeros(W.n)
        rhs = P[1] + Mat.from_const(B) * P[0]
    else:
        C = inner_product(xP, P[n - 1], W) * table.norms[n - 1].inverse()
        rhs = P[n + 1] + Mat.from_const(B) * P[n] + Mat.from_const(C) * P[n - 1]
    if xP != rhs:
        raise MOPError(f"three-term identity fails at n = {n}")
    return B, C


def general_recurrence(seq, W: MatrixWeight, n: int):
    """(A_n, B_n, C_n) with x Q_n = A_n Q_{n+1} + B_n Q_n + C_n Q_{n-1}.

    ``seq`` is a list of orthogonal matrix polynomials with nonsingular
    leading coefficients covering indices up to n+1.
    """
    if n + 1 >= len(seq):
        raise IndexError("sequence too short")
    lo = max(n - 1, 0)
    for i in range(lo, n + 2):
        for j in range(i + 1, n + 2):
            if not inner_product(seq[i], seq[j], W).is_zero():
                raise MOPError(f"Q_{i} and Q_{j} are not orthogonal")
    Q = seq
    xQ = x_times(Q[n])
    lead_n = Q[n].leading_coefficient()
    lead_next = Q[n + 1].leading_coefficient()
    A = lead_n * lead_next.inverse()
    B = inner_product(xQ, Q[n], W) * inner_product(Q[n], Q[n], W).inverse()
    if n == 0:
        C = CMat.zeros(W.n)
        rhs = Mat.from_const(A) * Q[1] + Mat.from_const(B) * Q[0]
    else:
        C = inner_product(xQ, Q[n - 1], W) * inner_product(Q[n - 1], Q[n - 1], W).inverse()
        rhs = Mat.from_const(A) * Q[n + 1] + Mat.from_const(B) * Q[n] + Mat.from_const(C) * Q[n - 1]
    if xQ != rhs:
        raise MOPError(f"recurrence identity fails at n = {n}")
    return A, B, C
