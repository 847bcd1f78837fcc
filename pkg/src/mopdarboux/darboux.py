"""Verification and use of (strong) Darboux transformations.

Orientation used throughout: a certificate "from W to W~" stores a
transformer V acting on the monic sequence of the source W, with
P_n . V proportional to the monic sequence of the target W~, and the
companion N = W~ V^* W^{-1}.  Then D = V N lies in D(W) and
N V lies in D(W~).

conjugate(A, cert, "down") sends A in D(W) to N A V in D(W~);
conjugate(B, cert, "up") sends B in D(W~) to V B N in D(W).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .algebra import Mat, Poly, nonnegative_integer_roots
from .diffop import MatDiffOp, compose, degree_preserving_test
from .dwalgebra import eigenvalue_poly, membership_test
from .mop import MOPTable, monic_sequence
from .weights import MatrixWeight, boundary_check, formal_symmetry_test, inner_product, twisted_adjoint

__all__ = [
    "DEFAULT_CAP",
    "FLAGS",
    "NotStrongCandidate",
    "ConjugationError",
    "DarbouxCertificate",
    "companion_operator",
    "verify_strong",
    "conjugate",
    "transformer_compose",
    "reverse",
    "mapped_sequence",
    "MappedSequence",
]

DEFAULT_CAP = 12

FLAGS = (
    "companion_polynomial",
    "V_degree_preserving",
    "N_degree_preserving",
    "V_leading_nonsingular",
    "D_in_DW",
    "adjointness_verified",
    "boundary_verified",
    "proportionality",
    "eigenvalues_nonsingular",
)

PLAIN_FLAGS = ("V_degree_preserving", "N_degree_preserving", "D_in_DW", "proportionality")


def default_cap() -> int:
    raw = os.environ.get("MOPDARBOUX_CAP")
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if cap < 0:
        raise ValueError("MOPDARBOUX_CAP must be nonnegative")
    return cap


class NotStrongCandidate(ValueError):
    """W~ V^* W^{-1} is not a polynomial operator of eigen shape."""

    def __init__(self, message: str, order=None, entry=None, value=None):
        super().__init__(message)
        self.order = order
        self.entry = entry
        self.value = value


class ConjugationError(AssertionError):
    pass


def _same_kernel(A: MatrixWeight, B: MatrixWeight):
    if A.kernel != B.kernel:
        raise ValueError("source and target weights must share the scalar kernel")
    if A.n != B.n:
        raise ValueError("source and target weights differ in size")


def companion_operator(V: MatDiffOp, source: MatrixWeight, target: MatrixWeight) -> MatDiffOp:
    """N = W~ V^* W^{-1}, required to have polynomial coefficients with deg F_j <= j."""
    _same_kernel(source, target)
    N = twisted_adjoint(V, target.H, source.H_inverse, source.kernel.logderiv)
    for j, F in enumerate(N.coeffs):
        for p in range(N.n):
            for q in range(N.n):
                e = F[p, q]
                if not e.is_polynomial():
                    raise NotStrongCandidate(
                        f"coefficient of d^{j}, entry ({p + 1},{q + 1}) is not polynomial: {e}",
                        order=j, entry=(p, q), value=e)
                if e.as_poly().degree > j:
                    raise NotStrongCandidate(
                        f"coefficient of d^{j}, entry ({p + 1},{q + 1}) has degree above {j}: {e}",
                        order=j, entry=(p, q), value=e)
    return N


@dataclass
class DarbouxCertificate:
    source: MatrixWeight
    target: MatrixWeight
    V: MatDiffOp
    N: MatDiffOp | None
    flags: dict
    cap: int
    D: MatDiffOp | None = None
    failures: dict = field(default_factory=dict)
    leading: list = field(default_factory=list)  # A_n with P_n . V = A_n P~_n
    source_ref: str = ""
    target_ref: str = ""

    @property
    def strong(self) -> bool:
        return all(self.flags.get(f, False) for f in FLAGS)

    @property
    def plain(self) -> bool:
        return all(self.flags.get(f, False) for f in PLAIN_FLAGS)

    def to_json(self) -> dict:
        from .serialize import op_to_json

        out = {
            "source": self.source_ref or self.source.to_json(),
            "target": self.target_ref or self.target.to_json(),
            "transformer": op_to_json(self.V),
            "companion": op_to_json(self.N) if self.N is not None else None,
            "flags": {f: bool(self.flags.get(f, False)) for f in FLAGS},
            "strong": self.strong,
            "plain": self.plain,
            "caps": {"adjointness": self.cap, "proportionality": self.cap, "membership": self.cap},
            "proportionality_note": f"verified to degree cap {self.cap}",
        }
        if self.failures:
            out["failures"] = {k: self.failures[k] for k in sorted(self.failures)}
        return out


def _adjointness(V: MatDiffOp, N: MatDiffOp, source: MatrixWeight, target: MatrixWeight, cap: int):
    """<x^j I . V, x^k I>_{W~} = <x^j I, x^k I . N>_W for j, k <= cap.

    By sesquilinearity this covers every monomial pair x^j E_pq, x^k E_rs.
    Returns None on success, else the first failing (j, k).
    """
    n = source.n
    monos = [Mat.identity(n).scale(Poly.monomial(j)) for j in range(cap + 1)]
    left = [V.apply(P) for P in monos]
    right = [N.apply(Q) for Q in monos]
    for j in range(cap + 1):
        for k in range(cap + 1):
            if inner_product(left[j], monos[k], target) != inner_product(monos[j], right[k], source):
                return (j, k)
    return None


def verify_strong(V: MatDiffOp, source: MatrixWeight, target: MatrixWeight, cap: int | None = None,
                  source_table: MOPTable | None = None, target_table: MOPTable | None = None) -> DarbouxCertificate:
    """Run every check; failures are recorded as flags, never raised."""
    cap = default_cap() if cap is None else cap
    flags = {f: False for f in FLAGS}
    failures: dict = {}
    _same_kernel(source, target)

    dp = degree_preserving_test(V)
    flags["V_degree_preserving"] = dp.ok
    if not dp.ok:
        failures["V_degree_preserving"] = {"witness": dp.witness, "reason": dp.reason}
    lead = V.leading_coefficient()
    flags["V_leading_nonsingular"] = not V.is_zero() and not lead.det().is_zero()
    if not flags["V_leading_nonsingular"]:
        failures["V_leading_nonsingular"] = {"leading": lead.pretty()}

    N = None
    try:
        N = companion_operator(V, source, target)
        flags["companion_polynomial"] = True
    except NotStrongCandidate as exc:
        failures["companion_polynomial"] = {"reason": str(exc)}

    cert = DarbouxCertificate(source, target, V, N, flags, cap, failures=failures)
    if N is None:
        return cert

    dn = degree_preserving_test(N)
    flags["N_degree_preserving"] = dn.ok
    if not dn.ok:
        failures["N_degree_preserving"] = {"witness": dn.witness, "reason": dn.reason}

    D = compose(V, N)
    cert.D = D
    src_tab = source_table if source_table is not None and source_table.K >= cap else monic_sequence(source, cap, start=source_table)
    if D.has_eigen_shape() and membership_test(D, source, cap, src_tab):
        flags["D_in_DW"] = True
        roots = nonnegative_integer_roots(eigenvalue_poly(D).det().as_poly())
        flags["eigenvalues_nonsingular"] = not roots
        if roots:
            failures["eigenvalues_nonsingular"] = {"n": min(roots)}
    else:
        failures["D_in_DW"] = {"operator": D.pretty()}

    bad = _adjointness(V, N, source, target, cap)
    flags["adjointness_verified"] = bad is None
    if bad is not None:
        failures["adjointness_verified"] = {"monomial_degrees": list(bad)}

    flags["boundary_verified"] = boundary_check(V, target)
    if not flags["boundary_verified"]:
        failures["boundary_verified"] = {"reason": "integration-by-parts terms do not vanish at an endpoint"}

    if dp.ok:
        tgt_tab = target_table if target_table is not None and target_table.K >= cap else monic_sequence(target, cap, start=target_table)
        ok = True
        for n in range(cap + 1):
            Q = V.apply(src_tab.polys[n])
            A = Q.coeff(n)
            if not A.det() or Q != Mat.from_const(A) * tgt_tab.polys[n]:
                ok = False
                failures["proportionality"] = {"n": n}
                break
            cert.leading.append(A)
        flags["proportionality"] = ok
    else:
        failures["proportionality"] = {"reason": "V is not degree-preserving"}
    return cert


def conjugate(A: MatDiffOp, cert: DarbouxCertificate, direction: str, n_check: int = 12) -> MatDiffOp:
    """Sandwich A between the transformer pair and certify the result.

    "down": A in D(source) -> N A V in D(target).
    "up":   A in D(target) -> V A N in D(source).
    """
    if cert.N is None:
        raise ConjugationError("certificate has no companion operator")
    if direction == "down":
        frm, to = cert.source, cert.target
        result = compose(compose(cert.N, A), cert.V)
    elif direction == "up":
        frm, to = cert.target, cert.source
        result = compose(compose(cert.V, A), cert.N)
    else:
        raise ValueError("direction must be 'up' or 'down'")
    if not membership_test(A, frm, n_check):
        raise ConjugationError("input operator is not in the algebra of the starting weight")
    if not membership_test(result, to, n_check):
        raise ConjugationError("conjugated operator left the algebra of the other weight")
    if cert.strong and not A.is_zero():
        expected = A.order + cert.V.order + cert.N.order
        if result.order != expected:
            raise ConjugationError(f"order {result.order} differs from {expected}")
        if formal_symmetry_test(A, frm) and not formal_symmetry_test(result, to):
            raise ConjugationError("symmetry not preserved")
    return result


def transformer_compose(first: DarbouxCertificate, second: DarbouxCertificate, cap: int | None = None) -> DarbouxCertificate:
    """Certificate W1 -> W3 for V1 V2 given W1 -> W2 and W2 -> W3."""
    if not (first.strong and second.strong):
        raise ValueError("both certificates must be strong")
    if first.target != second.source:
        raise ValueError("certificates do not chain")
    V = compose(first.V, second.V)
    cap = first.cap if cap is None else cap
    return verify_strong(V, first.source, second.target, cap)


def reverse(cert: DarbouxCertificate, cap: int | None = None) -> DarbouxCertificate:
    """Certificate target -> source with the companion as transformer."""
    if not cert.strong:
        raise ValueError("only strong certificates can be reversed")
    cap = cert.cap if cap is None else cap
    return verify_strong(cert.N, cert.target, cert.source, cap)


@dataclass
class MappedSequence:
    polys: list
    leading: list


def mapped_sequence(cert: DarbouxCertificate, table: MOPTable | None = None, K: int | None = None) -> MappedSequence:
    """Q_n = P_n . V, checked pairwise orthogonal under the target."""
    K = cert.cap if K is None else K
    if table is None or table.K < K:
        table = monic_sequence(cert.source, K, start=table)
    Q = [cert.V.apply(table.polys[n]) for n in range(K + 1)]
    for i in range(K + 1):
        for j in range(i + 1, K + 1):
            if not inner_product(Q[i], Q[j], cert.target).is_zero():
                raise ValueError(f"Q_{i} and Q_{j} are not orthogonal for the target weight")
    leading = []
    for n, q in enumerate(Q):
        A = q.coeff(n)
        if q.degree() != n or not A.det():
            raise ValueError(f"Q_{n} does not have a nonsingular degree-{n} coefficient")
        leading.append(A)
    return MappedSequence(Q, leading)
