"""JSON forms of exact objects, and parsing with path diagnostics.

Formats
  rational   "p/q" (q omitted when 1)
  complex    "p/q" or "p/q,r/s" (real part, imaginary part)
  polynomial array of complex literals, lowest degree first
  matrix     N x N array of polynomials; a non-polynomial entry is
             {"num": polynomial, "den": polynomial}
  operator   {"size": N, "coeffs": [F_0, ..., F_s]}
  weight     {"size": N, "kernel": {"family": ..., "alpha": ..., "beta": ...},
              "H": matrix, "T": matrix (optional)}
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import GaussianRational, Mat, Poly, RatFun, parse_complex
from .diffop import MatDiffOp
from .weights import Kernel, MatrixWeight, WeightError

__all__ = [
    "SchemaError",
    "poly_to_json",
    "entry_to_json",
    "mat_to_json",
    "op_to_json",
    "weight_to_json",
    "parse_poly",
    "parse_mat",
    "parse_operator",
    "parse_weight",
    "load_json",
    "dumps",
]


class SchemaError(ValueError):
    """Malformed input; ``path`` locates the offending node."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# ---------------------------------------------------------------------------
# emit


def poly_to_json(p: Poly) -> list:
    return [str(c) for c in p.coeffs]


def entry_to_json(e: RatFun):
    if e.is_polynomial():
        return poly_to_json(e.as_poly())
    return {"num": poly_to_json(e.num), "den": poly_to_json(e.den)}


def mat_to_json(M: Mat) -> list:
    return [[entry_to_json(M[p, q]) for q in range(M.n)] for p in range(M.n)]


def op_to_json(D: MatDiffOp) -> dict:
    return {"size": D.n, "coeffs": [mat_to_json(F) for F in D.coeffs]}


def weight_to_json(W: MatrixWeight) -> dict:
    return W.to_json()


def dumps(obj) -> str:
    """Canonical text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# parse


def _complex(node, path: str) -> GaussianRational:
    if isinstance(node, bool):
        raise SchemaError(path, "expected a rational literal, got a boolean")
    if isinstance(node, int):
        return GaussianRational(node, 0)
    if not isinstance(node, str):
        raise SchemaError(path, f"expected a rational literal string, got {type(node).__name__}")
    try:
        return parse_complex(node)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(path, f"bad literal {node!r}: {exc}") from None


def parse_poly(node, path: str = "$") -> Poly:
    if not isinstance(node, list):
        raise SchemaError(path, "polynomial must be an array of coefficients")
    return Poly([_complex(c, f"{path}[{k}]") for k, c in enumerate(node)])


def _entry(node, path: str) -> RatFun:
    if isinstance(node, dict):
        extra = set(node) - {"num", "den"}
        if extra or "num" not in node or "den" not in node:
            raise SchemaError(path, "rational entry needs exactly the keys 'num' and 'den'")
        den = parse_poly(node["den"], f"{path}.den")
        if den.is_zero():
            raise SchemaError(f"{path}.den", "zero denominator")
        return RatFun(parse_poly(node["num"], f"{path}.num"), den)
    return RatFun(parse_poly(node, path))


def parse_mat(node, path: str = "$", size: int | None = None) -> Mat:
    if not isinstance(node, list) or not node:
        raise SchemaError(path, "matrix must be a nonempty array of rows")
    n = len(node)
    if size is not None and n != size:
        raise SchemaError(path, f"expected {size} rows, got {n}")
    rows = []
    for p, row in enumerate(node):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"{path}[{p}]", f"row must have {n} entries")
        rows.append([_entry(e, f"{path}[{p}][{q}]") for q, e in enumerate(row)])
    return Mat(rows)


def _size(obj: dict, path: str) -> int:
    n = obj.get("size")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SchemaError(f"{path}.size", "size must be a positive integer")
    return n


def _require_object(node, path: str, allowed: set, required: set) -> dict:
    if not isinstance(node, dict):
        raise SchemaError(path, "expected an object")
    unknown = set(node) - allowed
    if unknown:
        raise SchemaError(path, f"unknown keys {sorted(unknown)}")
    for key in sorted(required):
        if key not in node:
            raise SchemaError(path, f"missing key {key!r}")
    return node


def parse_operator(node, path: str = "$") -> MatDiffOp:
    obj = _require_object(node, path, {"size", "coeffs"}, {"size", "coeffs"})
    n = _size(obj, path)
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list):
        raise SchemaError(f"{path}.coeffs", "coeffs must be an array of matrices")
    mats = [parse_mat(F, f"{path}.coeffs[{j}]", n) for j, F in enumerate(coeffs)]
    return MatDiffOp(n, mats)


def _kernel(node, path: str) -> Kernel:
    obj = _require_object(node, path, {"family", "alpha", "beta"}, {"family"})
    fam = obj["family"]
    if not isinstance(fam, str):
        raise SchemaError(f"{path}.family", "family must be a string")
    params = {}
    for key in ("alpha", "beta"):
        if key in obj:
            c = _complex(obj[key], f"{path}.{key}")
            if c.im:
                raise SchemaError(f"{path}.{key}", "parameter must be real")
            params[key] = c.re
    try:
        return Kernel(fam, params.get("alpha", 0), params.get("beta", 0))
    except WeightError as exc:
        bad = "alpha" if "alpha" in str(exc) else "beta" if "beta" in str(exc) else "family"
        raise SchemaError(f"{path}.{bad}", str(exc)) from None


def parse_weight(node, path: str = "$") -> MatrixWeight:
    obj = _require_object(node, path, {"size", "kernel", "H", "T", "name"}, {"size", "kernel", "H"})
    n = _size(obj, path)
    kernel = _kernel(obj["kernel"], f"{path}.kernel")
    H = parse_mat(obj["H"], f"{path}.H", n)
    if not H.is_polynomial():
        raise SchemaError(f"{path}.H", "H must have polynomial entries")
    T = parse_mat(obj["T"], f"{path}.T", n) if "T" in obj else None
    name = obj.get("name", "")
    try:
        return MatrixWeight(kernel, H, T=T, name=name if isinstance(name, str) else "")
    except WeightError as exc:
        raise SchemaError(f"{path}.H", str(exc)) from None


def load_json(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(path, f"invalid JSON: {exc}") from None
