"""Exact arithmetic over the Gaussian rationals Q(i).

Scalars, dense univariate polynomials, normalized rational functions,
square matrices of rational functions, constant matrices, and exact
row reduction.  Every value is immutable once built.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from gmpy2 import iroot, mpq

__all__ = [
    "GaussianRational",
    "gq",
    "parse_rational",
    "parse_complex",
    "Poly",
    "RatFun",
    "Mat",
    "CMat",
    "RowReducer",
    "nullspace",
    "solve_left",
    "SingularMatrixError",
    "DEG_ZERO",
    "falling_factorial",
]

# degree of the zero polynomial
DEG_ZERO = float("-inf")


class SingularMatrixError(ZeroDivisionError):
    """Raised when inverting a matrix whose determinant vanishes."""

    def __init__(self, message: str, det=None):
        super().__init__(message)
        self.det = det


def _to_mpq(x) -> mpq:
    if isinstance(x, str):
        return parse_rational(x)
    return mpq(x)


def parse_rational(text: str) -> mpq:
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    if "/" in text:
        p, q = text.split("/", 1)
        q = int(q)
        if q == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return mpq(int(p), q)
    return mpq(int(text))


def format_rational(r: mpq) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


class GaussianRational:
    """An element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_ZERO_Q) else _to_mpq(re)
        self.im = im if type(im) is type(_ZERO_Q) else _to_mpq(im)

    # construction helpers
    @staticmethod
    def parse(text: str) -> "GaussianRational":
        return parse_complex(text)

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if not self.im:
            return format_rational(self.re)
        return f"{format_rational(self.re)},{format_rational(self.im)}"

    def pretty(self) -> str:
        if not self.im:
            return format_rational(self.re)
        if not self.re:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"({format_rational(self.re)}{sign}{format_rational(abs(self.im))}i)"

    # comparisons
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        try:
            o = gq(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # arithmetic
    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = gq(other)
            except TypeError:
                return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = gq(other)
            except TypeError:
                return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return gq(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = gq(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c, _ZERO_Q)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero in Q(i)")
            return GaussianRational(1 / a, _ZERO_Q)
        n = a * a + b * b
        return GaussianRational(a / n, -b / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = gq(other)
            except TypeError:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return gq(other) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> mpq:
        return self.re * self.re + self.im * self.im


_ZERO_Q = mpq(0)
ZERO = GaussianRational(_ZERO_Q, _ZERO_Q)
ONE = GaussianRational(mpq(1), _ZERO_Q)
I_UNIT = GaussianRational(_ZERO_Q, mpq(1))


def gq(x) -> GaussianRational:
    """Coerce ints, rationals, strings and Python complex-free values to Q(i)."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_complex(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a rational")
    if isinstance(x, complex):
        raise TypeError("complex floats are not exact")
    try:
        return GaussianRational(mpq(x), _ZERO_Q)
    except (TypeError, ValueError) as exc:
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational") from exc


def parse_complex(text: str) -> GaussianRational:
    """Parse ``"p/q"`` or ``"p/q,r/s"`` (real part, imaginary part)."""
    if "," in text:
        re, im = text.split(",", 1)
        return GaussianRational(parse_rational(re), parse_rational(im))
    return GaussianRational(parse_rational(text), _ZERO_Q)


def falling_factorial(n, i: int):
    """[n]_i = n(n-1)...(n-i+1) for an integer or Poly argument."""
    out = 1 if not isinstance(n, Poly) else Poly.one()
    for t in range(i):
        out = out * (n - t)
    return out


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense polynomial in one variable, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, GaussianRational) else gq(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> "Poly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def zero(cls) -> "Poly":
        return _POLY_ZERO

    @classmethod
    def one(cls) -> "Poly":
        return _POLY_ONE

    @classmethod
    def x(cls) -> "Poly":
        return _POLY_X

    @classmethod
    def const(cls, c) -> "Poly":
        return cls._raw([gq(c)])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls._raw([ZERO] * k + [gq(c)])

    # inspection
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == ONE

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_real(self) -> bool:
        return all(not c.im for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, RatFun):
            return other == self
        try:
            return self.coeffs == Poly.const(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                terms.append(c.pretty())
            elif c == ONE:
                terms.append(mono)
            elif c == -ONE:
                terms.append("-" + mono)
            else:
                terms.append(f"{c.pretty()}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    # arithmetic
    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, RatFun):
                return NotImplemented
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, RatFun):
                return NotImplemented
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, RatFun):
                return NotImplemented
            c = gq(other)
            if not c:
                return _POLY_ZERO
            return Poly._raw([c * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _POLY_ZERO
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = _POLY_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (Poly, RatFun)):
            return RatFun(self) / other
        c = gq(other).inv()
        return self * c

    def scale(self, c) -> "Poly":
        return self * gq(c)

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly._raw([ZERO] * k + list(self.coeffs))

    def derivative(self, times: int = 1) -> "Poly":
        cs = self.coeffs
        for _ in range(times):
            cs = [cs[k] * k for k in range(1, len(cs))]
        return Poly._raw(list(cs))

    def conj(self) -> "Poly":
        return Poly._raw([c.conj() for c in self.coeffs])

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Horner evaluation at a scalar (or any ring element)."""
        if isinstance(x, (Poly, RatFun)):
            out = _POLY_ZERO if isinstance(x, Poly) else RatFun(_POLY_ZERO)
            for c in reversed(self.coeffs):
                out = out * x + Poly.const(c)
            return out
        x = gq(x)
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def divmod(self, other: "Poly"):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = other.coeffs[-1].inv()
        if len(rem) - 1 < db:
            return _POLY_ZERO, self
        quot = [ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv_lead
            quot[k] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * bj
        return Poly._raw(quot), Poly._raw(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == ONE:
            return self
        return self * lead.inv()

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (Euclid over Q(i))."""
        a, b = self, other
        while b.coeffs:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def order_at(self, c) -> float:
        """Multiplicity of the root c (infinite for the zero polynomial)."""
        if not self.coeffs:
            return math.inf
        c = gq(c)
        lin = Poly._raw([-c, ONE])
        k = 0
        p = self
        while True:
            q, r = p.divmod(lin)
            if r.coeffs:
                return k
            p = q
            k += 1

    def real_part(self) -> "Poly":
        return Poly._raw([GaussianRational(c.re, _ZERO_Q) for c in self.coeffs])

    def imag_part(self) -> "Poly":
        return Poly._raw([GaussianRational(c.im, _ZERO_Q) for c in self.coeffs])


_POLY_ZERO = Poly._raw([])
_POLY_ONE = Poly._raw([ONE])
_POLY_X = Poly._raw([ZERO, ONE])


def _root_bound(ints: list) -> int:
    """Integer upper bound on |root| (Fujiwara) for integer coefficients, low degree first."""
    deg = len(ints) - 1
    lead = abs(ints[-1])
    best = 0
    for k in range(1, deg + 1):
        c = abs(ints[deg - k])
        if k == deg:
            c = -(-c // 2)
        # ceil((c / lead) ** (1/k))
        q = -(-c // lead)
        r, exact = iroot(q, k)
        best = max(best, int(r) + (0 if exact else 1))
    return 2 * best + 1


def _int_eval(ints: list, x):
    v = 0
    for c in reversed(ints):
        v = v * x + c
    return v


def _sturm_chain(ints: list) -> list:
    """Sturm sequence of the square-free part, as mpq coefficient lists."""
    p = Poly(ints)
    q = p // p.gcd(p.derivative())
    chain = [q, q.derivative()]
    while not chain[-1].is_constant():
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(r)
    return [[c.re for c in f.coeffs] for f in chain]


def _sign_changes(chain: list, x) -> int:
    signs = [s for s in ((_int_eval(f, x) > 0) - (_int_eval(f, x) < 0) for f in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _positive_integer_roots(ints: list, bound: int) -> list:
    """Integer roots in [1, bound] by bisection on Sturm counts.

    A rational root u/v has v dividing the leading coefficient, so the
    left endpoint lo + 1/(2 lead) is never a root and the count over
    (lo + eps, hi] sees every integer root in (lo, hi].
    """
    if bound < 1:
        return []
    chain = _sturm_chain(ints)
    eps = mpq(1, 2 * abs(ints[-1]))
    found = []
    stack = [(0, bound)]
    while stack:
        lo, hi = stack.pop()
        if _sign_changes(chain, lo + eps) - _sign_changes(chain, hi) == 0:
            continue
        if hi - lo == 1:
            if _int_eval(ints, hi) == 0:
                found.append(hi)
            continue
        mid = (lo + hi) // 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(found)


def nonnegative_integer_roots(p: Poly, limit: int | None = None) -> list[int]:
    """All roots of p lying in {0, 1, 2, ...}, found exactly.

    The zero polynomial has every integer as a root; ``[0]`` is returned so
    callers see a witness.
    """
    if p.is_zero():
        return [0]
    # real and imaginary parts must vanish simultaneously
    q = p.real_part().gcd(p.imag_part()) if not p.is_real() else p
    if q.is_zero():
        q = p
    q = q.monic()
    if q.degree == 0:
        return []
    dens = [c.re.denominator for c in q.coeffs]
    lcm = 1
    for d in dens:
        lcm = lcm * d // math.gcd(lcm, d)
    ints = [int(c.re * lcm) for c in q.coeffs]
    roots = []
    k = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        k += 1
    if k:
        roots.append(0)
    if len(ints) <= 1:
        return roots
    bound = _root_bound(ints)
    if limit is not None:
        bound = min(bound, limit)
    roots.extend(_positive_integer_roots(ints, bound))
    return roots


# ---------------------------------------------------------------------------
# rational functions


class RatFun:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized: bool = False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            self.num, self.den = num, _POLY_ONE
            return
        if not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if _normalized:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num, self.den = _POLY_ZERO, _POLY_ONE
            return
        if den.degree > 0:
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
        lead = den.leading()
        if lead != ONE:
            inv = lead.inv()
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        if isinstance(x, Poly):
            return cls(x)
        return cls(Poly.const(x))

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> Poly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num.coeffs)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self.den.is_one() and self.num == other
        try:
            return self.den.is_one() and self.num == Poly.const(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self.den.is_one():
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if self.den.is_one():
            return self.num.pretty(var)
        return f"({self.num.pretty(var)})/({self.den.pretty(var)})"

    def __neg__(self):
        return RatFun(-self.num, self.den, _normalized=True)

    def __add__(self, other):
        other = _ratfun_or_none(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num + other.num)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _ratfun_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFun.coerce(other) - self

    def __mul__(self, other):
        other = _ratfun_or_none(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num * other.num)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        other = _ratfun_or_none(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return RatFun.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return RatFun(self.num ** k, self.den ** k, _normalized=True)

    def derivative(self) -> "RatFun":
        if self.den.is_one():
            return RatFun(self.num.derivative())
        n, d = self.num, self.den
        return RatFun(n.derivative() * d - n * d.derivative(), d * d)

    def conj(self) -> "RatFun":
        return RatFun(self.num.conj(), self.den.conj(), _normalized=True)

    def evaluate(self, x) -> GaussianRational:
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num.evaluate(x) / d

    def order_at(self, c) -> float:
        """Vanishing order at c (negative for a pole, +inf for zero)."""
        if self.num.is_zero():
            return math.inf
        return self.num.order_at(c) - self.den.order_at(c)

    def degree_at_infinity(self) -> float:
        """deg(num) - deg(den); growth rate as x -> infinity."""
        if self.num.is_zero():
            return DEG_ZERO
        return self.num.degree - self.den.degree


def _ratfun_or_none(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun(x)
    try:
        return RatFun(Poly.const(x))
    except TypeError:
        return None


def _entry(x) -> RatFun:
    return RatFun.coerce(x)


# ---------------------------------------------------------------------------
# constant matrices


class CMat:
    """Rectangular matrix over Q(i)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(gq(c) for c in r) for r in rows)

    @classmethod
    def _raw(cls, rows) -> "CMat":
        m = object.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        return m

    @classmethod
    def identity(cls, n: int) -> "CMat":
        return cls._raw([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> "CMat":
        c = r if c is None else c
        return cls._raw([[ZERO] * c for _ in range(r)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "CMat":
        """Elementary matrix E_ij (0-based)."""
        return cls._raw([[ONE if (p, q) == (i, j) else ZERO for q in range(n)] for p in range(n)])

    @property
    def shape(self):
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, CMat):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "CMat(" + "; ".join(", ".join(c.pretty() for c in r) for r in self.rows) + ")"

    def is_zero(self) -> bool:
        return not any(c for r in self.rows for c in r)

    def __add__(self, other: "CMat"):
        return CMat._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "CMat"):
        return CMat._raw([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return CMat._raw([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "CMat":
        c = gq(c)
        return CMat._raw([[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, CMat):
            return self.scale(other)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                s = ZERO
                for a, b in zip(r, col):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return CMat._raw(out)

    def __rmul__(self, c):
        return self.scale(c)

    def H(self) -> "CMat":
        """Conjugate transpose."""
        return CMat._raw([[c.conj() for c in col] for col in zip(*self.rows)])

    def transpose(self) -> "CMat":
        return CMat._raw([list(col) for col in zip(*self.rows)])

    def conj(self) -> "CMat":
        return CMat._raw([[c.conj() for c in r] for r in self.rows])

    def is_hermitian(self) -> bool:
        return self == self.H()

    def det(self) -> GaussianRational:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        det = ONE
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return ZERO
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            inv = p.inv()
            for r in range(col + 1, n):
                f = a[r][col]
                if f:
                    f = f * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def inverse(self) -> "CMat":
        n, _ = self.shape
        sol = solve_left(self, CMat.identity(n))
        if sol is None:
            raise SingularMatrixError("singular constant matrix", det=ZERO)
        return sol

    def leading_minors(self) -> list:
        n, _ = self.shape
        return [CMat._raw([r[:k] for r in self.rows[:k]]).det() for k in range(1, n + 1)]

    def is_positive_definite(self) -> bool:
        """Hermitian with all leading principal minors positive."""
        if not self.is_hermitian():
            return False
        for m in self.leading_minors():
            if m.im or m.re <= 0:
                return False
        return True

    def entries(self):
        return [c for r in self.rows for c in r]


# ---------------------------------------------------------------------------
# matrices of rational functions


class Mat:
    """Square N x N matrix with RatFun entries.

    Polynomial matrices (every denominator 1) are the common case and take
    a fast path through RatFun arithmetic.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        rows = [[_entry(c) for c in r] for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("Mat must be square")
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def _raw(cls, rows) -> "Mat":
        m = object.__new__(cls)
        m.n = len(rows)
        m.rows = tuple(tuple(r) for r in rows)
        return m

    @classmethod
    def identity(cls, n: int) -> "Mat":
        one, zero = RatFun(_POLY_ONE), RatFun(_POLY_ZERO)
        return cls._raw([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "Mat":
        zero = RatFun(_POLY_ZERO)
        return cls._raw([[zero] * n for _ in range(n)])

    @classmethod
    def scalar(cls, n: int, c) -> "Mat":
        c = _entry(c)
        zero = RatFun(_POLY_ZERO)
        return cls._raw([[c if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence) -> "Mat":
        n = len(entries)
        zero = RatFun(_POLY_ZERO)
        return cls._raw([[_entry(entries[i]) if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int, c=1) -> "Mat":
        zero = RatFun(_POLY_ZERO)
        c = _entry(c)
        return cls._raw([[c if (p, q) == (i, j) else zero for q in range(n)] for p in range(n)])

    @classmethod
    def from_const(cls, m: CMat) -> "Mat":
        return cls._raw([[RatFun(Poly._raw([c])) for c in r] for r in m.rows])

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[CMat]) -> "Mat":
        """Polynomial matrix sum_k coeffs[k] x^k."""
        if not coeffs:
            raise ValueError("need at least one coefficient matrix to fix the size")
        n = coeffs[0].shape[0]
        rows = [[RatFun(Poly._raw([c.rows[i][j] for c in coeffs])) for j in range(n)] for i in range(n)]
        return cls._raw(rows)

    # inspection
    def __getitem__(self, ij) -> RatFun:
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [c for r in self.rows for c in r]

    def __eq__(self, other):
        if isinstance(other, Mat):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Mat(" + "; ".join(", ".join(str(c) for c in r) for r in self.rows) + ")"

    def pretty(self, var: str = "x") -> str:
        return "(" + "; ".join(", ".join(c.pretty(var) for c in r) for r in self.rows) + ")"

    def is_zero(self) -> bool:
        return not any(c for r in self.rows for c in r)

    def is_polynomial(self) -> bool:
        return all(c.den.is_one() for r in self.rows for c in r)

    def degree(self):
        """Maximum entry degree; DEG_ZERO for the zero matrix."""
        if not self.is_polynomial():
            raise ValueError("degree of a non-polynomial matrix")
        return max((c.num.degree for c in self.entries()), default=DEG_ZERO)

    def coeff(self, k: int) -> CMat:
        """Constant matrix of x^k coefficients (polynomial matrices only)."""
        return CMat._raw([[c.as_poly().coeff(k) for c in r] for r in self.rows])

    def coeff_list(self) -> list:
        d = self.degree()
        if d == DEG_ZERO:
            return []
        return [self.coeff(k) for k in range(int(d) + 1)]

    def leading_coefficient(self) -> CMat:
        d = self.degree()
        if d == DEG_ZERO:
            return CMat.zeros(self.n)
        return self.coeff(int(d))

    def evaluate(self, x) -> CMat:
        return CMat._raw([[c.evaluate(x) for c in r] for r in self.rows])

    def is_real(self) -> bool:
        return all(c.num.is_real() and c.den.is_real() for c in self.entries())

    # arithmetic
    def __add__(self, other: "Mat"):
        return Mat._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat"):
        return Mat._raw([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat._raw([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Mat":
        c = _entry(c)
        return Mat._raw([[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, CMat):
            other = Mat.from_const(other)
        if not isinstance(other, Mat):
            return self.scale(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                s = None
                for a, b in zip(r, col):
                    if a and b:
                        s = a * b if s is None else s + a * b
                row.append(s if s is not None else RatFun(_POLY_ZERO))
            out.append(row)
        return Mat._raw(out)

    def __rmul__(self, c):
        if isinstance(c, CMat):
            return Mat.from_const(c) * self
        return self.scale(c)

    def H(self) -> "Mat":
        """Hermitian conjugate: conjugate coefficients, then transpose."""
        return Mat._raw([[c.conj() for c in col] for col in zip(*self.rows)])

    def transpose(self) -> "Mat":
        return Mat._raw([list(col) for col in zip(*self.rows)])

    def derivative(self) -> "Mat":
        return Mat._raw([[c.derivative() for c in r] for r in self.rows])

    def det(self) -> RatFun:
        return _det([list(r) for r in self.rows])

    def adjugate(self) -> "Mat":
        n = self.n
        if n == 1:
            return Mat.identity(1)
        rows = [list(r) for r in self.rows]
        adj = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
                c = _det(minor)
                adj[j][i] = c if (i + j) % 2 == 0 else -c
        return Mat._raw(adj)

    def inverse(self) -> "Mat":
        d = self.det()
        if d.is_zero():
            raise SingularMatrixError("matrix is singular (det = 0)", det=d)
        return self.adjugate().scale(d.inv())


def _det(rows: list) -> RatFun:
    n = len(rows)
    if n == 0:
        return RatFun(_POLY_ONE)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = RatFun(_POLY_ZERO)
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# exact elimination


class RowReducer:
    """Incremental reduced row echelon form over a field.

    Rows are fed one at a time; each is reduced against the pivots found
    so far.  Pivot choice is the first nonzero column, so results depend
    only on row order and are reproducible.  Entries may be
    GaussianRational or gmpy2 mpq (the real fast path).
    """

    def __init__(self, ncols: int, real: bool = False):
        self.ncols = ncols
        self.real = real
        self.pivots: dict[int, list] = {}  # pivot column -> normalized row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_row(self, row: Sequence) -> bool:
        """Reduce ``row`` into the basis; True if it raised the rank."""
        row = list(row)
        for col, prow in self.pivots.items():
            f = row[col]
            if f:
                for k in range(self.ncols):
                    if prow[k]:
                        row[k] = row[k] - f * prow[k]
        lead = next((k for k in range(self.ncols) if row[k]), None)
        if lead is None:
            return False
        inv = 1 / row[lead] if not isinstance(row[lead], GaussianRational) else row[lead].inv()
        row = [c * inv if c else c for c in row]
        # keep the basis fully reduced
        for col, prow in self.pivots.items():
            f = prow[lead]
            if f:
                for k in range(self.ncols):
                    if row[k]:
                        prow[k] = prow[k] - f * row[k]
        self.pivots[lead] = row
        return True

    def rref(self) -> list:
        return [self.pivots[c] for c in sorted(self.pivots)]

    def nullspace(self) -> list:
        """Basis of {v : A v = 0}, one vector per free column."""
        zero = _ZERO_Q if self.real else ZERO
        one = zero + 1
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for col, prow in self.pivots.items():
                if prow[f]:
                    v[col] = -prow[f]
            basis.append(v)
        return basis


def _all_real(rows) -> bool:
    return all((not isinstance(c, GaussianRational)) or not c.im for r in rows for c in r)


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[GaussianRational]]:
    """Basis of the right nullspace of a matrix over Q(i).

    Uses rational arithmetic alone when every entry is real.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    real = _all_real(rows)
    red = RowReducer(ncols, real=real)
    for r in rows:
        if real:
            red.add_row([c.re if isinstance(c, GaussianRational) else mpq(c) for c in r])
        else:
            red.add_row([gq(c) for c in r])
    out = red.nullspace()
    if real:
        return [[GaussianRational(c, _ZERO_Q) for c in v] for v in out]
    return out


def solve_left(A: CMat, B: CMat):
    """Solve A X = B for square nonsingular A; None if A is singular."""
    n, m = A.shape
    if n != m:
        raise ValueError("solve_left needs a square matrix")
    k = B.shape[1]
    real = _all_real(A.rows) and _all_real(B.rows)
    if real:
        aug = [[c.re for c in ra] + [c.re for c in rb] for ra, rb in zip(A.rows, B.rows)]
    else:
        aug = [list(ra) + list(rb) for ra, rb in zip(A.rows, B.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        inv = p.inv() if isinstance(p, GaussianRational) else 1 / p
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    if real:
        return CMat._raw([[GaussianRational(c, _ZERO_Q) for c in r[n:]] for r in aug])
    return CMat._raw([r[n:] for r in aug])
