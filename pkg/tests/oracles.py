"""Conversions to sympy, used as an independent oracle."""

import sympy
from gmpy2 import mpq

from mopdarboux.algebra import GaussianRational, Poly

x_sym = sympy.Symbol("x")


def sym_rational(q):
    return sympy.Rational(int(q.numerator), int(q.denominator))


def sym_complex(c: GaussianRational):
    return sym_rational(c.re) + sympy.I * sym_rational(c.im)


def to_sympy(p: Poly, var=x_sym):
    return sum((sym_complex(c) * var ** k for k, c in enumerate(p.coeffs)), sympy.Integer(0))


def from_sympy(expr, var=x_sym) -> Poly:
    expr = sympy.expand(expr)
    if expr == 0:
        return Poly()
    out = []
    for c in sympy.Poly(expr, var).all_coeffs()[::-1]:
        re, im = sympy.re(c), sympy.im(c)
        out.append(GaussianRational(mpq(int(re.p), int(re.q)), mpq(int(im.p), int(im.q))))
    return Poly(out)
