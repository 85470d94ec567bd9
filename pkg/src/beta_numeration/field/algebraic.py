"""
Exact equality between algebraic quantities known through shrinking enclosures.

A quantity is handed over as a callable eps -> Interval together with an integer polynomial it is
a real root of. Two such roots coincide exactly when their enclosures end up inside the same
isolating cell of the polynomial's real roots; they differ once the enclosures separate.
"""
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, List, Optional, Tuple

import sympy

from beta_numeration import global_state
from beta_numeration.field.interval import Box, Interval
from beta_numeration.field.polynomial import IntPoly, x_symbol
from beta_numeration.utils import to_fraction
from beta_numeration.whisper import whisper

Enclosure = Callable[[Fraction], Interval]

t_symbol, u_symbol, v_symbol = sympy.symbols("t u v")


def _to_int_poly(expr) -> IntPoly:
    expr = sympy.expand(expr)
    if expr.has(sympy.I):
        # Q(i) coefficients: the product with the conjugate polynomial is rational and keeps the real roots
        expr = sympy.expand(expr * expr.subs(sympy.I, -sympy.I))
    coeffs = [sympy.Rational(c) for c in sympy.Poly(expr, t_symbol).all_coeffs()]
    denominator = lcm(*(int(c.q) for c in coeffs))
    return IntPoly(tuple(int(c * denominator) for c in reversed(coeffs))).primitive_part()


def element_polynomial(x) -> IntPoly:
    """Characteristic polynomial of multiplication by x on Q(beta); every conjugate of x is a root."""
    field = x.field
    columns = []
    power = x
    for _ in range(field.degree):
        columns.append(power.coords)
        power = power * field.beta
    matrix = sympy.Matrix([[sympy.Rational(col[i].numerator, col[i].denominator) for col in columns]
                           for i in range(field.degree)])
    return _to_int_poly(matrix.charpoly(t_symbol).as_expr())


def pair_polynomial(poly: IntPoly, combine) -> IntPoly:
    """
    Polynomial vanishing at combine(r, s) for every pair of roots r, s of poly, r = s included.
    With s the complex conjugate of r this covers real parts, moduli and other real expressions.
    """
    expr = poly.to_sympy().as_expr()
    inner = sympy.resultant(t_symbol - combine(u_symbol, v_symbol), expr.subs(x_symbol, u_symbol), u_symbol)
    return _to_int_poly(sympy.resultant(inner, expr.subs(x_symbol, v_symbol), v_symbol))


@lru_cache(maxsize=256)
def modulus_polynomial(poly: IntPoly) -> IntPoly:
    return pair_polynomial(poly, lambda u, v: u * v)


@lru_cache(maxsize=256)
def real_part_polynomial(poly: IntPoly) -> IntPoly:
    return pair_polynomial(poly, lambda u, v: (u + v) / 2)


@lru_cache(maxsize=256)
def hint_distance_polynomial(poly: IntPoly, hint: Tuple[Fraction, Fraction]) -> IntPoly:
    h = sympy.Rational(hint[0].numerator, hint[0].denominator) \
        + sympy.I * sympy.Rational(hint[1].numerator, hint[1].denominator)
    return pair_polynomial(poly, lambda u, v: -(u - h) * (v - sympy.conjugate(h)))


def multiply(p: IntPoly, q: IntPoly) -> IntPoly:
    product = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            product[i + j] += a * b
    return IntPoly(tuple(product))


def with_root(poly: IntPoly, value: Fraction) -> IntPoly:
    """poly times (q t - p) for value = p/q."""
    value = Fraction(value)
    return multiply(poly, IntPoly((-value.numerator, value.denominator)))


@lru_cache(maxsize=256)
def _root_cells(poly: IntPoly) -> Tuple[Tuple[Optional[Fraction], Optional[Fraction]], ...]:
    """Open intervals, one around each real root, covering no other root."""
    sqf = poly.to_sympy().sqf_part()
    eps = None
    while True:
        isolating = sorted((to_fraction(a), to_fraction(b)) for (a, b), _ in sqf.intervals(eps=eps))
        if all(left[1] < right[0] for left, right in zip(isolating, isolating[1:])):
            break
        eps = sympy.Rational(1, 16) if eps is None else eps / 16
    if not isolating:
        return ()
    separators: List[Optional[Fraction]] = [(left[1] + right[0]) / 2 for left, right in zip(isolating, isolating[1:])]
    return tuple(zip([None] + separators, separators + [None]))


def _inside(cell, interval: Interval) -> bool:
    lo, hi = cell
    return (lo is None or lo < interval.lo) and (hi is None or interval.hi < hi)


def same_real_root(poly: IntPoly, first: Enclosure, second: Enclosure) -> bool:
    """first and second enclose real roots of poly; decides whether they are the same root."""
    cells = _root_cells(poly)
    eps = Fraction(1, 1 << global_state.precision_bits)
    while True:
        a, b = first(eps), second(eps)
        if not a.overlaps(b):
            return False
        if any(_inside(cell, a) and _inside(cell, b) for cell in cells):
            return True
        eps /= 1 << 16


def equals_rational(poly: IntPoly, enclosure: Enclosure, value: Fraction) -> bool:
    """The real root of poly enclosed by `enclosure` equals the rational `value`."""
    return same_real_root(with_root(poly, value), enclosure, lambda eps: Interval.point(value))


def modulus_squared_equals(x, value: Fraction) -> bool:
    """|x|^2 = value under the selected embedding of Q(beta)."""
    if x.is_zero:
        return value == 0
    result = equals_rational(modulus_polynomial(element_polynomial(x)),
                             lambda eps: x.embed(eps).abs_squared(), value)
    whisper("field", f"|{x}|^2 = {value} decided exactly: {result}", level=2)
    return result


def edge_sign(z, a: Tuple[Fraction, Fraction], b: Tuple[Fraction, Fraction]) -> int:
    """Sign of the cross product (b - a) x (z - a), i.e. which side of the line a -> b holds z."""
    dx, dy = b[0] - a[0], b[1] - a[1]

    def enclosure(eps: Fraction) -> Interval:
        box: Box = z.embed(eps)
        return (box.im - Interval.point(a[1])).scale(dx) - (box.re - Interval.point(a[0])).scale(dy)

    eps = Fraction(1, 1 << global_state.precision_bits)
    while True:
        interval = enclosure(eps)
        if interval.lo > 0:
            return 1
        if interval.hi < 0:
            return -1
        if eps.denominator.bit_length() > global_state.exact_check_bits:
            break
        eps /= 1 << 16

    rdx, rdy = sympy.Rational(dx.numerator, dx.denominator), sympy.Rational(dy.numerator, dy.denominator)
    rax, ray = sympy.Rational(a[0].numerator, a[0].denominator), sympy.Rational(a[1].numerator, a[1].denominator)
    poly = pair_polynomial(element_polynomial(z),
                           lambda u, v: rdx * ((u - v) / (2 * sympy.I) - ray) - rdy * ((u + v) / 2 - rax))
    if equals_rational(poly, enclosure, Fraction(0)):
        return 0
    while True:
        interval = enclosure(eps)
        if interval.lo > 0:
            return 1
        if interval.hi < 0:
            return -1
        eps /= 1 << 16


def same_modulus(x, y) -> bool:
    """|x| = |y| under the selected embedding of Q(beta)."""
    poly = multiply(modulus_polynomial(element_polynomial(x)), modulus_polynomial(element_polynomial(y)))
    return same_real_root(poly, lambda eps: x.embed(eps).abs_squared(), lambda eps: y.embed(eps).abs_squared())
