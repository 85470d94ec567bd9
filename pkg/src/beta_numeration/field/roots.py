from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import List

import sympy

from beta_numeration.field.interval import Box, Interval
from beta_numeration.field.polynomial import IntPoly
from beta_numeration.utils import to_fraction


@dataclass(frozen=True)
class RootBox:
    """
    Rectangle with rational corners holding exactly one root of `poly`, namely the root
    number `index` in sympy's CRootOf order. Refining returns a new, nested box.
    """
    poly: IntPoly
    index: int
    box: Box
    real: bool

    @property
    def exact(self) -> bool:
        return self.box.is_point

    def refine(self, eps: Fraction) -> "RootBox":
        if self.box.size <= eps:
            return self

        half = Fraction(eps) / 2
        dx = sympy.Rational(half.numerator, half.denominator)
        approx = self.poly.all_roots()[self.index].eval_rational(dx=dx, dy=dx)
        re, im = (to_fraction(part) for part in approx.as_real_imag())
        if self.real:
            box = Box(Interval(re - half, re + half), Interval.point(0))
        else:
            box = Box(Interval(re - half, re + half), Interval(im - half, im + half))
        return RootBox(self.poly, self.index, self.box.intersect(box), self.real)

    def __str__(self):
        return f"root {self.index} of {self.poly} in {self.box}"


def _gaussian_rational_roots(poly: IntPoly):
    a0, a1, a2 = poly.coeffs
    disc = a1 * a1 - 4 * a0 * a2
    if disc >= 0:
        return None
    s = isqrt(-disc)
    if s * s != -disc:
        return None
    re = Fraction(-a1, 2 * a2)
    im = Fraction(s, 2 * a2)
    return [(re, -im), (re, im)]


def isolate_roots(poly: IntPoly, eps: Fraction) -> List[RootBox]:
    """
    Pairwise disjoint boxes, one per root, each of size at most eps.
    Linear polynomials and quadratics with Gaussian rational roots get exact point boxes.
    """
    if poly.degree == 1:
        return [RootBox(poly, 0, Box.point(Fraction(-poly.coeffs[0], poly.coeffs[1])), True)]

    if poly.degree == 2:
        exact = _gaussian_rational_roots(poly)
        if exact:
            return [RootBox(poly, i, Box.point(re, im), False) for i, (re, im) in enumerate(exact)]

    # Cauchy bound: every root lies in |z| <= 1 + max|a_i / a_d|
    bound = 1 + Fraction(max(abs(c) for c in poly.coeffs[:-1]), abs(poly.leading))
    plane = Interval(-bound, bound)
    boxes = [RootBox(poly, i, Box(plane, Interval.point(0) if root.is_real else plane), bool(root.is_real))
             for i, root in enumerate(poly.all_roots())]

    size = Fraction(eps)
    while True:
        boxes = [root_box.refine(size) for root_box in boxes]
        if all(not a.box.overlaps(b.box) for i, a in enumerate(boxes) for b in boxes[i + 1:]):
            return boxes
        size /= 4
