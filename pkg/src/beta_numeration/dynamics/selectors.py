from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from math import ceil
from typing import List, Optional, Sequence, Tuple, Union

from beta_numeration import global_state
from beta_numeration.digits import Alphabet, FieldAlphabet
from beta_numeration.dynamics.geometry import (DiskRegion, IntervalRegion, PolygonRegion, convex_hull,
                                               polygon_covered)
from beta_numeration.errors import (CoverageFails, GaussianDigitsUnavailable, NotNegativeRealBase, NotRealBase)
from beta_numeration.field import (Box, FieldElement, Interval, NumberField, floor, imaginary_unit, same_modulus,
                                   sign, sqrt_bounds)
from beta_numeration.whisper import whisper

Region = Union[IntervalRegion, DiskRegion, PolygonRegion]


class SelectorKind(str, Enum):
    greedy = "greedy"
    balanced = "balanced"
    itosadahiro = "itosadahiro"
    thurston_disk = "thurston_disk"
    thurston_polygon = "thurston_polygon"


class DigitSelector(ABC):
    """
    A region Omega with a digit map D such that T(x) = beta x - D(x) stays in Omega.
    Digits are integers, or indices into `field_alphabet` when that is set.
    """
    kind: SelectorKind
    field: NumberField
    region: Region
    field_alphabet: Optional[FieldAlphabet] = None

    @abstractmethod
    def digit(self, x: FieldElement) -> int:
        pass

    @property
    @abstractmethod
    def digit_values(self) -> Sequence[FieldElement]:
        pass

    def digit_value(self, digit: int) -> FieldElement:
        if self.field_alphabet:
            return self.field_alphabet.elements[digit]
        return self.field.rational(digit)

    def step(self, x: FieldElement) -> Tuple[int, FieldElement]:
        digit = self.digit(x)
        return digit, self.field.beta * x - self.digit_value(digit)

    def contains(self, x: FieldElement) -> bool:
        return self.region.contains(x)

    @property
    def denominator(self) -> int:
        return self.field_alphabet.denominator if self.field_alphabet else 1

    def __str__(self):
        return f"{self.kind.value} selector over {self.field}"


class IntervalSelector(DigitSelector):
    """Omega = [lo, lo + 1) and D(x) = floor(beta x - lo); covers the greedy, balanced and alternating cases."""

    def __init__(self, kind: SelectorKind, field: NumberField, lo: FieldElement, alphabet: Alphabet):
        self.kind = kind
        self.field = field
        self.region = IntervalRegion(lo, lo + 1)
        self.alphabet = alphabet

    def digit(self, x: FieldElement) -> int:
        digit = floor(self.field.beta * x - self.region.lo)
        assert digit in self.alphabet, f"{x} lies outside the selector region"
        return digit

    @property
    def digit_values(self) -> Sequence[FieldElement]:
        return [self.field.rational(a) for a in self.alphabet]


def _require_positive_real(field: NumberField):
    if not field.is_real or sign(field.beta) < 0:
        raise NotRealBase(f"{field} does not have a real base > 1")


def greedy_selector(field: NumberField) -> IntervalSelector:
    _require_positive_real(field)
    ceiling = -floor(-field.beta)
    return IntervalSelector(SelectorKind.greedy, field, field.zero, Alphabet.range(0, ceiling - 1))


def balanced_selector(field: NumberField) -> IntervalSelector:
    _require_positive_real(field)
    half = field.beta / 2
    return IntervalSelector(SelectorKind.balanced, field, field.rational(Fraction(-1, 2)),
                            Alphabet.range(-floor(half), -floor(-half) - 1))


def ito_sadahiro_selector(field: NumberField) -> IntervalSelector:
    if not field.is_real or sign(field.beta) > 0:
        raise NotNegativeRealBase(f"{field} does not have a real base < -1")
    r = field.beta
    lo = r / (1 - r)
    return IntervalSelector(SelectorKind.itosadahiro, field, lo, Alphabet.range(0, floor(-r)))


class ThurstonSelector(DigitSelector):
    """
    Complex selector: D(x) is the digit a nearest to beta x with beta x - a in Omega, ties going to
    the smallest digit. Construction certifies beta Omega inside the union of the translates a + Omega.
    """

    def __init__(self, field: NumberField, region: Union[DiskRegion, PolygonRegion],
                 digits: Union[Alphabet, FieldAlphabet]):
        self.field = field
        self.region = region
        if isinstance(digits, FieldAlphabet):
            self.field_alphabet = digits
            self.alphabet = None
        else:
            self.alphabet = digits
        self.kind = SelectorKind.thurston_disk if isinstance(region, DiskRegion) else SelectorKind.thurston_polygon
        self._check_coverage()

    @property
    def digit_values(self) -> Sequence[FieldElement]:
        if self.field_alphabet:
            return self.field_alphabet.elements
        return [self.field.rational(a) for a in self.alphabet]

    def _labels(self) -> List[int]:
        return list(range(len(self.field_alphabet))) if self.field_alphabet else list(self.alphabet)

    def _tie_key(self, label: int):
        if self.field_alphabet:
            value = self.field_alphabet.elements[label]
            return self.field.exact_complex(value) or value.coords
        return label

    def _closer(self, z: FieldElement, first: int, second: int) -> int:
        """-1, 0 or 1 as |z - first| is smaller than, equal to or larger than |z - second|."""
        u, v = z - self.digit_value(first), z - self.digit_value(second)
        exact = self.field.exact_complex(u), self.field.exact_complex(v)
        if exact[0] and exact[1]:
            du, dv = (re * re + im * im for re, im in exact)
            return (du > dv) - (du < dv)
        eps = Fraction(1, 1 << global_state.precision_bits)
        while True:
            du, dv = u.embed(eps).abs_squared(), v.embed(eps).abs_squared()
            if du.hi < dv.lo:
                return -1
            if dv.hi < du.lo:
                return 1
            if eps.denominator.bit_length() > global_state.exact_check_bits and same_modulus(u, v):
                return 0
            eps /= 1 << 16

    def digit(self, x: FieldElement) -> int:
        z = self.field.beta * x

        def order(first: int, second: int) -> int:
            nearer = self._closer(z, first, second)
            if nearer:
                return nearer
            a, b = self._tie_key(first), self._tie_key(second)
            return (a > b) - (a < b)

        for label in sorted(self._labels(), key=cmp_to_key(order)):
            if self.region.contains(z - self.digit_value(label)):
                return label
        raise CoverageFails(f"no admissible digit for beta * {x}")

    # coverage certificates

    def _digit_boxes(self, eps: Fraction) -> List[Box]:
        return [value.embed(eps) for value in self.digit_values]

    def _check_coverage(self):
        if isinstance(self.region, PolygonRegion):
            covered = self._polygon_coverage()
        else:
            covered = self._disk_coverage()
        if not covered:
            raise CoverageFails(f"beta * Omega is not covered by the digit translates of {self}")
        whisper("dynamics", f"coverage certified for {self}", level=1)

    def _polygon_coverage(self) -> bool:
        eps = Fraction(1, 1 << global_state.precision_bits)
        while True:
            beta = self.field.refined_beta_box(eps).box
            digits = self._digit_boxes(eps)
            if any(not box.is_point for box in digits):
                raise CoverageFails("polygon coverage needs digits with exact coordinates")
            images = [(cr * vr - ci * vi, cr * vi + ci * vr)
                      for cr, ci in beta.corners for vr, vi in self.region.vertices]
            tiles = [self.region.translated((box.re.lo, box.im.lo)) for box in digits]
            if polygon_covered(convex_hull(images), tiles):
                return True
            if beta.is_point or eps.denominator.bit_length() > 64:
                return False
            eps /= 1 << 16

    def _disk_coverage(self, depth: int = 12) -> bool:
        eps = Fraction(1, 1 << global_state.precision_bits)
        beta_squared = self.field.refined_beta_box(eps).box.abs_squared().hi
        outer = self.region.radius_squared * beta_squared
        _, half = sqrt_bounds(outer, 8)
        digits = self._digit_boxes(eps)
        radius_squared = self.region.radius_squared

        def inside_some_disk(cell: Box) -> bool:
            return any(all((cx - dx) ** 2 + (cy - dy) ** 2 < radius_squared
                           for cx, cy in cell.corners for dx, dy in digit.corners) for digit in digits)

        def misses_target(cell: Box) -> bool:
            nearest_x = min(max(Fraction(0), cell.re.lo), cell.re.hi)
            nearest_y = min(max(Fraction(0), cell.im.lo), cell.im.hi)
            return nearest_x ** 2 + nearest_y ** 2 >= outer

        cells = [Box(Interval(-half, half), Interval(-half, half))]
        for _ in range(depth):
            pending = []
            for cell in cells:
                if misses_target(cell) or inside_some_disk(cell):
                    continue
                (re_mid, im_mid) = cell.center
                for re in (Interval(cell.re.lo, re_mid), Interval(re_mid, cell.re.hi)):
                    for im in (Interval(cell.im.lo, im_mid), Interval(im_mid, cell.im.hi)):
                        pending.append(Box(re, im))
            if not pending:
                return True
            cells = pending
        return False


def thurston_selector(field: NumberField, digits: Union[Alphabet, FieldAlphabet, Sequence[int]],
                      region: Union[DiskRegion, PolygonRegion]) -> ThurstonSelector:
    if not isinstance(digits, (Alphabet, FieldAlphabet)):
        digits = Alphabet(tuple(digits))
    return ThurstonSelector(field, region, digits)


def gaussian_digits(field: NumberField) -> FieldAlphabet:
    """Gaussian integers a with |a| < 1 + |beta|: the translates a + B(0, 1) meeting B(0, |beta|)."""
    unit = imaginary_unit(field)
    if unit is None:
        raise GaussianDigitsUnavailable(f"i is not an element of {field}")
    beta_squared = field.beta.embed(Fraction(1, 1 << global_state.precision_bits)).abs_squared()
    _, modulus = sqrt_bounds(beta_squared.hi, 8)
    bound = ceil(1 + modulus)

    def admissible(m2: int) -> bool:
        if m2 <= 1:
            return True
        # |a| - 1 < |beta|  <=>  m2 + 1 - |beta|^2 < 2 |a|; beta is a Gaussian rational here, so exact
        slack = m2 + 1 - beta_squared.lo
        return slack < 0 or slack * slack < 4 * m2

    elements = [field.rational(x) + unit * y
                for x in range(-bound, bound + 1) for y in range(-bound, bound + 1) if admissible(x * x + y * y)]
    return FieldAlphabet(tuple(elements))


def thurston_default(field: NumberField) -> ThurstonSelector:
    return ThurstonSelector(field, DiskRegion(Fraction(1)), gaussian_digits(field))


def figure_hexagon() -> PolygonRegion:
    return PolygonRegion(((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)))
