from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Optional, Tuple


def _round_down(value: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(floor(value * scale), scale)


def _round_up(value: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(ceil(value * scale), scale)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    @classmethod
    def point(cls, value) -> "Interval":
        value = Fraction(value)
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    def scale(self, c: Fraction) -> "Interval":
        return Interval(self.lo * c, self.hi * c) if c >= 0 else Interval(self.hi * c, self.lo * c)

    def square(self) -> "Interval":
        if self.lo >= 0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))

    def rounded(self, bits: Optional[int]) -> "Interval":
        """Outward rounding onto the 2^-bits grid; a finer grid never leaves a coarser result."""
        if bits is None or self.is_point and self.lo.denominator == 1:
            return self
        return Interval(_round_down(self.lo, bits), _round_up(self.hi, bits))

    def intersect(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class Box:
    """Axis-parallel complex rectangle, re x im."""
    re: Interval
    im: Interval

    @classmethod
    def point(cls, re, im=0) -> "Box":
        return cls(Interval.point(re), Interval.point(im))

    @property
    def width(self) -> Fraction:
        return self.re.width

    @property
    def height(self) -> Fraction:
        return self.im.width

    @property
    def size(self) -> Fraction:
        return max(self.width, self.height)

    @property
    def is_point(self) -> bool:
        return self.re.is_point and self.im.is_point

    @property
    def center(self) -> Tuple[Fraction, Fraction]:
        return self.re.mid, self.im.mid

    @property
    def corners(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return ((self.re.lo, self.im.lo), (self.re.hi, self.im.lo),
                (self.re.hi, self.im.hi), (self.re.lo, self.im.hi))

    def __add__(self, other: "Box") -> "Box":
        return Box(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Box") -> "Box":
        return Box(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Box":
        return Box(-self.re, -self.im)

    def __mul__(self, other: "Box") -> "Box":
        return Box(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def scale(self, c: Fraction) -> "Box":
        return Box(self.re.scale(c), self.im.scale(c))

    def conjugate(self) -> "Box":
        return Box(self.re, -self.im)

    def abs_squared(self) -> Interval:
        return self.re.square() + self.im.square()

    def rounded(self, bits: Optional[int]) -> "Box":
        return Box(self.re.rounded(bits), self.im.rounded(bits))

    def intersect(self, other: "Box") -> "Box":
        return Box(self.re.intersect(other.re), self.im.intersect(other.im))

    def overlaps(self, other: "Box") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def contains(self, re, im=0) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def __str__(self):
        return f"{self.re} x {self.im}i"


def sqrt_bounds(value: Fraction, bits: int) -> Tuple[Fraction, Fraction]:
    """Rationals lo <= sqrt(value) <= hi on the 2^-bits grid, for value >= 0."""
    scale = 1 << bits
    root = isqrt(floor(value * scale * scale))
    lo = Fraction(root, scale)
    hi = lo if lo * lo == value else Fraction(root + 1, scale)
    return lo, hi
