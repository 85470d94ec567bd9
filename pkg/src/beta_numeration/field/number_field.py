from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import floor as int_floor, isqrt
from operator import mul
from threading import Lock
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from beta_numeration import global_state
from beta_numeration.errors import (AmbiguousRootHint, DivisionByZero, FieldMismatch, NoRootOutsideUnitDisk,
                                    NotRealBase, ParseError, ReduciblePolynomial)
from beta_numeration.field.algebraic import (equals_rational, hint_distance_polynomial, modulus_polynomial,
                                              real_part_polynomial, same_real_root)
from beta_numeration.field.interval import Box, Interval
from beta_numeration.field.polynomial import IntPoly, integer_relation, x_symbol
from beta_numeration.field.roots import RootBox, isolate_roots
from beta_numeration.utils import lcm_all, to_fraction
from beta_numeration.whisper import whisper

Scalar = Union[int, Fraction]

_HORNER_CHUNK = 32


@lru_cache(maxsize=256)
def _horner_weights(p: int, a: int, length: int) -> Tuple[int, ...]:
    return tuple(p ** (length - 1 - i) * a ** i for i in range(length))


def _bits_for(eps: Fraction) -> int:
    return max(global_state.precision_bits, (eps.denominator // max(eps.numerator, 1)).bit_length() + 8)


class NumberField:
    """
    Q(beta) for beta a selected root of an irreducible primitive integer polynomial with
    positive leading coefficient. Elements are coordinate vectors over 1, beta, ..., beta^(d-1).
    """

    def __init__(self, minpoly: IntPoly, beta_box: RootBox):
        self.minpoly = minpoly
        self.degree = minpoly.degree
        self.leading_coeff = minpoly.leading
        self._beta_box = beta_box
        self._refine_lock = Lock()

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly \
            and self._beta_box.index == other._beta_box.index

    def __hash__(self):
        return hash((self.minpoly, self._beta_box.index))

    def __repr__(self):
        return f"NumberField({self.minpoly}, root {self._beta_box.index})"

    @property
    def beta_box(self) -> RootBox:
        return self._beta_box

    @property
    def is_real(self) -> bool:
        return self._beta_box.real

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def spec(self) -> str:
        return ",".join(str(c) for c in self.minpoly.coeffs)

    def t_x_coefficients(self) -> Tuple[int, Tuple[int, ...]]:
        """
        (a, (a'_0, ..., a'_{d-1})) of the form a x^d - a'_{d-1} x^{d-1} - ... - a'_0 of the minimal
        polynomial; the stored form is sum a_i x^i, so a'_i = -a_i.
        """
        return self.leading_coeff, tuple(-c for c in self.minpoly.coeffs[:-1])

    # elements

    def element(self, coords: Iterable[Scalar]) -> "FieldElement":
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            raise ParseError(f"{len(coords)} coordinates for a degree {self.degree} field")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return FieldElement(self, tuple(coords))

    def rational(self, value: Scalar) -> "FieldElement":
        return self.element([value])

    @cached_property
    def zero(self) -> "FieldElement":
        return self.rational(0)

    @cached_property
    def one(self) -> "FieldElement":
        return self.rational(1)

    @cached_property
    def beta(self) -> "FieldElement":
        if self.degree == 1:
            return self.rational(Fraction(-self.minpoly.coeffs[0], self.minpoly.coeffs[1]))
        return self.element([0, 1])

    @lru_cache(maxsize=4096)
    def beta_power(self, exponent: int) -> "FieldElement":
        if exponent == 0:
            return self.one
        if exponent < 0:
            return self.beta_power(-exponent).inverse()
        half = self.beta_power(exponent // 2)
        square = half * half
        return square * self.beta if exponent % 2 else square

    def polynomial_value(self, top_exponent: int, digits: Sequence[int]) -> "FieldElement":
        """sum of digits[k] beta^(top_exponent - k) for integer digits."""
        if not any(digits):
            return self.zero
        if self.degree == 1:
            # rational base p/a: integer Horner on sum d_k p^(n-1-k) a^k, a chunk at a time
            p, a = -self.minpoly.coeffs[0], self.minpoly.coeffs[1]
            total, scale = 0, 1
            for begin in range(0, len(digits), _HORNER_CHUNK):
                chunk = digits[begin:begin + _HORNER_CHUNK]
                total = total * p ** len(chunk) + scale * sum(map(mul, chunk, _horner_weights(p, a, len(chunk))))
                scale *= a ** len(chunk)
            bottom = top_exponent - len(digits) + 1
            return self.rational(Fraction(total, a ** (len(digits) - 1))) * self.beta_power(bottom)
        value, last = self.zero, None
        for k, digit in enumerate(digits):
            if digit:
                value = (value * self.beta_power(k - last) if last is not None else value) + digit
                last = k
        return value * self.beta_power(top_exponent - last)

    def _reduce(self, product: List[Fraction]) -> Tuple[Fraction, ...]:
        d = self.degree
        a = self.minpoly.coeffs
        for k in range(len(product) - 1, d - 1, -1):
            c = product[k]
            if c:
                factor = c / a[d]
                for i in range(d):
                    product[k - d + i] -= factor * a[i]
                product[k] = Fraction(0)
        return tuple(product[:d])

    # embeddings

    def refined_beta_box(self, eps: Fraction) -> RootBox:
        """
        Box of beta of size at most eps. The finest box computed so far is kept; RootBox is immutable,
        so callers holding an earlier box are unaffected. Bench workers share fields across threads.
        """
        with self._refine_lock:
            current = self._beta_box
            if current.box.size > eps:
                current = current.refine(eps)
                self._beta_box = current
        return current

    @cached_property
    def exact_beta(self) -> Optional[Tuple[Fraction, Fraction]]:
        """Rational (re, im) of beta when its box is exact, i.e. beta is a Gaussian rational."""
        if self._beta_box.exact:
            return self._beta_box.box.re.lo, self._beta_box.box.im.lo
        return None

    def exact_complex(self, x: "FieldElement") -> Optional[Tuple[Fraction, Fraction]]:
        if not self.exact_beta:
            return None
        u, v = self.exact_beta
        re, im = Fraction(0), Fraction(0)
        for c in reversed(x.coords):
            re, im = re * u - im * v + c, re * v + im * u
        return re, im

    def embed(self, x: "FieldElement", eps: Fraction) -> Box:
        """Rectangle of width and height at most eps certified to contain x."""
        exact = self.exact_complex(x)
        if exact:
            return Box.point(*exact)
        if x.is_rational:
            return Box.point(x.coords[0])

        eps = Fraction(eps)
        bits = _bits_for(eps)
        width = eps
        while True:
            beta = self.refined_beta_box(width).box
            value = Box.point(x.coords[-1])
            for c in reversed(x.coords[:-1]):
                value = (value * beta).rounded(bits) + Box.point(c)
            if value.size <= eps:
                return value
            width /= 16

    def conjugate_boxes(self, eps: Fraction) -> List[RootBox]:
        return isolate_roots(self.minpoly, Fraction(eps))

    @cached_property
    def _sympy_modulus(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.minpoly.coeffs)), x_symbol, domain=sympy.QQ)

    def _invert(self, x: "FieldElement") -> "FieldElement":
        if x.is_zero:
            raise DivisionByZero("inverse of zero in Q(beta)")
        if self.degree == 1:
            return self.rational(1 / x.coords[0])
        numerator = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(x.coords)],
                               x_symbol, domain=sympy.QQ)
        inverse = numerator.invert(self._sympy_modulus)
        return self.element(reversed([to_fraction(c) for c in inverse.all_coeffs()]))


@dataclass(frozen=True, eq=False)
class FieldElement:
    field: NumberField
    coords: Tuple[Fraction, ...]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        return isinstance(other, FieldElement) and self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} and {other.field}")
        return other

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    @property
    def denominator(self) -> int:
        """Least common denominator q of the coordinates."""
        return lcm_all(c.denominator for c in self.coords)

    def key(self) -> Tuple[int, ...]:
        """Exact hash key: the common denominator followed by the integer numerators."""
        q = self.denominator
        return (q,) + tuple(int(c * q) for c in self.coords)

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        product = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    product[i + j] += a * b
        return FieldElement(self.field, self.field._reduce(product))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return self.field._invert(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero in Q(beta)")
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** -exponent
        result, base = self.field.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def embed(self, eps: Fraction) -> Box:
        return self.field.embed(self, eps)

    def sign(self) -> int:
        return sign(self)

    def floor(self) -> int:
        return floor(self)

    def __str__(self):
        if self.is_rational:
            return str(self.coords[0])
        return ";".join(str(c) for c in self.coords)

    __repr__ = __str__


# exact decisions on real elements

def _require_real(x: FieldElement):
    if not x.field.is_real and not x.is_rational:
        raise NotRealBase(f"{x.field} has a non-real generator")


def sign(x: FieldElement) -> int:
    if x.is_rational:
        c = x.coords[0]
        return (c > 0) - (c < 0)
    _require_real(x)
    if x.is_zero:
        return 0
    eps = Fraction(1, 1 << global_state.precision_bits)
    while True:
        interval = x.embed(eps).re
        if interval.lo > 0:
            return 1
        if interval.hi < 0:
            return -1
        eps /= 1 << 16


def compare(x: FieldElement, y) -> int:
    return sign(x - y)


def floor(x: FieldElement) -> int:
    if x.is_rational:
        return int_floor(x.coords[0])
    _require_real(x)
    eps = Fraction(1, 1 << global_state.precision_bits)
    boundary_checked = False
    while True:
        interval = x.embed(eps).re
        low, high = int_floor(interval.lo), int_floor(interval.hi)
        if low == high:
            return low
        if not boundary_checked and eps.denominator.bit_length() > global_state.exact_check_bits:
            boundary_checked = True
            if x == high:
                return high
        eps /= 1 << 16


def abs_squared(x: FieldElement, eps: Fraction) -> Interval:
    return x.embed(eps).abs_squared()


# field construction

def _parse_hint(root_hint) -> Optional[Tuple[Fraction, Fraction]]:
    if root_hint is None:
        return None
    if isinstance(root_hint, str):
        parts = root_hint.replace(" ", "").split(",")
        try:
            re, im = (Fraction(parts[0]), Fraction(parts[1]) if len(parts) > 1 else Fraction(0))
        except (ValueError, ZeroDivisionError) as error:
            raise ParseError(f"bad root hint {root_hint!r}") from error
        return re, im
    if isinstance(root_hint, complex):
        return Fraction(root_hint.real), Fraction(root_hint.imag)
    if isinstance(root_hint, tuple):
        return Fraction(root_hint[0]), Fraction(root_hint[1])
    return Fraction(root_hint), Fraction(0)


def _is_mirror(boxes: Sequence[RootBox], i: int, j: int) -> bool:
    """Root j is -conj(root i): the only box meeting -conj(box i) is box j."""
    mirrored = -boxes[i].box.conjugate()
    hits = [k for k, root_box in enumerate(boxes) if root_box.box.overlaps(mirrored)]
    return hits == [j]


def _keys_tie(boxes: List[RootBox], leaders: List[int], key, annihilator: IntPoly) -> bool:
    def enclosure(i: int):
        return lambda eps: key(boxes[i].refine(eps).box)

    return all(same_real_root(annihilator, enclosure(leaders[0]), enclosure(i)) for i in leaders[1:])


def _pick(boxes: List[RootBox], candidates: List[int], key, annihilator: Callable[[], IntPoly],
          mirror_ties: bool, what: str) -> List[int]:
    """
    Indices among candidates maximizing key(box) -> Interval. The key of every root is a real root of
    annihilator(); leaders still overlapping after exact_check_bits are compared exactly.
    """
    eps = boxes[candidates[0]].box.size or Fraction(1, 1 << global_state.precision_bits)
    while True:
        intervals = {i: key(boxes[i].box) for i in candidates}
        best_lo = max(interval.lo for interval in intervals.values())
        leaders = [i for i in candidates if intervals[i].hi >= best_lo]
        if len(leaders) == 1:
            return leaders
        if mirror_ties and len(leaders) == 2 and _is_mirror(boxes, leaders[0], leaders[1]):
            return leaders
        if all(boxes[i].exact for i in leaders):
            return leaders
        if eps.denominator.bit_length() > global_state.exact_check_bits \
                and _keys_tie(boxes, leaders, key, annihilator()):
            whisper("field", f"{what} tie between roots {leaders} decided exactly")
            return leaders
        eps /= 1 << 16
        for i in leaders:
            boxes[i] = boxes[i].refine(eps)
        candidates = leaders


def _select_root(poly: IntPoly, boxes: List[RootBox], hint) -> int:
    if len(boxes) == 1:
        return 0

    if hint is not None:
        hint_box = Box.point(*hint)
        leaders = _pick(boxes, list(range(len(boxes))), lambda box: -(box - hint_box).abs_squared(),
                        lambda: hint_distance_polynomial(poly, hint), False, "hint distance")
        if len(leaders) > 1:
            raise AmbiguousRootHint(f"hint {hint} is equally close to roots {leaders}")
        return leaders[0]

    # one representative per conjugate pair: real roots and roots in the upper half plane
    eps = Fraction(1, 1 << global_state.precision_bits)
    while any(not b.real and b.box.im.lo <= 0 <= b.box.im.hi for b in boxes):
        eps /= 1 << 8
        boxes[:] = [b if b.real else b.refine(eps) for b in boxes]
    upper = [i for i, b in enumerate(boxes) if b.real or b.box.im.lo > 0]

    leaders = _pick(boxes, upper, lambda box: box.abs_squared(), lambda: modulus_polynomial(poly),
                    poly.is_even_or_odd(), "modulus")
    leaders = _pick(boxes, leaders, lambda box: box.re, lambda: real_part_polynomial(poly), False, "real part")
    return leaders[0]


def _modulus_exceeds_one(root_box: RootBox) -> bool:
    eps = Fraction(1, 1 << global_state.precision_bits)
    while True:
        modulus = root_box.box.abs_squared()
        if modulus.lo > 1:
            return True
        if modulus.hi < 1 or root_box.exact:
            return False
        if eps.denominator.bit_length() > global_state.exact_check_bits and equals_rational(
                modulus_polynomial(root_box.poly), lambda e: root_box.refine(e).box.abs_squared(), Fraction(1)):
            return False
        eps /= 1 << 16
        root_box = root_box.refine(eps)


@lru_cache(maxsize=128)
def _make_field(coeffs: Tuple[int, ...], hint: Optional[Tuple[Fraction, Fraction]]) -> NumberField:
    poly = IntPoly(coeffs)
    if poly.degree < 1:
        raise ParseError(f"field polynomial {coeffs} must have degree >= 1")
    poly = poly.primitive_part()
    if not poly.is_irreducible():
        raise ReduciblePolynomial(f"{poly} is reducible over the rationals")

    boxes = isolate_roots(poly, Fraction(1, 1 << global_state.precision_bits))
    index = _select_root(poly, boxes, hint)
    if not _modulus_exceeds_one(boxes[index]):
        raise NoRootOutsideUnitDisk(f"selected root of {poly} does not have modulus > 1")

    field = NumberField(poly, boxes[index])
    whisper("field", f"Q(beta) with beta root {index} of {poly}, box {boxes[index].box}")
    return field


def make_field(coeffs: Sequence[int], root_hint=None) -> NumberField:
    """
    Builds Q(beta) from ascending integer coefficients. Without a hint, beta is a root of
    maximal modulus, ties broken by larger real part and then positive imaginary part.
    """
    return _make_field(tuple(int(c) for c in coeffs), _parse_hint(root_hint))


def parse_field(text: str, root_hint=None) -> NumberField:
    return make_field(IntPoly.parse(text).coeffs, root_hint)


# named operations

def elem_add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def elem_sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def elem_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def elem_inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def embed(x: FieldElement, eps: Fraction) -> Box:
    return x.embed(eps)


def conjugate_boxes(field: NumberField, eps: Fraction) -> List[RootBox]:
    return field.conjugate_boxes(eps)


@lru_cache(maxsize=256)
def minpoly_of_power(field: NumberField, m: int) -> IntPoly:
    """Primitive minimal polynomial of beta^m: the first linear relation among 1, gamma, gamma^2, ..."""
    gamma = field.beta_power(m)
    columns = [field.one.coords]
    power = field.one
    for _ in range(field.degree):
        power = power * gamma
        columns.append(power.coords)
        relation = integer_relation(columns)
        if relation:
            return IntPoly(relation)
    raise ArithmeticError(f"no relation for beta^{m} in {field}")


@lru_cache(maxsize=128)
def imaginary_unit(field: NumberField) -> Optional[FieldElement]:
    """
    i as an element of Q(beta), or None. Decided for degree <= 2 only: a quadratic field contains i
    exactly when its discriminant is minus a perfect square, and then i = ±(2 a_2 beta + a_1) / s.
    """
    if field.degree != 2:
        return None
    a0, a1, a2 = field.minpoly.coeffs
    disc = a1 * a1 - 4 * a0 * a2
    s = isqrt(-disc) if disc < 0 else 0
    if not s or s * s != -disc:
        return None
    unit = (field.beta * (2 * a2) + a1) / s
    _, im = field.exact_complex(unit)
    return unit if im > 0 else -unit
