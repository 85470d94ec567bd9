from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from beta_numeration import global_state
from beta_numeration.digits import Representation, ZERO, canonicalize, eval_field_digits, eval_rep, \
    reduce_alphabet_to_integers
from beta_numeration.dynamics.geometry import DiskRegion, IntervalRegion, PolygonRegion
from beta_numeration.dynamics.selectors import DigitSelector
from beta_numeration.errors import NoRepeatWithinBudget, NotRepresentable, ValueNotPreserved
from beta_numeration.field import FieldElement, NumberField, sign, sqrt_bounds
from beta_numeration.utils import timeit
from beta_numeration.whisper import whisper


@dataclass(frozen=True)
class OrbitTrace:
    """
    Remainders T_0, T_1, ... with T_j = beta T_{j-1} - a_j, where T_0 = x / beta^n lies in the region
    and a_j is the digit of beta^(n - j). `repeat` = (i, j) when T_i = T_j.
    """
    scale: int
    remainders: Tuple[FieldElement, ...]
    digits: Tuple[int, ...]
    repeat: Optional[Tuple[int, int]]

    def representation(self) -> Representation:
        if self.repeat is None:
            raise NoRepeatWithinBudget(f"no repeated remainder among {len(self.remainders)}")
        i, j = self.repeat
        return Representation(self.scale - 1, self.digits[:i], self.digits[i:j])


def _representable(selector: DigitSelector, x: FieldElement):
    region = selector.region
    if isinstance(region, IntervalRegion) and not region.contains_zero_inside:
        # the cone of [lo, hi) with lo = 0 is the nonnegative half line
        if sign(x) < 0:
            raise NotRepresentable(f"{x} is negative, outside the {selector.kind.value} selector's cone")


def scale_into_domain(selector: DigitSelector, x: FieldElement) -> int:
    """Least n >= 0 with x / beta^n in the selector region."""
    _representable(selector, x)
    n = 0
    y = x
    inverse = selector.field.beta.inverse()
    while not selector.contains(y):
        y = y * inverse
        n += 1
    whisper("dynamics", f"{x} scaled by beta^-{n}", level=2)
    return n


def orbit_trace(field: NumberField, selector: DigitSelector, x: FieldElement,
                max_steps: Optional[int] = None) -> OrbitTrace:
    if max_steps is None:
        max_steps = global_state.max_orbit_steps
    n = scale_into_domain(selector, x)
    remainder = x * field.beta_power(-n)

    remainders: List[FieldElement] = [remainder]
    digits: List[int] = []
    seen: Dict[Tuple[int, ...], int] = {remainder.key(): 0}
    while len(remainders) < max_steps:
        digit, remainder = selector.step(remainder)
        digits.append(digit)
        remainders.append(remainder)
        key = remainder.key()
        if key in seen:
            repeat = (seen[key], len(remainders) - 1)
            whisper("dynamics", f"remainder repeats at steps {repeat}", level=1)
            return OrbitTrace(n, tuple(remainders), tuple(digits), repeat)
        seen[key] = len(remainders) - 1
        whisper("dynamics", f"T_{len(remainders) - 1} = {remainder}, digit {digit}", level=2)
    return OrbitTrace(n, tuple(remainders), tuple(digits), None)


@timeit
def orbit_periodize(field: NumberField, selector: DigitSelector, x: FieldElement,
                    max_steps: Optional[int] = None) -> Representation:
    """
    Eventually periodic representation of x from the first repeated remainder of the selector's orbit.
    With a field alphabet the orbit runs on x / Q and the digits are then rewritten over the integers.
    """
    if x.is_zero:
        return ZERO

    if selector.field_alphabet:
        falpha = selector.field_alphabet
        trace = orbit_trace(field, selector, x / falpha.denominator, max_steps)
        indexed = trace.representation()
        if eval_field_digits(field, falpha, indexed) * falpha.denominator != x:
            raise ValueNotPreserved(f"orbit of {x} does not evaluate back")
        rep = reduce_alphabet_to_integers(field, falpha, indexed)
    else:
        rep = canonicalize(orbit_trace(field, selector, x, max_steps).representation())

    if eval_rep(field, rep) != x:
        raise ValueNotPreserved(f"orbit representation of {x} does not evaluate back")
    return rep


def exclusion_constant_squared(selector: DigitSelector) -> Fraction:
    """
    Lower bound on c^2, c = inf{|z| : z outside the region}, within the selector's representable cone.
    Exact for disks and polygons.
    """
    region = selector.region
    if isinstance(region, DiskRegion):
        return region.radius_squared
    if isinstance(region, PolygonRegion):
        return region.boundary_distance_squared()

    eps = Fraction(1, 1 << global_state.precision_bits)
    lo, hi = region.lo.embed(eps).re, region.hi.embed(eps).re
    if sign(region.lo) == 0:
        bound = hi.lo
    else:
        bound = min(-lo.hi, hi.lo)
    return bound * bound


def exclusion_constant(selector: DigitSelector) -> Fraction:
    lo, _ = sqrt_bounds(exclusion_constant_squared(selector), global_state.precision_bits)
    return lo


def remainder_bound(selector: DigitSelector) -> Fraction:
    """Upper bound on max|a| / (|beta| - 1), which bounds every remainder."""
    bits = global_state.precision_bits
    eps = Fraction(1, 1 << bits)
    modulus, _ = sqrt_bounds(selector.field.beta.embed(eps).abs_squared().lo, bits)
    while modulus <= 1:
        bits *= 2
        eps = Fraction(1, 1 << bits)
        modulus, _ = sqrt_bounds(selector.field.beta.embed(eps).abs_squared().lo, bits)
    largest = max(sqrt_bounds(value.embed(eps).abs_squared().hi, bits)[1] for value in selector.digit_values)
    return largest / (modulus - 1)
