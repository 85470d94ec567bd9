from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from sympy import divisors

from beta_numeration.errors import NotRepresentable
from beta_numeration.field import FieldElement, LaurentIntElement, NumberField


@dataclass(frozen=True)
class Representation:
    """
    Eventually periodic digit string. Stream index k carries the digit of beta^(leading_index - k);
    the preperiod comes first, then the period repeats forever. The zero representation has
    no leading index and no digits.
    """
    leading_index: Optional[int]
    preperiod: Tuple[int, ...] = ()
    period: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(d) for d in self.preperiod))
        object.__setattr__(self, "period", tuple(int(d) for d in self.period))

    @property
    def is_zero(self) -> bool:
        return self.leading_index is None or not any(self.preperiod + self.period)

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def alphabet_bound(self) -> int:
        return max((abs(d) for d in self.preperiod + self.period), default=0)

    @property
    def digits(self) -> Tuple[int, ...]:
        return self.preperiod + self.period

    def digit_at(self, k: int) -> int:
        if self.leading_index is None or k < 0:
            return 0
        if k < len(self.preperiod):
            return self.preperiod[k]
        if not self.period:
            return 0
        return self.period[(k - len(self.preperiod)) % len(self.period)]

    def digit_at_exponent(self, exponent: int) -> int:
        if self.leading_index is None:
            return 0
        return self.digit_at(self.leading_index - exponent)

    @property
    def periodic_from_exponent(self) -> Optional[int]:
        """Highest exponent from which on the digits repeat (or vanish, for a finite string)."""
        if self.leading_index is None:
            return None
        return self.leading_index - len(self.preperiod)

    def shifted(self, k: int) -> "Representation":
        """Multiplication by beta^k."""
        if self.leading_index is None:
            return self
        return Representation(self.leading_index + k, self.preperiod, self.period)

    def scaled(self, c: int) -> "Representation":
        if c == 0 or self.leading_index is None:
            return ZERO
        return Representation(self.leading_index, tuple(c * d for d in self.preperiod),
                              tuple(c * d for d in self.period))

    def unrolled(self, n: int) -> "Representation":
        """Moves n period digits into the preperiod, same value."""
        if not self.period or n <= 0:
            return self
        s = len(self.period)
        extra = tuple(self.period[i % s] for i in range(n))
        shift = n % s
        return Representation(self.leading_index, self.preperiod + extra, self.period[shift:] + self.period[:shift])

    def with_preperiod(self, length: int) -> "Representation":
        """Unrolls (or zero pads a finite string) so the preperiod has at least `length` digits."""
        missing = length - len(self.preperiod)
        if missing <= 0:
            return self
        if not self.period:
            return Representation(self.leading_index, self.preperiod + (0,) * missing, ())
        return self.unrolled(missing)

    def raised_to(self, leading_index: int) -> "Representation":
        """Leading zeros prepended so the string starts at beta^leading_index."""
        if self.leading_index is None or leading_index <= self.leading_index:
            return self
        zeros = (0,) * (leading_index - self.leading_index)
        return Representation(leading_index, zeros + self.preperiod, self.period)

    def with_period_length(self, length: int) -> "Representation":
        """Repeats the period to `length` digits, which must be a multiple of its length."""
        if not self.period:
            return Representation(self.leading_index, self.preperiod, (0,) * length) if length else self
        return Representation(self.leading_index, self.preperiod, self.period * (length // len(self.period)))

    def __str__(self):
        from beta_numeration.digits.notation import format_representation
        return format_representation(self)


ZERO = Representation(None)


def _minimal_period(period: Tuple[int, ...]) -> Tuple[int, ...]:
    s = len(period)
    for t in divisors(s):
        if period[:t] * (s // t) == period:
            return period[:t]
    return period


def canonicalize(rep: Representation) -> Representation:
    if rep.is_zero:
        return ZERO

    leading, preperiod, period = rep.leading_index, rep.preperiod, _minimal_period(rep.period)

    # preperiod digits that continue the period backwards fold into it
    s, folded = len(period), 0
    while folded < len(preperiod) and s and preperiod[-1 - folded] == period[-1 - folded % s]:
        folded += 1
    if folded:
        shift = folded % s
        period = period[-shift:] + period[:-shift] if shift else period
        preperiod = preperiod[:len(preperiod) - folded]

    if period and not any(period):
        period = ()
    if not period:
        last = max(k for k, d in enumerate(preperiod) if d)
        preperiod = preperiod[:last + 1]

    first = next((k for k, d in enumerate(preperiod) if d), None)
    if first is not None:
        return Representation(leading - first, preperiod[first:], period)
    first = next(k for k, d in enumerate(period) if d)
    return Representation(leading - len(preperiod) - first, (), period[first:] + period[:first])


def evaluate(base: FieldElement, leading_index: int, preperiod: Sequence[Union[int, FieldElement]],
             period: Sequence[Union[int, FieldElement]]) -> FieldElement:
    """
    sum d_i base^(L-i) + base^(L-r+1) (sum p_j base^(s-1-j)) / (base^s - 1); digits may be integers or
    field elements.
    """
    field = base.field
    r, s = len(preperiod), len(period)

    head = field.zero
    for digit in preperiod:
        head = head * base + digit
    value = head * base ** (leading_index - r + 1) if r else field.zero

    if s:
        tail = field.zero
        for digit in period:
            tail = tail * base + digit
        value = value + base ** (leading_index - r + 1) * tail / (base ** s - 1)
    return value


def eval_rep(field: NumberField, rep: Representation) -> FieldElement:
    if rep.leading_index is None:
        return field.zero
    leading, r, s = rep.leading_index, len(rep.preperiod), len(rep.period)
    value = field.polynomial_value(leading, rep.preperiod)
    if s:
        value = value + field.polynomial_value(leading - r + s, rep.period) / (field.beta_power(s) - 1)
    return value


def representation_from_laurent(z: LaurentIntElement) -> Representation:
    if z.is_zero:
        return ZERO
    digits = tuple(z.coeff(e) for e in range(z.max_exponent, z.min_exponent - 1, -1))
    return Representation(z.max_exponent, digits, ())


def laurent_from_representation(field: NumberField, rep: Representation) -> LaurentIntElement:
    if rep.leading_index is None:
        return LaurentIntElement(field)
    if rep.period and any(rep.period):
        raise NotRepresentable(f"{rep} is not a finite representation")
    return LaurentIntElement(field, tuple((rep.leading_index - k, d) for k, d in enumerate(rep.preperiod)))
