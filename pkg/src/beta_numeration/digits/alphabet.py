from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Tuple

from beta_numeration.digits.representation import Representation, ZERO, canonicalize, eval_rep, evaluate
from beta_numeration.errors import FieldMismatch, InvalidAlphabet, ValueNotPreserved
from beta_numeration.field import FieldElement, NumberField
from beta_numeration.utils import lcm_all
from beta_numeration.whisper import whisper


@dataclass(frozen=True)
class Alphabet:
    digits: Tuple[int, ...]

    def __post_init__(self):
        digits = tuple(sorted(set(int(d) for d in self.digits)))
        if 0 not in digits:
            raise InvalidAlphabet(f"alphabet {list(digits)} does not contain 0")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def range(cls, lo: int, hi: int) -> "Alphabet":
        return cls(tuple(range(lo, hi + 1)))

    def __contains__(self, digit: int) -> bool:
        return digit in self.digits

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)

    @property
    def bound(self) -> int:
        return max(abs(d) for d in self.digits)


@dataclass(frozen=True)
class FieldAlphabet:
    """
    Digits taken from Q(beta). Each element is (p_0 + p_1 beta + ... + p_{d-1} beta^{d-1}) / Q with
    a common denominator Q; representations over it carry element indices as digits.
    """
    elements: Tuple[FieldElement, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise InvalidAlphabet("empty field alphabet")
        if any(e.field != elements[0].field for e in elements):
            raise FieldMismatch("field alphabet mixes fields")
        if not any(e.is_zero for e in elements):
            raise InvalidAlphabet("field alphabet does not contain 0")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def from_integers(cls, field: NumberField, digits: Iterable[int]) -> "FieldAlphabet":
        return cls(tuple(field.rational(d) for d in digits))

    @property
    def field(self) -> NumberField:
        return self.elements[0].field

    @cached_property
    def denominator(self) -> int:
        return lcm_all(e.denominator for e in self.elements)

    @cached_property
    def numerators(self) -> Tuple[Tuple[int, ...], ...]:
        """p_i^(j): integer coordinates of Q * element j."""
        q = self.denominator
        return tuple(tuple(int(c * q) for c in e.coords) for e in self.elements)

    @cached_property
    def zero_index(self) -> int:
        return next(j for j, e in enumerate(self.elements) if e.is_zero)

    def __len__(self):
        return len(self.elements)


def eval_field_digits(field: NumberField, falpha: FieldAlphabet, rep: Representation) -> FieldElement:
    if rep.leading_index is None:
        return field.zero
    return evaluate(field.beta, rep.leading_index, [falpha.elements[j] for j in rep.preperiod],
                    [falpha.elements[j] for j in rep.period])


def reduce_alphabet_to_integers(field: NumberField, falpha: FieldAlphabet, rep: Representation) -> Representation:
    """
    Rewrites a representation over a field alphabet (digits are element indices) as an integer digit
    representation. The result is scaled: eval(result) = Q * eval(rep), where Q = falpha.denominator is
    the common denominator of the alphabet; divide by Q to get the value back. The integer digit at
    beta^e collects p_i of the digit at beta^(e-i), so digits stay within d * max|p| and the leading
    index grows by at most d - 1.
    """
    if falpha.field != field:
        raise FieldMismatch(f"{falpha.field} and {field}")
    if rep.leading_index is None:
        return ZERO

    d = field.degree
    p = falpha.numerators
    leading = rep.leading_index + d - 1

    def index_at(k: int) -> int:
        return rep.digit_at(k) if k >= 0 else falpha.zero_index

    def integer_digit(k: int) -> int:
        return sum(p[index_at(k - (d - 1) + i)][i] for i in range(d))

    r, s = len(rep.preperiod), len(rep.period)
    if s:
        preperiod = tuple(integer_digit(k) for k in range(r + d - 1))
        period = tuple(integer_digit(k) for k in range(r + d - 1, r + d - 1 + s))
    else:
        # past its end a finite string holds the zero element, which has no numerators
        stream = rep.preperiod
        preperiod = tuple(sum(p[stream[k - (d - 1) + i]][i] if 0 <= k - (d - 1) + i < r else 0
                              for i in range(d)) for k in range(r + d - 1))
        period = ()

    bound = d * max((abs(c) for row in p for c in row), default=0)
    assert all(abs(b) <= bound for b in preperiod + period)

    result = Representation(leading, preperiod, period)
    expected = eval_field_digits(field, falpha, rep) * falpha.denominator
    if eval_rep(field, result) != expected:
        raise ValueNotPreserved(f"integer alphabet reduction changed the value of {rep}")
    whisper("digits", f"reduced to integer digits with Q = {falpha.denominator}", level=1)
    return canonicalize(result)
