from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, Sequence, Tuple

from beta_numeration.digits import Alphabet, Representation, ZERO, canonicalize, eval_rep
from beta_numeration.errors import DigitOutOfRange, FieldMismatch, ParseError, ValueNotPreserved
from beta_numeration.field import NumberField, make_field
from beta_numeration.whisper import whisper

Window = Tuple[int, ...]


def apply_window(rep: Representation, t: int, r: int, phi: Callable[[Window], int]) -> Representation:
    """
    z_e = phi(x_{e-t}, ..., x_{e+r}) at every exponent e, the window listed by increasing exponent.
    The output starts t positions higher; its preperiod grows by t + r digits and its period maps through.
    """
    if rep.leading_index is None:
        return ZERO
    width = t + r + 1

    def output(k: int) -> int:
        return phi(tuple(rep.digit_at(k - w) for w in range(width)))

    pre, s = len(rep.preperiod), len(rep.period)
    head = pre + t + r
    preperiod = tuple(output(k) for k in range(head))
    period = tuple(output(k) for k in range(head, head + s))
    return Representation(rep.leading_index + t, preperiod, period)


def _check_range(rep: Representation, lo: int, hi: int):
    for digit in rep.digits:
        if not lo <= digit <= hi:
            raise DigitOutOfRange(f"digit {digit} outside {{{lo}..{hi}}}")


def _check_three_halves(field: NumberField):
    if field.minpoly.coeffs != (-3, 2):
        raise FieldMismatch(f"base 3/2 conversion applied over {field}")


def _carry_up(a: int) -> int:
    return 1 if 1 <= a <= 3 else 0


def _carry_down(c: int) -> int:
    return -1 if -3 <= c <= -1 else 0


def _first_pass(window: Window) -> int:
    lower, a = window
    c = a - 3 * _carry_up(a) + 2 * _carry_up(lower)
    assert -3 <= c <= 2
    return c


def _second_pass(window: Window) -> int:
    lower, c = window
    return c - 3 * _carry_down(c) + 2 * _carry_down(lower)


def convert_32(field: NumberField, rep: Representation) -> Representation:
    """
    Carry-free conversion in base 3/2 from digits {-3..3} to {-2..2}: two local passes, each one moving
    carries of 2 to the next higher position (3 = 2 beta).
    """
    _check_three_halves(field)
    _check_range(rep, -3, 3)
    result = apply_window(apply_window(rep, 1, 0, _first_pass), 1, 0, _second_pass)
    assert all(-2 <= b <= 2 for b in result.digits)
    if eval_rep(field, result) != eval_rep(field, rep):
        raise ValueNotPreserved("base 3/2 conversion changed the value")
    return canonicalize(result)


@dataclass(frozen=True)
class ConversionRule:
    """
    Sliding window digit conversion: the output digit of beta^e is table[(x_{e-t}, ..., x_{e+r})].
    """
    field: NumberField
    t: int
    r: int
    input_range: Tuple[int, int]
    alphabet: Alphabet
    table: Dict[Window, int]
    name: str = "table"

    def __post_init__(self):
        zero = (0,) * (self.t + self.r + 1)
        if self.table.get(zero, 0) != 0:
            raise ParseError("a conversion rule must map the all-zero window to 0")
        if any(len(window) != self.t + self.r + 1 for window in self.table):
            raise ParseError(f"windows of a rule with t={self.t}, r={self.r} have {self.t + self.r + 1} digits")

    def __hash__(self):
        return hash((self.field, self.t, self.r, self.input_range, self.name))

    def phi(self, window: Window) -> int:
        if not any(window):
            return 0
        try:
            return self.table[window]
        except KeyError:
            raise DigitOutOfRange(f"window {window} is not in the {self.name} rule") from None

    @property
    def headroom(self) -> Tuple[int, int]:
        """Digit range that can be added to output-alphabet digits without leaving the input range."""
        return self.input_range[0] - min(self.alphabet), self.input_range[1] - max(self.alphabet)

    @property
    def is_three_halves(self) -> bool:
        return self.name == "three_halves"


def apply_rule(rule: ConversionRule, rep: Representation) -> Representation:
    _check_range(rep, *rule.input_range)
    result = apply_window(rep, rule.t, rule.r, rule.phi)
    if eval_rep(rule.field, result) != eval_rep(rule.field, rep):
        raise ValueNotPreserved(f"the {rule.name} rule does not preserve values")
    return canonicalize(result)


def identity_rule(field: NumberField, alphabet: Alphabet) -> ConversionRule:
    return ConversionRule(field, 0, 0, (min(alphabet), max(alphabet)), alphabet,
                          {(a,): a for a in alphabet}, "identity")


@lru_cache(maxsize=1)
def builtin_rule_three_halves() -> ConversionRule:
    """Both carry passes composed into one window of the two lower neighbours and the digit itself."""
    field = make_field((-3, 2))
    table = {}
    for window in product(range(-3, 4), repeat=3):
        c_lower = _first_pass(window[:2])
        c = _first_pass(window[1:])
        table[window] = _second_pass((c_lower, c))
    whisper("arithmetic", f"composed base 3/2 rule with {len(table)} windows", level=1)
    return ConversionRule(field, 2, 0, (-3, 3), Alphabet.range(-2, 2), table, "three_halves")


def rule_from_table(field: NumberField, t: int, r: int, input_range: Sequence[int], alphabet: Sequence[int],
                    table: Dict[str, int]) -> ConversionRule:
    """Builds a rule from JSON style keys "w1,w2,...", windows by increasing exponent."""
    try:
        parsed = {tuple(int(w) for w in key.split(",")): int(value) for key, value in table.items()}
    except ValueError as error:
        raise ParseError(f"bad conversion table: {error}") from error
    return ConversionRule(field, t, r, (input_range[0], input_range[1]), Alphabet(tuple(alphabet)), parsed)


def integer_digits(field: NumberField, n: int) -> Representation:
    """Finite base 3/2 representation of an integer over {-2..2}."""
    _check_three_halves(field)
    digits = []
    while abs(n) > 2:
        residue = (n + 1) % 3 - 1
        digits.append(residue)
        n = 2 * (n - residue) // 3
    digits.append(n)
    return canonicalize(Representation(len(digits) - 1, tuple(reversed(digits)), ()))
