from fractions import Fraction

import pytest

from beta_numeration.arithmetic import (apply_rule, apply_window, builtin_rule_three_halves, convert_32, fin_add,
                                        fin_mul, fin_sub, fin_times_per, identity_rule, integer_digits, normalize,
                                        per_add, rule_from_table)
from beta_numeration.digits import Alphabet, Representation, ZERO, canonicalize, eval_rep, parse_representation
from beta_numeration.errors import DigitOutOfRange, FieldMismatch, ValueNotPreserved
from beta_numeration.field import LaurentIntElement

# the two addends of the worked base 3/2 table, their digitwise sum and its conversion
ADDENDS = ("1•(1,0,2)ω", "2,2•(2,-1,-1)ω")
SUM_ROW = "2,3•(3,-1,1)ω"
CONVERTED_ROW = "2,1,2•(0,1,0)ω"


def _random_rep(rng, lo, hi):
    return Representation(rng.randint(-3, 3), tuple(rng.randint(lo, hi) for _ in range(rng.randint(0, 5))),
                          tuple(rng.randint(lo, hi) for _ in range(rng.randint(0, 4))))


def test_convert_32_worked_table(three_halves):
    result = convert_32(three_halves, parse_representation(SUM_ROW))
    assert result == canonicalize(parse_representation(CONVERTED_ROW))


def test_convert_32_zero(three_halves):
    assert convert_32(three_halves, ZERO) == ZERO
    assert convert_32(three_halves, Representation(2, (0, 0), (0,))) == ZERO


def test_convert_32_random(three_halves, rng):
    for _ in range(50):
        rep = _random_rep(rng, -3, 3)
        result = convert_32(three_halves, rep)
        assert all(-2 <= d <= 2 for d in result.digits)
        assert eval_rep(three_halves, result) == eval_rep(three_halves, rep)


def test_convert_32_rejects(three_halves, golden):
    with pytest.raises(DigitOutOfRange):
        convert_32(three_halves, parse_representation("4•"))
    with pytest.raises(FieldMismatch):
        convert_32(golden, parse_representation("1•"))


def test_builtin_rule_agrees_with_convert_32(three_halves, rng):
    rule = builtin_rule_three_halves()
    assert len(rule.table) == 343
    assert apply_rule(rule, parse_representation(SUM_ROW)) == canonicalize(parse_representation(CONVERTED_ROW))
    for _ in range(30):
        rep = _random_rep(rng, -3, 3)
        assert apply_rule(rule, rep) == convert_32(three_halves, rep)


def test_apply_window_shifts(golden):
    rep = parse_representation("1,2•")
    doubled = apply_window(rep, 0, 0, lambda window: 2 * window[0])
    assert doubled == Representation(1, (2, 4), ())
    raised = apply_window(rep, 1, 0, lambda window: window[0])
    assert eval_rep(golden, raised) == golden.beta * eval_rep(golden, rep)


def test_identity_rule(golden):
    rule = identity_rule(golden, Alphabet.range(-1, 1))
    rep = parse_representation("1,0•(-1,1)ω")
    assert apply_rule(rule, rep) == canonicalize(rep)


def test_value_changing_table(golden):
    rule = rule_from_table(golden, 0, 0, [0, 1], [0, 1], {"1": 0})
    with pytest.raises(ValueNotPreserved):
        apply_rule(rule, parse_representation("1•"))


def test_per_add_worked_table(three_halves):
    x, y = map(parse_representation, ADDENDS)
    assert per_add(three_halves, x, y) == canonicalize(parse_representation(SUM_ROW))
    normalized = per_add(three_halves, x, y, builtin_rule_three_halves())
    assert normalized == canonicalize(parse_representation(CONVERTED_ROW))


def test_per_add_zero(golden):
    x = parse_representation("1,0•0,(1,-1)ω")
    assert per_add(golden, x, ZERO) == canonicalize(x)


def test_per_add_normalized_random(three_halves, rng):
    rule = builtin_rule_three_halves()
    for _ in range(30):
        x, y = _random_rep(rng, -2, 2), _random_rep(rng, -2, 2)
        total = per_add(three_halves, x, y, rule)
        assert all(-2 <= d <= 2 for d in total.digits)
        assert eval_rep(three_halves, total) == eval_rep(three_halves, x) + eval_rep(three_halves, y)


def test_per_add_mixed_periods(golden, rng):
    for _ in range(30):
        x, y = _random_rep(rng, -2, 2), _random_rep(rng, -2, 2)
        assert eval_rep(golden, per_add(golden, x, y)) == eval_rep(golden, x) + eval_rep(golden, y)


def test_integer_digits(three_halves):
    for n in range(-60, 61):
        rep = integer_digits(three_halves, n)
        assert all(-2 <= d <= 2 for d in rep.digits)
        assert rep.is_finite
        assert eval_rep(three_halves, rep) == n


def test_normalize_large_digits(three_halves):
    rule = builtin_rule_three_halves()
    for text in ("7•", "-13,0•5", "1•(9,-4)ω", "40,-40•"):
        rep = parse_representation(text)
        result = normalize(three_halves, rep, rule)
        assert all(-2 <= d <= 2 for d in result.digits)
        assert eval_rep(three_halves, result) == eval_rep(three_halves, rep)


def test_normalize_user_rule(three_halves):
    rule = builtin_rule_three_halves()
    user = rule_from_table(three_halves, rule.t, rule.r, rule.input_range, list(rule.alphabet),
                           {",".join(map(str, window)): digit for window, digit in rule.table.items()})
    assert not user.is_three_halves
    rep = parse_representation("5,-6•(4)ω")
    result = normalize(three_halves, rep, user)
    assert all(-2 <= d <= 2 for d in result.digits)
    assert eval_rep(three_halves, result) == eval_rep(three_halves, rep)


def test_normalize_field_check(golden):
    with pytest.raises(FieldMismatch):
        normalize(golden, parse_representation("7•"), builtin_rule_three_halves())


def test_fin_arithmetic(three_halves, golden, rng):
    z = LaurentIntElement.from_dict(three_halves, {1: 1, 0: -1})
    assert fin_mul(z, z).as_dict() == {2: 1, 1: -2, 0: 1}
    assert fin_mul(z, z).value == Fraction(1, 4)
    zero = LaurentIntElement(three_halves)
    assert fin_add(z, zero) == z
    assert fin_sub(z, z).is_zero
    with pytest.raises(FieldMismatch):
        fin_add(z, LaurentIntElement.constant(golden, 1))
    for _ in range(30):
        a = LaurentIntElement.from_dict(golden, {rng.randint(-4, 4): rng.randint(-9, 9) for _ in range(4)})
        b = LaurentIntElement.from_dict(golden, {rng.randint(-4, 4): rng.randint(-9, 9) for _ in range(4)})
        assert fin_add(a, b).value == a.value + b.value
        assert fin_mul(a, b).value == a.value * b.value


def test_fin_times_per_worked_example(three_halves):
    z = LaurentIntElement.from_dict(three_halves, {4: 1, 2: -1, 0: -2})
    geometric = parse_representation("0•(0,0,0,1)ω")
    assert eval_rep(three_halves, fin_times_per(z, geometric)) == Fraction(1, 5)
    normalized = fin_times_per(z, geometric, builtin_rule_three_halves())
    assert all(-2 <= d <= 2 for d in normalized.digits)
    assert eval_rep(three_halves, normalized) == Fraction(1, 5)


def test_fin_times_per_shift_and_unit(golden):
    rep = parse_representation("1,0•(1,-1,0)ω")
    assert fin_times_per(LaurentIntElement.constant(golden, 1), rep) == canonicalize(rep)
    assert fin_times_per(LaurentIntElement.monomial(golden, 3), rep) == canonicalize(rep).shifted(3)
    assert fin_times_per(LaurentIntElement(golden), rep) == ZERO


def test_fin_times_per_random(golden, rng):
    for _ in range(30):
        z = LaurentIntElement.from_dict(golden, {rng.randint(-3, 3): rng.randint(-3, 3) for _ in range(3)})
        rep = _random_rep(rng, -2, 2)
        assert eval_rep(golden, fin_times_per(z, rep)) == z.value * eval_rep(golden, rep)
