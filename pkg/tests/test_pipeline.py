from fractions import Fraction
from itertools import count
from math import gcd

import pytest
from sympy import factorint

from beta_numeration.arithmetic import builtin_rule_three_halves
from beta_numeration.digits import Representation, eval_rep, parse_representation
from beta_numeration.dynamics import greedy_selector
from beta_numeration.errors import HypothesisViolated, NotCoprime
from beta_numeration.field import make_field
from beta_numeration.pipeline import (build_reciprocal, companion_matrix, find_cycle_mod, find_s,
                                      invert_denominator, invert_integer_thm_finite, represent_field_element,
                                      split_denominator, thm_finite_criterion)
from beta_numeration.pipeline.companion import _walk_cycle, mat_mul, mat_pow, mat_sub_scalar
from beta_numeration.pipeline.rational_base import balanced_digits


def test_companion_matrices(three_halves, golden, sqrt5, gaussian):
    assert companion_matrix(three_halves).rows == ((3,),)
    assert companion_matrix(three_halves).a == 2
    assert companion_matrix(golden).rows == ((1, 1), (1, 0))
    assert companion_matrix(sqrt5).rows == ((0, 5), (1, 0))
    assert companion_matrix(gaussian).rows == ((-2, -2), (1, 0))


def test_find_cycle_mod(three_halves, golden):
    assert find_cycle_mod(companion_matrix(three_halves), 5) == (0, 4)
    # Pisano period of 10
    assert find_cycle_mod(companion_matrix(golden), 10) == (0, 60)


def test_find_cycle_mod_preperiod():
    # A = [6] modulo 8: 1, 6, 4, 0, 0, ...
    field = make_field((-6, 1))
    assert find_cycle_mod(companion_matrix(field), 8) == (3, 1)


def test_find_cycle_identity_mod_two():
    # A = [[0, 3], [1, 0]] is an involution mod 2
    field = make_field((-3, 0, 1))
    matrix = companion_matrix(field)
    assert matrix.rows == ((0, 3), (1, 0))
    m, l = find_cycle_mod(matrix, 2)
    assert m == 0
    assert mat_pow(matrix.rows, l, 2) == ((1, 0), (0, 1))


def test_find_s(three_halves, golden):
    matrix = companion_matrix(three_halves)
    assert find_s(matrix, 2, 5, 0, 4) == 4
    matrix = companion_matrix(golden)
    m, l = find_cycle_mod(matrix, 7)
    s = find_s(matrix, 1, 7, m, l)
    brute = next(k * l for k in range(1, 100)
                 if all(v % 7 == 0 for row in mat_mul(mat_pow(matrix.rows, m),
                                                      mat_sub_scalar(mat_pow(matrix.rows, k * l), 1))
                        for v in row))
    assert s == brute == 16


def test_find_s_needs_coprime(three_halves):
    with pytest.raises(NotCoprime):
        find_s(companion_matrix(three_halves), 2, 4, 0, 1)


def test_invert_integer(three_halves):
    half = invert_integer_thm_finite(three_halves, 2)
    assert half.as_dict() == {0: 2, 1: -1}
    assert half.value == Fraction(1, 2)
    third = invert_integer_thm_finite(three_halves, 3)
    assert third.as_dict() == {0: -1, -1: 2}
    assert third.value == Fraction(1, 3)
    for n in (5, 7, 11):
        assert invert_integer_thm_finite(three_halves, n) is None


def test_invert_integer_agrees_with_criterion(three_halves, golden, sqrt5):
    for n in range(2, 201):
        inverse = invert_integer_thm_finite(three_halves, n)
        assert (inverse is not None) == set(factorint(n)) <= {2, 3}
        assert (inverse is not None) == thm_finite_criterion(three_halves, n)
        if inverse is not None:
            assert inverse.value * n == 1
    for field in (golden, sqrt5):
        for n in range(2, 60):
            inverse = invert_integer_thm_finite(field, n)
            assert (inverse is not None) == thm_finite_criterion(field, n)
            if inverse is not None:
                assert inverse.value * n == 1


def test_split_denominator():
    assert split_denominator(2, 20) == (4, 5)
    assert split_denominator(1, 12) == (1, 12)
    assert split_denominator(6, 12) == (12, 1)


def test_one_fifth_in_base_three_halves(three_halves, thoughts):
    trace = build_reciprocal(three_halves, 5)
    assert (trace.r, trace.qbar) == (1, 5)
    assert (trace.m, trace.l, trace.s) == (0, 4, 4)
    assert trace.Z == ((13,),)
    assert trace.z.value == 13
    beta = three_halves.beta
    assert 2 ** 4 * (beta ** 4 - 1) == 5 * 13
    assert eval_rep(three_halves, trace.representation) == Fraction(1, 5)
    assert any(t.stage == "pipeline" and "s = 4" in t.content for t in thoughts)


def test_reciprocals_of_the_leading_coefficient(three_halves):
    for q in (2, 4, 12, 40):
        rep = invert_denominator(three_halves, q)
        assert eval_rep(three_halves, rep) == Fraction(1, q)
    trace = build_reciprocal(three_halves, 4)
    assert (trace.r, trace.qbar, trace.r_exponent) == (4, 1, 2)
    assert trace.m is None
    assert trace.representation.is_finite


def test_reciprocals_normalized(three_halves):
    rule = builtin_rule_three_halves()
    for q in range(2, 16):
        rep = invert_denominator(three_halves, q, rule)
        assert all(-2 <= d <= 2 for d in rep.digits)
        assert eval_rep(three_halves, rep) == Fraction(1, q)


def test_golden_reciprocal(golden):
    trace = build_reciprocal(golden, 4)
    assert trace.r == 1
    assert eval_rep(golden, trace.representation) == Fraction(1, 4)
    assert golden.beta ** trace.m * (golden.beta ** trace.s - 1) == trace.z.value * 4


def test_represent_worked_example(three_halves):
    x = three_halves.rational(Fraction(1, 5))
    rep = represent_field_element(three_halves, x)
    assert eval_rep(three_halves, rep) == x
    normalized = represent_field_element(three_halves, x, builtin_rule_three_halves())
    assert all(-2 <= d <= 2 for d in normalized.digits)
    assert eval_rep(three_halves, normalized) == eval_rep(three_halves, parse_representation("1•(0,-1)ω"))


def test_represent_integers_and_zero(three_halves, golden):
    assert eval_rep(three_halves, represent_field_element(three_halves, three_halves.rational(7))) == 7
    assert represent_field_element(golden, golden.zero).is_zero
    rep = represent_field_element(three_halves, three_halves.rational(7), builtin_rule_three_halves())
    assert all(-2 <= d <= 2 for d in rep.digits)


def test_represent_quadratic_fields(golden, sqrt5):
    x = golden.rational(Fraction(3, 7))
    assert eval_rep(golden, represent_field_element(golden, x)) == x
    y = sqrt5.element([Fraction(1, 2), Fraction(1, 3)])
    assert eval_rep(sqrt5, represent_field_element(sqrt5, y)) == y


def test_represent_with_selector(golden):
    x = golden.element([Fraction(1, 3), Fraction(-1, 5)])
    rep = represent_field_element(golden, x, selector=greedy_selector(golden))
    assert eval_rep(golden, rep) == x


def test_represent_negative_with_greedy_falls_back(golden):
    x = golden.rational(Fraction(-2, 3))
    assert eval_rep(golden, represent_field_element(golden, x, selector=greedy_selector(golden))) == x


def test_hypotheses_are_enforced(salem):
    with pytest.raises(HypothesisViolated):
        represent_field_element(salem, salem.rational(Fraction(1, 2)))
    field = make_field((-5, 1, 2))
    with pytest.raises(HypothesisViolated):
        represent_field_element(field, field.rational(Fraction(1, 3)))


def test_round_trips(three_halves, golden, tribonacci, gaussian, sqrt5, random_element):
    for field, bound in ((three_halves, 30), (golden, 12), (tribonacci, 5), (gaussian, 6), (sqrt5, 10)):
        for _ in range(8):
            x = random_element(field, bound)
            assert eval_rep(field, represent_field_element(field, x)) == x


def test_cycle_orders_agree_with_walking(three_halves, golden, sqrt5, gaussian, tribonacci):
    for field in (three_halves, golden, sqrt5, gaussian, tribonacci):
        matrix = companion_matrix(field)
        for q in range(2, 30):
            assert find_cycle_mod(matrix, q) == _walk_cycle(matrix.rows, q), (field, q)


def test_find_s_is_least(three_halves, golden, sqrt5):
    for field in (three_halves, golden, sqrt5):
        matrix = companion_matrix(field)
        a = matrix.a
        for q in range(2, 40):
            if gcd(a, q) != 1:
                continue
            m, l = find_cycle_mod(matrix, q)
            head = mat_pow(matrix.rows, m)
            brute = next(k * l for k in count(1)
                         if all(v % q == 0 for row in mat_mul(head, mat_sub_scalar(mat_pow(matrix.rows, k * l),
                                                                                   a ** (k * l)))
                                for v in row))
            assert find_s(matrix, a, q, m, l) == brute, (field, q)


def test_balanced_digits(rng):
    for p, a in ((3, 2), (-3, 2), (5, 1), (-2, 1), (7, 3)):
        for _ in range(20):
            n = rng.randint(0, 80)
            value = rng.randint(-10 ** 30, 10 ** 30)
            digits = balanced_digits(p, a, value, n)
            assert len(digits) == n + 1
            assert sum(d * p ** j * a ** (n - j) for j, d in enumerate(digits)) == value
            assert all(2 * abs(d) <= abs(p) for d in digits[:-1])


def test_rational_reciprocals(three_halves, base5, base_minus2):
    for field in (three_halves, base5, base_minus2):
        for q in range(2, 80):
            trace = build_reciprocal(field, q)
            assert eval_rep(field, trace.representation) == Fraction(1, q)
            if trace.s:
                assert trace.s % len(trace.representation.period or (0,)) == 0


def test_one_fifth_in_base_five(base5):
    rep = build_reciprocal(base5, 5).representation
    assert rep == Representation(-1, (1,), ())
