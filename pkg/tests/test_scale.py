from fractions import Fraction
from time import perf_counter

import pytest

from beta_numeration.arithmetic import builtin_rule_three_halves
from beta_numeration.cli.bench import bench
from beta_numeration.digits import eval_rep, weak_greedy_check
from beta_numeration.dynamics import exclusion_constant, greedy_selector, orbit_periodize
from beta_numeration.pipeline import represent_field_element


def _sample(field, rng, numerator_bound, denominator_bound):
    """(sum n_i beta^i) / q"""
    q = rng.randint(1, denominator_bound)
    return field.element(Fraction(rng.randint(-numerator_bound, numerator_bound), q) for _ in range(field.degree))


def test_bench_three_halves(three_halves):
    start = perf_counter()
    rows = bench(three_halves, range(2, 1001))
    assert perf_counter() - start < 30
    assert [row.q for row in rows] == list(range(2, 1001))


@pytest.mark.slow
def test_bench_three_halves_up_to_ten_thousand(three_halves):
    start = perf_counter()
    rows = bench(three_halves, range(2, 10001))
    assert perf_counter() - start < 120
    assert len(rows) == 9999


@pytest.mark.slow
@pytest.mark.parametrize("name", ["three_halves", "golden", "sqrt5"])
def test_round_trips_at_scale(name, request, rng):
    field = request.getfixturevalue(name)
    start = perf_counter()
    for _ in range(200):
        x = _sample(field, rng, 10 ** 4, 10 ** 4)
        assert eval_rep(field, represent_field_element(field, x)) == x
    assert perf_counter() - start < 60


@pytest.mark.slow
def test_normalized_round_trips_three_halves(three_halves, rng):
    rule = builtin_rule_three_halves()
    for _ in range(20):
        x = _sample(three_halves, rng, 10 ** 4, 10 ** 4)
        rep = represent_field_element(three_halves, x, rule)
        assert eval_rep(three_halves, rep) == x
        assert rep.alphabet_bound <= 2


@pytest.mark.slow
@pytest.mark.parametrize("name, denominator_bound", [("gaussian", 50), ("tribonacci", 30)])
def test_round_trips_small_denominators(name, denominator_bound, request, rng):
    # the period of beta modulo q grows like q^2 in these fields
    field = request.getfixturevalue(name)
    for _ in range(50):
        x = _sample(field, rng, 10 ** 4, denominator_bound)
        assert eval_rep(field, represent_field_element(field, x)) == x


def test_round_trips_moderate(three_halves, golden, sqrt5, rng):
    for field in (three_halves, golden, sqrt5):
        for _ in range(25):
            x = _sample(field, rng, 10 ** 3, 500)
            assert eval_rep(field, represent_field_element(field, x)) == x


@pytest.mark.slow
def test_greedy_golden_orbits_with_weak_greedy_bound(golden):
    selector = greedy_selector(golden)
    c = exclusion_constant(selector)
    for q in range(2, 21):
        x = golden.rational(Fraction(1, q)) + golden.beta / q
        rep = orbit_periodize(golden, selector, x)
        assert eval_rep(golden, rep) == x
        assert weak_greedy_check(golden, rep, c)
