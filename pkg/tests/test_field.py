from fractions import Fraction
from threading import Thread

import pytest

from beta_numeration.errors import DivisionByZero, FieldMismatch, NoRootOutsideUnitDisk, ReduciblePolynomial
from beta_numeration.field import (IntPoly, LaurentIntElement, compare, conjugate_boxes, elem_add, elem_inv, elem_mul,
                                   elem_sub, embed, floor, imaginary_unit, isolate_roots, laurent_to_field,
                                   make_field, minpoly_of_power, modulus_squared_equals, same_modulus, sign)
from beta_numeration.field.interval import Box


def test_make_field_rational_base(three_halves):
    assert three_halves.degree == 1
    assert three_halves.beta == Fraction(3, 2)
    assert three_halves.leading_coeff == 2


def test_make_field_normalizes_sign_and_content():
    field = make_field((2, 2, -2))
    assert field.minpoly.coeffs == (-1, -1, 1)


def test_make_field_selects_gaussian_root(gaussian):
    assert gaussian.exact_beta == (-1, 1)


def test_make_field_root_hint_picks_conjugate():
    field = make_field((-5, 0, 1), root_hint="-2.2,0")
    assert sign(field.beta) == -1


def test_make_field_rejects_reducible():
    with pytest.raises(ReduciblePolynomial):
        make_field((-1, 0, 1))


def test_make_field_rejects_small_roots():
    with pytest.raises(NoRootOutsideUnitDisk):
        make_field((-1, 2))


def test_defining_relations(three_halves, golden, gaussian):
    assert elem_mul(three_halves.beta, three_halves.beta) == Fraction(9, 4)
    assert elem_mul(golden.beta, golden.beta).coords == (1, 1)
    assert elem_mul(gaussian.beta, gaussian.beta).coords == (-2, -2)


def test_add_sub(golden, random_element):
    for _ in range(10):
        x, y = random_element(golden), random_element(golden)
        assert elem_sub(elem_add(x, y), y) == x
        assert elem_add(x, y).coords == tuple(a + b for a, b in zip(x.coords, y.coords))


def test_conjugate_boxes(golden):
    boxes = conjugate_boxes(golden, Fraction(1, 100))
    assert len(boxes) == 2
    assert all(box.real for box in boxes)
    lower, upper = sorted(box.box.re.lo for box in boxes)
    assert -1 < lower < 0 and upper > 1


def test_laurent_to_field(three_halves):
    z = LaurentIntElement.from_dict(three_halves, {1: 2, -1: 3})
    assert laurent_to_field(z) == 5


def test_inverse(golden, tribonacci, gaussian, random_element):
    for field in (golden, tribonacci, gaussian):
        for _ in range(100):
            x = random_element(field)
            if not x.is_zero:
                assert x * elem_inv(x) == 1


def test_inverse_of_zero(golden):
    with pytest.raises(DivisionByZero):
        elem_inv(golden.zero)


def test_mixed_fields(golden, sqrt5):
    with pytest.raises(FieldMismatch):
        golden.beta + sqrt5.beta


def test_embed_golden(golden):
    eps = Fraction(1, 10**6)
    box = embed(golden.beta, eps)
    assert box.re.hi - box.re.lo <= eps
    assert box.re.lo ** 2 - box.re.lo - 1 < 0 < box.re.hi ** 2 - box.re.hi - 1


def test_embed_exact_cases(gaussian, golden):
    box = embed(gaussian.beta, Fraction(1, 10**6))
    assert (box.re.lo, box.re.hi, box.im.lo, box.im.hi) == (-1, -1, 1, 1)
    box = embed(golden.one, Fraction(1, 1000))
    assert box.re.lo == box.re.hi == 1


def test_isolate_roots_salem_quartic():
    boxes = isolate_roots(IntPoly((1, -1, -1, -1, 1)), Fraction(1, 1 << 20))
    assert len(boxes) == 4
    assert sum(box.real for box in boxes) == 2


def test_minpoly_of_power(golden, sqrt5):
    assert minpoly_of_power(sqrt5, 2).coeffs == (-5, 1)
    assert minpoly_of_power(golden, 2).coeffs == (1, -3, 1)
    assert minpoly_of_power(golden, 1) == golden.minpoly


def test_sign_floor_compare(golden):
    assert floor(golden.beta) == 1
    assert floor(golden.beta ** 5) == 11
    assert floor(-golden.beta) == -2
    assert sign(golden.beta - 2) == -1
    assert compare(golden.beta ** 2, golden.beta + 1) == 0


def test_floor_on_integers_of_the_field(golden):
    # beta^2 - beta is exactly 1
    assert floor(golden.beta ** 2 - golden.beta) == 1


def test_imaginary_unit(gaussian, golden):
    unit = imaginary_unit(gaussian)
    assert unit * unit == -1
    assert gaussian.exact_complex(unit) == (0, 1)
    assert imaginary_unit(golden) is None


def test_laurent_values(three_halves):
    assert LaurentIntElement.from_dict(three_halves, {}).value == 0
    assert LaurentIntElement.from_dict(three_halves, {1: 1, 0: -1}).value == Fraction(1, 2)
    assert LaurentIntElement.from_dict(three_halves, {4: 1, 2: -1, 0: -2}).value == Fraction(13, 16)


def test_laurent_equality_goes_through_the_field(golden):
    assert LaurentIntElement.from_dict(golden, {2: 1}) == LaurentIntElement.from_dict(golden, {1: 1, 0: 1})


def test_laurent_arithmetic_matches_field(golden, rng):
    for _ in range(20):
        z = LaurentIntElement.from_dict(golden, {rng.randint(-3, 3): rng.randint(-5, 5) for _ in range(3)})
        w = LaurentIntElement.from_dict(golden, {rng.randint(-3, 3): rng.randint(-5, 5) for _ in range(3)})
        assert (z + w).value == z.value + w.value
        assert (z - w).value == z.value - w.value
        assert (z * w).value == z.value * w.value
        assert (z ** 2).value == z.value ** 2
        assert z.shifted(2).value == z.value * golden.beta ** 2


def test_ring_laws(three_halves, golden, tribonacci, gaussian, random_element):
    for field in (three_halves, golden, tribonacci, gaussian):
        for _ in range(30):
            x, y, z = (random_element(field) for _ in range(3))
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x * y == y * x


def test_inverse_in_every_fixture_field(three_halves, sqrt5, salem, base_minus2, random_element):
    for field in (three_halves, sqrt5, salem, base_minus2):
        for _ in range(100):
            x = random_element(field)
            if not x.is_zero:
                assert x * x.inverse() == 1
                assert x / x == 1


def _within(inner: Box, outer: Box) -> bool:
    return outer.re.lo <= inner.re.lo and inner.re.hi <= outer.re.hi \
        and outer.im.lo <= inner.im.lo and inner.im.hi <= outer.im.hi


def test_embed_boxes_nest():
    field = make_field((-1, -1, -1, 1))
    x = field.element([Fraction(1, 3), Fraction(1), Fraction(-1, 7)])
    previous = None
    for bits in (8, 24, 40, 72, 136):
        eps = Fraction(1, 1 << bits)
        box = embed(x, eps)
        assert box.size <= eps
        if previous is not None:
            assert _within(box, previous)
        previous = box


def test_conjugate_boxes_enclose_roots(golden, tribonacci, gaussian, salem):
    eps = Fraction(1, 1 << 30)
    for field in (golden, tribonacci, gaussian, salem):
        coeffs = field.minpoly.coeffs
        boxes = conjugate_boxes(field, eps)
        assert len(boxes) == field.degree
        assert all(root.box.size <= eps for root in boxes)
        product, total = Box.point(1), Box.point(0)
        for root in boxes:
            product = product * root.box
            total = total + root.box
        # Vieta: the product of the roots is (-1)^d c_0 / c_d and their sum is -c_(d-1) / c_d
        assert product.contains(Fraction((-1) ** field.degree * coeffs[0], coeffs[-1]))
        assert total.contains(Fraction(-coeffs[-2], coeffs[-1]))


def test_refined_boxes_across_threads():
    field = make_field((-1, -1, -1, 1))
    boxes = []
    targets = [Fraction(1, 1 << bits) for bits in (20, 60, 40, 100, 80, 30)]
    threads = [Thread(target=lambda eps=eps: boxes.append((eps, field.refined_beta_box(eps))))
               for eps in targets]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    assert len(boxes) == len(targets)
    for eps, root in boxes:
        assert root.box.size <= eps
    for (_, first), (_, second) in zip(boxes, boxes[1:]):
        assert _within(first.box, second.box) or _within(second.box, first.box)
    assert field.beta_box.box.size <= min(targets)


def test_nearly_equal_values_are_told_apart(golden, sqrt5):
    tiny = golden.beta_power(-400)
    assert not modulus_squared_equals(golden.one + tiny, 1)
    assert modulus_squared_equals(sqrt5.beta, 5)
    assert modulus_squared_equals(sqrt5.beta ** 3 / 5, 5)
    assert same_modulus(golden.beta, -golden.beta)
    assert not same_modulus(golden.beta, golden.beta + tiny)
    assert floor(3 - tiny) == 2
    assert floor(3 + tiny) == 3
    assert sign(golden.beta ** 2 - golden.beta - 1 + tiny) == 1
