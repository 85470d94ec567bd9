from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from sympy import factorint

from beta_numeration.arithmetic import ConversionRule, fin_times_per, normalize
from beta_numeration.classify import BaseLabel, classify_base, unit_circle_conjugate
from beta_numeration.digits import Representation, ZERO, canonicalize, eval_rep, representation_from_laurent
from beta_numeration.dynamics import DigitSelector, orbit_periodize
from beta_numeration.errors import HypothesisViolated, NoRepeatWithinBudget, NotRepresentable, ValueNotPreserved
from beta_numeration.field import FieldElement, LaurentIntElement, NumberField
from beta_numeration.pipeline.companion import (Matrix, companion_matrix, find_cycle_mod, find_s, mat_mul, mat_pow,
                                                mat_sub_scalar)
from beta_numeration.pipeline.inversion import invert_integer_thm_finite
from beta_numeration.pipeline.rational_base import Congruence, expand_rational
from beta_numeration.utils import timeit
from beta_numeration.whisper import whisper

PISOT_TYPE = (BaseLabel.Pisot, BaseLabel.ComplexPisot, BaseLabel.NegPisot)


@dataclass(frozen=True)
class PipelineTrace:
    """Every intermediate of building 1/q; the cycle fields are None when q has no part coprime to a."""
    q: int
    r: int
    qbar: int
    m: Optional[int]
    l: Optional[int]
    s: Optional[int]
    Z: Optional[Matrix]
    z: Optional[LaurentIntElement]
    inverse_a_exponent: int
    r_exponent: int
    representation: Representation


def split_denominator(a: int, q: int) -> Tuple[int, int]:
    """q = r qbar with the primes of r dividing a and gcd(a, qbar) = 1."""
    r = 1
    for p, multiplicity in factorint(q).items():
        if a % p == 0:
            r *= p ** multiplicity
    return r, q // r


@lru_cache(maxsize=64)
def _inverse_leading(field: NumberField) -> LaurentIntElement:
    a = field.leading_coeff
    inverse = invert_integer_thm_finite(field, a) if a > 1 else LaurentIntElement.constant(field, 1)
    if inverse is None:
        raise HypothesisViolated(f"1/{a} is not in Z[beta, 1/beta]")
    return inverse


def _geometric(s: int) -> Representation:
    """sum over i >= 1 of beta^(-s i)"""
    return Representation(-1, (), (0,) * (s - 1) + (1,))


def _congruence_data(field: NumberField, qbar: int):
    """m, l, s, Z and z with a^(s+m) beta^m (beta^s - 1) = qbar z."""
    a = field.leading_coeff
    matrix = companion_matrix(field)
    m, l = find_cycle_mod(matrix, qbar)
    s = find_s(matrix, a, qbar, m, l)

    numerator = mat_mul(mat_pow(matrix.rows, m), mat_sub_scalar(mat_pow(matrix.rows, s), a ** s))
    if any(v % qbar for row in numerator for v in row):
        raise ValueNotPreserved(f"A^m (A^s - a^s I) is not divisible by {qbar}")
    Z = tuple(tuple(v // qbar for v in row) for row in numerator)
    d = matrix.dimension
    z = LaurentIntElement(field, tuple((d - 1 - j, c) for j, c in enumerate(Z[d - 1])))

    identity = field.beta_power(m) * (field.beta_power(s) - 1) * a ** (s + m)
    if identity != z.value * qbar:
        raise ValueNotPreserved(f"a^(s+m) beta^m (beta^s - 1) != {qbar} z")
    whisper("pipeline", f"1/{qbar}: m = {m}, l = {l}, s = {s}, z = {z}")
    return m, l, s, Z, z


def _r_exponent(a: int, r: int) -> int:
    """Least k with r | a^k."""
    k = 0
    while a ** k % r:
        k += 1
    return k


def _rational_base(field: NumberField, numerator: int, q: int, normalizer: Optional[ConversionRule]):
    """numerator / q in a rational base, with the congruence data it was built from."""
    r, qbar = split_denominator(field.leading_coeff, q)
    cycle = _congruence_data(field, qbar) if qbar > 1 else (None,) * 5
    m, l, s, Z, z = cycle
    k = _r_exponent(field.leading_coeff, r)
    congruence = Congruence(qbar, m, s, z.coeff(0)) if z is not None else None
    rep = expand_rational(field, numerator, r, k, congruence)
    rep = normalize(field, rep, normalizer) if normalizer else canonicalize(rep)
    return PipelineTrace(q, r, qbar, m, l, s, Z, z, (s or 0) + (m or 0), k, rep)


@timeit
def build_reciprocal(field: NumberField, q: int, normalizer: Optional[ConversionRule] = None) -> PipelineTrace:
    """Eventually periodic representation of 1/q together with the congruence data it was built from."""
    if field.degree == 1:
        trace = _rational_base(field, 1, q, normalizer)
        if eval_rep(field, trace.representation) * q != field.one:
            raise ValueNotPreserved(f"representation of 1/{q} evaluates to {eval_rep(field, trace.representation)}")
        return trace

    a = field.leading_coeff
    r, qbar = split_denominator(a, q)
    inverse_a = _inverse_leading(field) if a > 1 else LaurentIntElement.constant(field, 1)

    m = l = s = Z = z = None
    rep = None
    if qbar > 1:
        m, l, s, Z, z = _congruence_data(field, qbar)
        prefactor = (z * inverse_a ** (s + m)).shifted(-m)
        rep = fin_times_per(prefactor, _geometric(s), normalizer)

    k = _r_exponent(a, r)
    if r > 1:
        inverse_r = inverse_a ** k * (a ** k // r)
        if rep is None:
            rep = representation_from_laurent(inverse_r)
            rep = normalize(field, rep, normalizer) if normalizer else rep
        else:
            rep = fin_times_per(inverse_r, rep, normalizer)
    if rep is None:
        rep = Representation(0, (1,), ())

    if eval_rep(field, rep) * q != field.one:
        raise ValueNotPreserved(f"representation of 1/{q} evaluates to {eval_rep(field, rep)}")
    return PipelineTrace(q, r, qbar, m, l, s, Z, z, (s or 0) + (m or 0), k, rep)


def invert_denominator(field: NumberField, q: int, normalizer: Optional[ConversionRule] = None) -> Representation:
    return build_reciprocal(field, q, normalizer).representation


def _check_hypotheses(field: NumberField):
    count = unit_circle_conjugate(field)
    if count:
        raise HypothesisViolated(f"{count} conjugates of beta lie on the unit circle")
    _inverse_leading(field)


def _numerator(x: FieldElement, q: int) -> LaurentIntElement:
    return LaurentIntElement(x.field, tuple((i, int(c * q)) for i, c in enumerate(x.coords)))


def represent_field_element(field: NumberField, x: FieldElement, normalizer: Optional[ConversionRule] = None,
                            selector: Optional[DigitSelector] = None,
                            max_steps: Optional[int] = None) -> Representation:
    """
    An eventually periodic representation of x. A selector over a Pisot type base goes first; otherwise
    x = (1/q) sum x_i beta^i is assembled from the representation of 1/q.
    """
    if x.field != field:
        x = field.element(x.coords)
    if x.is_zero:
        return ZERO

    if selector is not None and classify_base(field).label in PISOT_TYPE:
        try:
            rep = orbit_periodize(field, selector, x, max_steps)
            if normalizer is not None:
                rep = normalize(field, rep, normalizer)
            return rep
        except (NoRepeatWithinBudget, NotRepresentable) as error:
            whisper("pipeline", f"orbit gave up ({error.code}), using the congruence pipeline")

    _check_hypotheses(field)
    q = x.denominator
    numerator = _numerator(x, q)
    if field.degree == 1:
        rep = _rational_base(field, numerator.coeff(0), q, normalizer).representation
    elif q == 1:
        rep = representation_from_laurent(numerator)
        rep = normalize(field, rep, normalizer) if normalizer else canonicalize(rep)
    else:
        rep = fin_times_per(numerator, invert_denominator(field, q, normalizer), normalizer)

    if eval_rep(field, rep) != x:
        raise ValueNotPreserved(f"representation of {x} evaluates to {eval_rep(field, rep)}")
    whisper("pipeline", f"{x} = {rep} with digits bounded by {rep.alphabet_bound}", level=1)
    return rep
