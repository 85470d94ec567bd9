from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

import sympy

from beta_numeration import global_state
from beta_numeration.field import (Box, IntPoly, NumberField, RootBox, minpoly_of_power, modulus_polynomial,
                                   same_real_root)
from beta_numeration.utils import timeit
from beta_numeration.whisper import whisper


class ModulusVerdict(str, Enum):
    lt1 = "lt1"
    eq1 = "eq1"
    gt1_eq_beta = "gt1_eq_beta"
    gt1_other = "gt1_other"


class BaseLabel(str, Enum):
    Pisot = "Pisot"
    ComplexPisot = "ComplexPisot"
    Salem = "Salem"
    NegPisot = "NegPisot"
    none = "None"


@dataclass(frozen=True)
class ConjugateVerdict:
    index: int
    box: Box
    verdict: ModulusVerdict


@dataclass(frozen=True)
class BaseClassification:
    is_algebraic_integer: bool
    is_rational: bool
    conj_moduli: Tuple[ConjugateVerdict, ...]
    label: BaseLabel
    collapse_exponents: Tuple[int, ...]
    unit_circle_count: Optional[int]


@dataclass(frozen=True)
class Advisory:
    verdict: str
    reasons: List[str] = dataclass_field(default_factory=list)

    @property
    def impossible(self) -> bool:
        return self.verdict == "impossible"


def _circle_polynomial(poly: IntPoly) -> sympy.Poly:
    """g with x^-k f(x) = g(x + 1/x) for a self-reciprocal f of degree 2k."""
    y = sympy.Symbol("y")
    k = poly.degree // 2
    previous, current = sympy.Integer(2), y
    g = sympy.Integer(poly.coeffs[k])
    for j in range(1, k + 1):
        g += poly.coeffs[k + j] * current
        previous, current = current, sympy.expand(y * current - previous)
    return sympy.Poly(g, y, domain=sympy.ZZ)


@lru_cache(maxsize=128)
def unit_circle_conjugate(field: NumberField) -> Optional[int]:
    """
    None when the minimal polynomial is not self-reciprocal, else the exact number of its roots
    on the unit circle.
    """
    poly = field.minpoly
    if not poly.self_reciprocal_sign():
        return None

    endpoints = int(poly(1) == 0) + int(poly(-1) == 0)
    if poly.degree % 2 or poly.self_reciprocal_sign() < 0:
        return endpoints

    g = _circle_polynomial(poly)
    inside = g.count_roots(-2, 2) - int(g.eval(2) == 0) - int(g.eval(-2) == 0)
    count = 2 * inside + endpoints
    whisper("classify", f"{poly} is self-reciprocal, {count} roots on the unit circle", level=1)
    return count


def _initial_eps() -> Fraction:
    return Fraction(1, 1 << global_state.precision_bits)


def _unit_verdicts(boxes: List[RootBox], unit_count: int) -> List[Optional[ModulusVerdict]]:
    """lt1 / eq1 / None (for modulus > 1), refining until the straddling boxes are exactly the unit roots."""
    eps = _initial_eps()
    while True:
        moduli = [root_box.box.abs_squared() for root_box in boxes]
        straddling = [m.lo <= 1 <= m.hi for m in moduli]
        if sum(straddling) == unit_count:
            return [ModulusVerdict.eq1 if s else ModulusVerdict.lt1 if m.hi < 1 else None
                    for s, m in zip(straddling, moduli)]
        eps /= 1 << 8
        boxes[:] = [root_box.refine(eps) for root_box in boxes]
        whisper("classify", f"refining conjugates to {eps}", level=2)


def _equal_to_beta(boxes: List[RootBox], i: int, beta: int, even_or_odd: bool) -> bool:
    """Decides |root i| = |beta|: by symmetry for conj(beta) and ±beta, otherwise through the modulus polynomial."""
    images = [boxes[beta].box.conjugate()]
    if even_or_odd:
        images += [-boxes[beta].box, -boxes[beta].box.conjugate()]
    for image in images:
        hits = [k for k, root_box in enumerate(boxes) if root_box.box.overlaps(image)]
        if hits == [i]:
            return True

    eps = max(boxes[i].box.size, boxes[beta].box.size) or _initial_eps()
    a, b = boxes[i], boxes[beta]
    while True:
        ma, mb = a.box.abs_squared(), b.box.abs_squared()
        if not ma.overlaps(mb):
            return False
        if eps.denominator.bit_length() > global_state.exact_check_bits:
            equal = same_real_root(modulus_polynomial(a.poly), lambda e: a.refine(e).box.abs_squared(),
                                   lambda e: b.refine(e).box.abs_squared())
            whisper("classify", f"|root {i}| = |beta| decided exactly: {equal}")
            return equal
        eps /= 1 << 16
        a, b = a.refine(eps), b.refine(eps)


def _label(field: NumberField, is_integer: bool, others: List[ModulusVerdict]) -> BaseLabel:
    if not is_integer:
        return BaseLabel.none
    box = field.beta_box.box
    if not field.is_real:
        # the complex conjugate of beta is the one allowed companion of modulus |beta|
        rest = list(others)
        if ModulusVerdict.gt1_eq_beta in rest:
            rest.remove(ModulusVerdict.gt1_eq_beta)
        return BaseLabel.ComplexPisot if all(v is ModulusVerdict.lt1 for v in rest) else BaseLabel.none

    positive = box.re.lo > 0
    if all(v is ModulusVerdict.lt1 for v in others):
        return BaseLabel.Pisot if positive else BaseLabel.NegPisot
    if positive and all(v in (ModulusVerdict.lt1, ModulusVerdict.eq1) for v in others):
        return BaseLabel.Salem
    return BaseLabel.none


@lru_cache(maxsize=128)
def collapse_exponents(field: NumberField) -> Tuple[int, ...]:
    return tuple(m for m in range(2, field.degree + 1) if minpoly_of_power(field, m).degree < field.degree)


@timeit
@lru_cache(maxsize=128)
def classify_base(field: NumberField) -> BaseClassification:
    boxes = field.conjugate_boxes(_initial_eps())
    beta = field.beta_box.index
    unit_count = unit_circle_conjugate(field) or 0
    verdicts = _unit_verdicts(boxes, unit_count)

    even_or_odd = field.minpoly.is_even_or_odd()
    conj_moduli = []
    for i, verdict in enumerate(verdicts):
        if i == beta:
            continue
        if verdict is None:
            verdict = ModulusVerdict.gt1_eq_beta if _equal_to_beta(boxes, i, beta, even_or_odd) \
                else ModulusVerdict.gt1_other
        conj_moduli.append(ConjugateVerdict(i, boxes[i].box, verdict))

    is_integer = field.leading_coeff == 1
    label = _label(field, is_integer, [c.verdict for c in conj_moduli])
    classification = BaseClassification(is_algebraic_integer=is_integer,
                                        is_rational=field.is_rational,
                                        conj_moduli=tuple(conj_moduli),
                                        label=label,
                                        collapse_exponents=collapse_exponents(field),
                                        unit_circle_count=unit_circle_conjugate(field))
    whisper("classify", f"{field.minpoly}: {label.value}")
    return classification


def weak_greedy_advisory(field: NumberField) -> Advisory:
    """Necessary conditions for weak greedy representations; 'not excluded' is not a guarantee."""
    classification = classify_base(field)
    reasons = []
    if not classification.is_algebraic_integer:
        reasons.append("beta is not an algebraic integer")
    inside_or_on_circle = all(c.verdict in (ModulusVerdict.lt1, ModulusVerdict.eq1) for c in classification.conj_moduli)
    if field.is_real and not inside_or_on_circle:
        reasons.append("|beta| is neither a Pisot nor a Salem number")
    if any(c.verdict is ModulusVerdict.gt1_other for c in classification.conj_moduli):
        reasons.append("a conjugate has modulus > 1 different from |beta|")
    if field.is_real and classification.collapse_exponents:
        reasons.append(f"Q(beta^m) != Q(beta) for m in {list(classification.collapse_exponents)}")
    return Advisory("impossible" if reasons else "not excluded", reasons)
