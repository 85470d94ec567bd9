from typing import Sequence

from beta_numeration.digits.representation import Representation, ZERO, canonicalize, eval_rep, evaluate
from beta_numeration.errors import ComponentCountExceedsDegree, ValueNotPreserved
from beta_numeration.field import FieldElement, NumberField, minpoly_of_power
from beta_numeration.utils import lcm_all
from beta_numeration.whisper import whisper


def eval_in_power_base(field: NumberField, m: int, rep: Representation) -> FieldElement:
    """Value of a base beta^m representation, as an element of Q(beta)."""
    if rep.leading_index is None:
        return field.zero
    return evaluate(field.beta_power(m), rep.leading_index, rep.preperiod, rep.period)


def lift_rep_from_power_base(field: NumberField, m: int, component_reps: Sequence[Representation]) -> Representation:
    """
    Interleaves base gamma = beta^m representations of x_0, x_1, ... into one base beta representation
    of sum x_i beta^i: the digit of gamma^g in component i becomes the digit of beta^(m g + i).
    """
    limit = field.degree // minpoly_of_power(field, m).degree
    if len(component_reps) > limit:
        raise ComponentCountExceedsDegree(f"{len(component_reps)} components, [Q(beta):Q(beta^{m})] = {limit}")

    components = [(i, rep) for i, rep in enumerate(component_reps) if not rep.is_zero]
    if not components:
        return ZERO

    def digit(exponent: int) -> int:
        g, i = divmod(exponent, m)
        return component_reps[i].digit_at_exponent(g) if i < len(component_reps) else 0

    top = max(m * rep.leading_index + i for i, rep in components)
    if all(rep.is_finite for _, rep in components):
        bottom = min(m * (rep.leading_index - len(rep.preperiod) + 1) + i for i, rep in components)
        result = Representation(top, tuple(digit(e) for e in range(top, bottom - 1, -1)), ())
    else:
        # below gamma^T every component repeats with the common period S
        S = lcm_all(len(rep.period) or 1 for _, rep in components)
        T = min(rep.periodic_from_exponent for _, rep in components)
        start = m * T + m - 1
        leading = max(top, start)
        preperiod = tuple(digit(e) for e in range(leading, start, -1))
        period = tuple(digit(e) for e in range(start, start - m * S, -1))
        result = Representation(leading, preperiod, period)

    expected = field.zero
    for i, rep in enumerate(component_reps):
        expected = expected + eval_in_power_base(field, m, rep) * field.beta_power(i)
    if eval_rep(field, result) != expected:
        raise ValueNotPreserved(f"lifting from base beta^{m} changed the value")
    whisper("digits", f"lifted {len(components)} components from base beta^{m}", level=1)
    return canonicalize(result)
