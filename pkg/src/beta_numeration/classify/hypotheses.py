from dataclasses import dataclass

from beta_numeration.classify.classification import unit_circle_conjugate
from beta_numeration.field import NumberField


@dataclass(frozen=True)
class HypothesisReport:
    no_unit_circle_conjugate: bool
    inverse_leading_in_ring: bool
    verdict: str


def qbeta_hypotheses(field: NumberField) -> HypothesisReport:
    """
    The two conditions under which every element of Q(beta) has an eventually periodic representation:
    no conjugate on the unit circle, and 1/a_d in Z[beta, 1/beta].
    """
    from beta_numeration.pipeline.inversion import thm_finite_criterion

    no_circle = not unit_circle_conjugate(field)
    a = field.leading_coeff
    invertible = a == 1 or thm_finite_criterion(field, a)
    if not no_circle:
        verdict = "open"
    elif not invertible:
        verdict = "not_covered"
    else:
        verdict = "guaranteed"
    return HypothesisReport(no_circle, invertible, verdict)
