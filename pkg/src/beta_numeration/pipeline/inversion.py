from typing import Optional

from sympy import factorint

from beta_numeration.errors import ValueNotPreserved
from beta_numeration.field import LaurentIntElement, NumberField
from beta_numeration.whisper import whisper


def _exceptional_index(field: NumberField, p: int) -> Optional[int]:
    """The single coefficient index j with p not dividing a_j, if there is exactly one."""
    indices = [i for i, a in enumerate(field.minpoly.coeffs) if a % p]
    return indices[0] if len(indices) == 1 else None


def thm_finite_criterion(field: NumberField, n: int) -> bool:
    """1/n lies in Z[beta, 1/beta] iff every prime of n divides all coefficients of the minimal polynomial but one."""
    return all(_exceptional_index(field, p) is not None for p in factorint(n))


def _inverse_prime(field: NumberField, p: int, j: int) -> LaurentIntElement:
    # a_j = -sum_{i != j} a_i beta^(i-j) and a_j x + p y = 1
    coeffs = field.minpoly.coeffs
    x = pow(coeffs[j], -1, p)
    y = (1 - coeffs[j] * x) // p
    terms = [(0, y)] + [(i - j, -x * (a // p)) for i, a in enumerate(coeffs) if i != j]
    return LaurentIntElement(field, tuple(terms))


def invert_integer_thm_finite(field: NumberField, n: int) -> Optional[LaurentIntElement]:
    """
    1/n as an integer Laurent polynomial in beta, or None when 1/n is not in Z[beta, 1/beta].
    Built prime by prime from a_j x + p y = 1 and raised to the multiplicity of each prime.
    """
    result = LaurentIntElement.constant(field, 1)
    for p, multiplicity in sorted(factorint(n).items()):
        j = _exceptional_index(field, p)
        if j is None:
            whisper("pipeline", f"1/{n} is not in Z[beta, 1/beta]: {p} divides too few coefficients", level=1)
            return None
        result = result * _inverse_prime(field, p, j) ** multiplicity

    if result.value * n != field.one:
        raise ValueNotPreserved(f"constructed inverse of {n} evaluates to {result.value}")
    whisper("pipeline", f"1/{n} = {result}", level=2)
    return result
