from fractions import Fraction
from typing import Optional

from beta_numeration import global_state
from beta_numeration.digits.representation import Representation, canonicalize, eval_rep
from beta_numeration.errors import ZeroRepresentation
from beta_numeration.field import NumberField, modulus_squared_equals, sign
from beta_numeration.whisper import whisper


def weak_greedy_check(field: NumberField, rep: Representation, c: Optional[Fraction] = None, *,
                      c_squared: Optional[Fraction] = None, exponent_offset: int = 0) -> bool:
    """
    Decides |x| >= c |beta|^(L + exponent_offset) for x the value of rep and L its leading index.
    The constant may be given squared, which is the natural form for radii of disks.
    """
    rep = canonicalize(rep)
    if rep.is_zero:
        raise ZeroRepresentation("the zero representation has no leading index")
    if c_squared is None:
        c_squared = Fraction(c) ** 2

    x = eval_rep(field, rep)
    n = rep.leading_index + exponent_offset
    beta_power = field.beta_power(n)

    if field.is_real:
        return sign(x * x - beta_power * beta_power * c_squared) >= 0

    exact = field.exact_complex(x), field.exact_complex(beta_power)
    if exact[0] and exact[1]:
        (xr, xi), (br, bi) = exact
        return xr * xr + xi * xi >= c_squared * (br * br + bi * bi)

    eps = Fraction(1, 1 << global_state.precision_bits)
    boundary_checked = False
    while True:
        lhs = x.embed(eps).abs_squared()
        rhs = beta_power.embed(eps).abs_squared().scale(c_squared)
        if lhs.lo >= rhs.hi:
            return True
        if lhs.hi < rhs.lo:
            return False
        if not boundary_checked and eps.denominator.bit_length() > global_state.exact_check_bits:
            boundary_checked = True
            if modulus_squared_equals(x / beta_power, c_squared):
                whisper("digits", "weak greedy bound met with equality")
                return True
        eps /= 1 << 16
