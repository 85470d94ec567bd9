import re

from beta_numeration.digits.representation import Representation, ZERO
from beta_numeration.errors import ParseError

BULLET = "•"
OMEGA = "ω"

_DIGITS = re.compile(r"^-?\d+(,-?\d+)*$")


def _digit_list(text: str, rep_text: str):
    text = text.strip(",")
    if not text:
        return ()
    if not _DIGITS.match(text):
        raise ParseError(f"bad digit sequence {text!r} in {rep_text!r}")
    return tuple(int(d) for d in text.split(","))


def parse_representation(text: str) -> Representation:
    """
    Reads "2,3•1,(0,-1)ω": digits before the bullet sit at beta^0 and above, the period is wrapped
    in "(...)ω". ASCII "." and "^w" are accepted for the bullet and omega.
    """
    compact = re.sub(r"\s+", "", text).replace("−", "-").replace("^w", OMEGA)
    if BULLET not in compact:
        compact = compact.replace(".", BULLET, 1)
    if compact.count(BULLET) != 1:
        raise ParseError(f"representation needs exactly one bullet: {text!r}")

    intpart, fracpart = compact.split(BULLET)
    period = ()
    if "(" in fracpart:
        head, _, rest = fracpart.partition("(")
        if not rest.endswith(")" + OMEGA):
            raise ParseError(f"period must be written as (...){OMEGA}: {text!r}")
        period = _digit_list(rest[:-2], text)
        if not period:
            raise ParseError(f"empty period in {text!r}")
        fracpart = head

    integer_digits = _digit_list(intpart, text)
    fraction_digits = _digit_list(fracpart, text)
    digits = integer_digits + fraction_digits
    if not digits and not period:
        return ZERO
    return Representation(len(integer_digits) - 1, digits, period)


def format_representation(rep: Representation) -> str:
    if rep.is_zero:
        return f"0{BULLET}"

    leading = rep.leading_index
    if leading < 0:
        rep = rep.raised_to(-1)
        intpart = "0"
        fraction = rep.preperiod
    else:
        rep = rep.with_preperiod(leading + 1)
        intpart = ",".join(str(d) for d in rep.preperiod[:leading + 1])
        fraction = rep.preperiod[leading + 1:]

    text = intpart + BULLET + ",".join(str(d) for d in fraction)
    if rep.period:
        text += "(" + ",".join(str(d) for d in rep.period) + ")" + OMEGA
    return text
