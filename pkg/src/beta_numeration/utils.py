import sys
from contextlib import contextmanager
from fractions import Fraction
from functools import reduce, wraps
from math import lcm
from time import perf_counter
from typing import Iterable

from colorama import Style

from beta_numeration.errors import ParseError
from beta_numeration.whisper import whisper


@contextmanager
def colored(style, fore, back, file=sys.stderr):
    print(style + fore + back, end="", file=file)
    yield
    print(Style.RESET_ALL, end="", file=file)


def timeit(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        start = perf_counter()
        result = func(*args, **kwargs)
        end = perf_counter()
        whisper("timeit", f"{func.__qualname__} took {end - start:.6f}s", level=1)
        return result
    return wrapper


def lcm_all(values: Iterable[int]) -> int:
    return reduce(lcm, values, 1)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as error:
        raise ParseError(f"not a rational number: {text!r}") from error


def to_fraction(value) -> Fraction:
    """Converts a sympy Rational (or anything exposing p/q) into a Fraction."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return Fraction(int(value.p), int(value.q))
