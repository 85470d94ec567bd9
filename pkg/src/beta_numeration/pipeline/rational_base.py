"""
Digits of rationals in a rational base beta = p/a straight from integer arithmetic.

A rational N / (r qbar) with qbar z = p^m (p^s - a^s) and r | a^k equals beta^(-m) W / (beta^s - 1)
where W = Z' / a^n, Z' = N z (a^k / r) a^e and n = k + m + s + e. W is written as sum d_j beta^j with
balanced digits, which folds into a periodic tail without ever expanding (1/a)^(s+m) term by term.
"""
from dataclasses import dataclass
from math import log
from typing import List, Optional

from beta_numeration.digits import Representation
from beta_numeration.field import NumberField
from beta_numeration.whisper import whisper

_CHUNK = 32


@dataclass(frozen=True)
class Congruence:
    """qbar z = p^m (p^s - a^s) for a rational base p/a."""
    qbar: int
    m: int
    s: int
    z: int


def balanced_digits(p: int, a: int, value: int, n: int) -> List[int]:
    """
    d_0, ..., d_n with value = sum d_j p^j a^(n-j). Every d_j below d_n is a residue mod |p| in
    (-|p|/2, |p|/2]; d_n is what is left. Digits come off _CHUNK at a time modulo |p|^_CHUNK.
    """
    modulus = abs(p)
    half = modulus // 2
    a_powers = [a ** i for i in range(_CHUNK + 1)]
    inverse_a = [pow(a, -i, modulus) for i in range(_CHUNK)]
    digits: List[int] = []
    a_rest = a ** n
    while len(digits) < n:
        remaining = n - len(digits)
        h = min(_CHUNK, remaining)
        chunk_modulus = modulus ** h
        # the low h digits are those of value / a^(remaining-h+1) mod |p|^h
        y = value % chunk_modulus * pow(a, -(remaining - h + 1), chunk_modulus) % chunk_modulus
        chunk = []
        for i in range(h):
            digit = y * inverse_a[h - 1 - i] % modulus
            if digit > half:
                digit -= modulus
            chunk.append(digit)
            y = (y - digit * a_powers[h - 1 - i]) // p
        block = 0
        for i in reversed(range(h)):
            block = block * p + chunk[i] * a_powers[h - 1 - i]
        value = (value - a_rest // a_powers[h - 1] * block) // p ** h
        a_rest //= a_powers[h]
        digits.extend(chunk)
    digits.append(value)
    return digits


def _headroom(field: NumberField, numerator: int, denominator: int, k: int) -> int:
    """Least e >= 0 (give or take one) with |numerator / denominator| < |beta|^(k+e)."""
    p, a = -field.minpoly.coeffs[0], field.minpoly.coeffs[1]
    magnitude = log(abs(numerator)) - log(denominator)
    return max(0, int(magnitude / (log(abs(p)) - log(a))) - k + 1)


def expand_rational(field: NumberField, numerator: int, r: int, k: int,
                    congruence: Optional[Congruence]) -> Representation:
    """numerator / (r qbar), finite when there is no congruence (qbar = 1)."""
    p, a = -field.minpoly.coeffs[0], field.minpoly.coeffs[1]
    qbar = congruence.qbar if congruence is not None else 1
    e = _headroom(field, numerator, r * qbar, k)
    scaled = numerator * (a ** k // r) * a ** e

    if congruence is None:
        n = k + e
        digits = balanced_digits(p, a, scaled, n)
        return Representation(n, tuple(reversed(digits)), ())

    m, s = congruence.m, congruence.s
    n = k + m + s + e
    folded = balanced_digits(p, a, scaled * congruence.z, n)
    # the digit of beta^(J-m-s) is the sum of d_(J+si) over i >= 0
    for j in range(n - s, -1, -1):
        folded[j] += folded[j + s]
    stream = folded[::-1]
    whisper("pipeline", f"{numerator}/{r * qbar}: {n + 1} balanced digits folded with period {s}", level=2)
    return Representation(n - m - s, stream[:n - s + 1], stream[n - s + 1:])
