from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import List, Sequence, Tuple

import sympy

from beta_numeration.errors import ParseError

x_symbol = sympy.Symbol("x")


@dataclass(frozen=True)
class IntPoly:
    """
    Integer polynomial, coefficients ascending by exponent (coeffs[i] = a_i).
    Trailing zeros are stripped, so the last coefficient is the leading one.
    """
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        try:
            return cls(tuple(int(part) for part in text.replace(" ", "").split(",") if part))
        except ValueError as error:
            raise ParseError(f"not a comma separated integer list: {text!r}") from error

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def content(self) -> int:
        value = 0
        for c in self.coeffs:
            value = gcd(value, c)
        return value

    @cached_property
    def primitive(self) -> bool:
        return not self.is_zero and self.content == 1

    def primitive_part(self) -> "IntPoly":
        """Divides out the content and flips the sign so the leading coefficient is positive."""
        content = self.content * (1 if self.leading > 0 else -1)
        return IntPoly(tuple(c // content for c in self.coeffs))

    def __call__(self, value):
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def reflected(self) -> "IntPoly":
        """f(-x)"""
        return IntPoly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def reciprocal(self) -> "IntPoly":
        """x^d f(1/x)"""
        return IntPoly(tuple(reversed(self.coeffs)))

    def self_reciprocal_sign(self) -> int:
        """+1 or -1 when f = ±x^d f(1/x), else 0."""
        rec = self.reciprocal().coeffs
        if rec == self.coeffs:
            return 1
        if rec == tuple(-c for c in self.coeffs):
            return -1
        return 0

    def is_even_or_odd(self) -> bool:
        """f(-x) = ±f(x), i.e. -r is a root whenever r is."""
        return self.reflected() in (self, IntPoly(tuple(-c for c in self.coeffs)))

    def to_sympy(self) -> sympy.Poly:
        return _to_sympy(self.coeffs)

    def is_irreducible(self) -> bool:
        if self.degree <= 1:
            return self.degree == 1
        return bool(self.to_sympy().is_irreducible)

    def all_roots(self) -> List:
        return _all_roots(self.coeffs)

    def __str__(self):
        return str(self.to_sympy().as_expr())


@lru_cache(maxsize=256)
def _to_sympy(coeffs: Tuple[int, ...]) -> sympy.Poly:
    return sympy.Poly(list(reversed(coeffs)), x_symbol, domain=sympy.ZZ)


@lru_cache(maxsize=256)
def _all_roots(coeffs: Tuple[int, ...]) -> List:
    # CRootOf order: real roots ascending, then the non-real ones
    return _to_sympy(coeffs).all_roots(multiple=True, radicals=False)


def integer_relation(columns: Sequence[Sequence[Fraction]]) -> Tuple[int, ...]:
    """
    Primitive integer vector c with sum_j c_j * columns[j] = 0, or () when the columns are independent.
    Trailing zero entries are dropped, the last kept entry is positive.
    """
    matrix = sympy.Matrix([[sympy.Rational(col[i].numerator, col[i].denominator) for col in columns]
                           for i in range(len(columns[0]))])
    kernel = matrix.nullspace()
    if not kernel:
        return ()

    vector = [sympy.Rational(entry) for entry in kernel[0]]
    denominator = lcm(*(int(entry.q) for entry in vector))
    return IntPoly(tuple(int(entry * denominator) for entry in vector)).primitive_part().coeffs
