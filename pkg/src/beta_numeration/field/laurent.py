from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from beta_numeration.errors import FieldMismatch
from beta_numeration.field.number_field import FieldElement, NumberField


@dataclass(frozen=True, eq=False)
class LaurentIntElement:
    """
    Integer Laurent polynomial sum c_e beta^e, an element of Z[beta, 1/beta].
    Terms are kept sorted by exponent with zero coefficients dropped. Two elements are equal
    when their values in Q(beta) are, since Z[beta, 1/beta] is not free on the powers of beta.
    """
    field: NumberField
    terms: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: Dict[int, int] = {}
        for exponent, coeff in self.terms:
            merged[int(exponent)] = merged.get(int(exponent), 0) + int(coeff)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c)))

    @classmethod
    def from_dict(cls, field: NumberField, mapping: Mapping[int, int]) -> "LaurentIntElement":
        return cls(field, tuple(mapping.items()))

    @classmethod
    def monomial(cls, field: NumberField, exponent: int, coeff: int = 1) -> "LaurentIntElement":
        return cls(field, ((exponent, coeff),))

    @classmethod
    def constant(cls, field: NumberField, value: int) -> "LaurentIntElement":
        return cls.monomial(field, 0, value)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def coeff(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self) -> int:
        return self.terms[0][0]

    @property
    def max_exponent(self) -> int:
        return self.terms[-1][0]

    def _check(self, other: "LaurentIntElement"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} and {other.field}")

    def __add__(self, other: "LaurentIntElement") -> "LaurentIntElement":
        self._check(other)
        return LaurentIntElement(self.field, self.terms + other.terms)

    def __neg__(self) -> "LaurentIntElement":
        return LaurentIntElement(self.field, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentIntElement") -> "LaurentIntElement":
        return self + (-other)

    def __mul__(self, other) -> "LaurentIntElement":
        if isinstance(other, int):
            return LaurentIntElement(self.field, tuple((e, c * other) for e, c in self.terms))
        self._check(other)
        return LaurentIntElement(self.field, tuple((e + f, c * g) for e, c in self.terms for f, g in other.terms))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentIntElement":
        result = LaurentIntElement.constant(self.field, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shifted(self, k: int) -> "LaurentIntElement":
        """Multiplication by beta^k."""
        return LaurentIntElement(self.field, tuple((e + k, c) for e, c in self.terms))

    @property
    def value(self) -> FieldElement:
        return laurent_to_field(self)

    def __eq__(self, other):
        return isinstance(other, LaurentIntElement) and self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*beta^{e}" for e, c in reversed(self.terms))


def laurent_to_field(z: LaurentIntElement) -> FieldElement:
    value = z.field.zero
    for exponent, coeff in z.terms:
        value = value + z.field.beta_power(exponent) * coeff
    return value
