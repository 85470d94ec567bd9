from collections import Counter
from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Dict, Tuple

import sympy
from sympy import factorint, totient

from beta_numeration.errors import NotCoprime, ValueNotPreserved
from beta_numeration.field import NumberField
from beta_numeration.whisper import whisper

Matrix = Tuple[Tuple[int, ...], ...]


def identity(d: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def mat_mul(a: Matrix, b: Matrix, q: int = 0) -> Matrix:
    """Integer matrix product, reduced mod q when q > 0."""
    d = len(a)
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            value = sum(a[i][k] * b[k][j] for k in range(d))
            row.append(value % q if q else value)
        rows.append(tuple(row))
    return tuple(rows)


def mat_pow(a: Matrix, k: int, q: int = 0) -> Matrix:
    result = tuple(tuple(v % q if q else v for v in row) for row in identity(len(a)))
    while k:
        if k & 1:
            result = mat_mul(result, a, q)
        a = mat_mul(a, a, q)
        k >>= 1
    return result


def mat_sub_scalar(a: Matrix, c: int, q: int = 0) -> Matrix:
    """a - c I"""
    return tuple(tuple(((v - c) if i == j else v) % q if q else ((v - c) if i == j else v)
                       for j, v in enumerate(row)) for i, row in enumerate(a))


def is_zero_mod(a: Matrix, q: int) -> bool:
    return all(v % q == 0 for row in a for v in row)


@dataclass(frozen=True)
class CompanionMatrix:
    """
    A with A b = a beta b for b = (beta^(d-1), ..., beta, 1): top row (a'_{d-1}, ..., a'_0) of the form
    a x^d - a'_{d-1} x^{d-1} - ... - a'_0, and a on the subdiagonal.
    """
    field: NumberField
    a: int
    rows: Matrix

    @property
    def dimension(self) -> int:
        return len(self.rows)


def companion_matrix(field: NumberField) -> CompanionMatrix:
    a, primes = field.t_x_coefficients()
    d = field.degree
    top = tuple(primes[d - 1 - j] for j in range(d))
    rows = (top,) + tuple(tuple(a if j == i - 1 else 0 for j in range(d)) for i in range(1, d))
    matrix = CompanionMatrix(field, a, rows)

    b = [field.beta_power(d - 1 - j) for j in range(d)]
    for i, row in enumerate(rows):
        image = sum((b[j] * c for j, c in enumerate(row) if c), field.zero)
        if image != b[i] * field.beta * a:
            raise ValueNotPreserved(f"companion matrix row {i} breaks A b = a beta b")
    return matrix


def _walk_cycle(rows: Matrix, q: int) -> Tuple[int, int]:
    """First repeated residue matrix of A^k mod q."""
    seen: Dict[Matrix, int] = {}
    power = mat_pow(rows, 0, q)
    k = 0
    while power not in seen:
        seen[power] = k
        power = mat_mul(power, rows, q)
        k += 1
    return seen[power], k - seen[power]


def _order_mod(rows: Matrix, q: int) -> int:
    """
    Multiplicative order of A mod q for det A prime to q. Per prime power p^e the order divides
    p^(e-1) prod_{i<d} (p^d - p^i), the order of GL_d(Z/p^e); prime factors are divided out while
    the power stays the identity.
    """
    d = len(rows)
    order = 1
    for p, e in factorint(q).items():
        modulus = p ** e
        one = identity(d)
        factors = Counter({p: e - 1})
        for i in range(d):
            factors.update(factorint(p ** d - p ** i))
        n = prod(r ** k for r, k in factors.items())
        for r, k in factors.items():
            for _ in range(k):
                if mat_pow(rows, n // r, modulus) != one:
                    break
                n //= r
        order = lcm(order, n)
    return order


def _split_by_det(rows: Matrix, q: int) -> Tuple[int, int]:
    """q = shared * rest with the primes of shared dividing det A and rest prime to it."""
    det = int(sympy.Matrix(rows).det())
    shared = prod(p ** e for p, e in factorint(q).items() if det % p == 0)
    return shared, q // shared


def find_cycle_mod(matrix: CompanionMatrix, q: int) -> Tuple[int, int]:
    """
    Least (m, l) with A^(m+l) = A^m mod q. The part of q sharing primes with det A is walked; on the
    rest A is invertible and purely periodic with its multiplicative order.
    """
    shared, rest = _split_by_det(matrix.rows, q)
    m, l = _walk_cycle(matrix.rows, shared) if shared > 1 else (0, 1)
    if rest > 1:
        l = lcm(l, _order_mod(matrix.rows, rest))
    whisper("pipeline", f"A^k mod {q} cycles with m = {m}, l = {l}", level=1)
    return m, l


def find_s(matrix: CompanionMatrix, a: int, q: int, m: int, l: int) -> int:
    """Least multiple s of l, at most l * phi(q), with A^m (A^s - a^s I) = 0 mod q."""
    if gcd(a, q) != 1:
        raise NotCoprime(f"gcd({a}, {q}) != 1")
    shared, rest = _split_by_det(matrix.rows, q)
    step = l
    if rest > 1:
        # A is invertible mod rest, so the condition there is (A / a)^s = I
        inverse = pow(a, -1, rest)
        scaled = tuple(tuple(v * inverse % rest for v in row) for row in matrix.rows)
        step = lcm(l, _order_mod(scaled, rest))

    if shared == 1:
        whisper("pipeline", f"s = {step} for q = {q}", level=1)
        return step
    head = mat_pow(matrix.rows, m, shared)
    jump = mat_pow(matrix.rows, step, shared)
    power = jump
    for s in range(step, step * int(totient(shared)) + 1, step):
        difference = mat_sub_scalar(power, pow(a, s, shared), shared)
        if is_zero_mod(mat_mul(head, difference, shared), shared):
            whisper("pipeline", f"s = {s} for q = {q}", level=1)
            return s
        power = mat_mul(power, jump, shared)
    raise ArithmeticError(f"no s up to l * phi({q})")
