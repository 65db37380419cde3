"""Square structure of forest counts.

Pairing the eigenvalue products at e^{2 pi i j/n} and e^{-2 pi i j/n} writes
every forest count as a small class constant times a perfect square.  The
constant depends only on the parities of the generators and on whether n
(class G1) or n/2 (classes G2-G4) is odd.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, NamedTuple

from sympy import factorint

from .errors import NegativeConstant, NonPositive, NotAPerfectSquare, NotDivisible, OddOrderForHalfClass
from .graph import BicirculantSpec, GammaClass, classify
from .laurent import forest_count_formula

__all__ = [
    "ParityProfile",
    "SequenceRow",
    "SquareStructure",
    "parity_profile",
    "rows_to_csv",
    "select_constant",
    "sequence_table",
    "square_free_part",
    "theorem4_constants",
    "verify_square_structure",
]


@dataclass(frozen=True)
class ParityProfile:
    k1: int  # odd alphas
    k2: int  # even alphas
    m1: int  # odd betas
    m2: int  # even betas
    h1: int  # odd gammas
    h2: int  # even gammas

    @property
    def r(self) -> int:
        return self.k1 + self.k2

    @property
    def t(self) -> int:
        return self.m1 + self.m2

    @property
    def s(self) -> int:
        return self.h1 + self.h2

    def value_at_minus_one(self, shift_a: int = 0, shift_b: int = 0) -> int:
        """(4k1+s+1+shift_a)(4m1+s+1+shift_b) - (h2-h1)^2, the shifted P_j(-1)."""
        s = self.s
        return (4 * self.k1 + s + 1 + shift_a) * (4 * self.m1 + s + 1 + shift_b) - (self.h2 - self.h1) ** 2


def parity_profile(spec: BicirculantSpec) -> ParityProfile:
    def split(values):
        odd = sum(1 for x in values if x % 2)
        return odd, len(values) - odd

    k1, k2 = split(spec.alphas)
    m1, m2 = split(spec.betas)
    h1, h2 = split(spec.gammas)
    return ParityProfile(k1, k2, m1, m2, h1, h2)


def square_free_part(m: int) -> int:
    """The square-free v with m = v * r^2."""
    if m < 1:
        raise NonPositive(f"square-free part needs a positive integer, got {m}")
    v = 1
    for p, e in factorint(m).items():
        if e % 2:
            v *= p
    return v


@dataclass(frozen=True)
class SquareStructure:
    """Square-free constants: ``odd`` for n (G1) or n/2 (G2-G4) odd, ``even`` otherwise.

    ``odd_raw``/``even_raw`` are the integers before taking square-free parts.
    """

    odd: int
    even: int
    odd_raw: int
    even_raw: int


_SHIFTS = {
    GammaClass.G2: (2, 0),
    GammaClass.G3: (0, 2),
    GammaClass.G4: (2, 2),
}


def theorem4_constants(spec: BicirculantSpec) -> SquareStructure:
    """Class constants of the square structure of f(2n)."""
    prof = parity_profile(spec)
    base = 2 * prof.s + 1
    even_raw = base * prof.value_at_minus_one()
    gamma_class = classify(spec)
    if gamma_class is GammaClass.G1:
        odd_raw = base
    else:
        odd_raw = base * prof.value_at_minus_one(*_SHIFTS[gamma_class])
    for raw in (odd_raw, even_raw):
        if raw <= 0:
            raise NegativeConstant(f"class constant {raw} is not positive for {spec}")
    return SquareStructure(square_free_part(odd_raw), square_free_part(even_raw), odd_raw, even_raw)


def _parity_index(spec: BicirculantSpec, n: int) -> int:
    if classify(spec) is GammaClass.G1:
        return n
    if n % 2:
        raise OddOrderForHalfClass(f"class {classify(spec).name} needs even n, got {n}")
    return n // 2


def select_constant(spec: BicirculantSpec, n: int, structure: SquareStructure | None = None) -> int:
    structure = structure or theorem4_constants(spec)
    return structure.odd if _parity_index(spec, n) % 2 else structure.even


def verify_square_structure(spec: BicirculantSpec, n: int, f: int) -> tuple[int, int]:
    """Check f = constant * root^2 and return ``(constant, root)`` with root >= 0.

    Raises NotDivisible or NotAPerfectSquare if the count breaks the structure.
    """
    constant = select_constant(spec, n)
    quotient, rem = divmod(f, constant)
    if rem:
        raise NotDivisible(f"f(2*{n}) = {f} is not divisible by {constant}")
    root = isqrt(quotient)
    if root * root != quotient:
        raise NotAPerfectSquare(f"f(2*{n}) / {constant} = {quotient} is not a square")
    return constant, root


class SequenceRow(NamedTuple):
    n: int
    f: int
    constant: int
    root: int


def sequence_table(spec: BicirculantSpec, n_from: int, n_to: int) -> list[SequenceRow]:
    """Rows (n, f, constant, root) for every admissible n in [n_from, n_to].

    Odd n are skipped for classes G2-G4.  Counts come from the exact route on
    the half-set data of ``spec`` at each order.
    """
    rows = []
    has_half = classify(spec).has_half
    for n in range(max(n_from, 1), n_to + 1):
        if has_half and n % 2:
            continue
        f = forest_count_formula(spec, n)
        constant, root = verify_square_structure(spec, n, f)
        rows.append(SequenceRow(n, f, constant, root))
    return rows


def rows_to_csv(rows: Iterable[SequenceRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SequenceRow._fields)
    for row in rows:
        writer.writerow([row.n, str(row.f), row.constant, row.root])
    return buf.getvalue()
