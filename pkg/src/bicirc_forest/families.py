"""Reference families of bicirculant graphs with their published invariants.

Each family fixes the half-set data and lets n vary.  The golden values are
literal: square-free constants of the square structure and closed forms of
the growth constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import BicirculantSpec

__all__ = ["FAMILIES", "Family", "family"]


@dataclass(frozen=True)
class Family:
    index: int
    label: str
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    gammas: tuple[int, ...]
    half_in_R: bool
    half_in_T: bool
    odd_constant: int
    even_constant: int
    constant_name: str
    closed_form: Callable  # ctx -> growth constant
    closed_form_text: str
    transform_roots: tuple[tuple[str, tuple], ...]  # (polynomial, roots of its transform)

    @property
    def has_half(self) -> bool:
        return self.half_in_R or self.half_in_T

    @property
    def min_n(self) -> int:
        """Smallest order at which the family is a simple graph."""
        n = 2 * max((*self.alphas, *self.betas), default=0) + 1
        n = max(n, max(self.gammas, default=0) + 1)
        if self.has_half and n % 2:
            n += 1
        return n

    def valid_orders(self, upto: int) -> list[int]:
        step = 2 if self.has_half else 1
        return list(range(self.min_n, upto + 1, step))

    def spec(self, n: int | None = None) -> BicirculantSpec:
        return BicirculantSpec(
            self.min_n if n is None else n,
            self.alphas, self.betas, self.gammas, self.half_in_R, self.half_in_T,
        )


def _sqrt(ctx, x):
    return ctx.sqrt(x)


FAMILIES: tuple[Family, ...] = (
    Family(1, "BC(Z_n; {1,-1}, {}, {0})", (1,), (), (0,), False, False, 3, 33, "A",
           lambda c: (7 + _sqrt(c, 33)) / 2, "(7+sqrt33)/2",
           (("P1", ("7/4",)),)),
    Family(2, "BC(Z_n; {1,-1,n/2}, {}, {0})", (1,), (), (0,), True, False, 5, 33, "B",
           lambda c: (7 + _sqrt(c, 33)) * (11 + _sqrt(c, 105)) / 4, "(7+sqrt33)(11+sqrt105)/4",
           (("P2", ("11/4",)), ("P1", ("7/4",)))),
    Family(3, "BC(Z_n; {1,-1}, {n/2}, {0})", (1,), (), (0,), False, True, 69, 33, "C",
           lambda c: (7 + _sqrt(c, 33)) * (15 + _sqrt(c, 161)) / 4, "(7+sqrt33)(15+sqrt161)/4",
           (("P3", ("15/8",)), ("P1", ("7/4",)))),
    Family(4, "BC(Z_n; {1,-1,n/2}, {n/2}, {0})", (1,), (), (0,), True, True, 93, 33, "D",
           lambda c: (7 + _sqrt(c, 33)) * (23 + _sqrt(c, 465)) / 4, "(7+sqrt33)(23+sqrt465)/4",
           (("P4", ("23/8",)), ("P1", ("7/4",)))),
    Family(5, "BC(Z_n; {1,-1}, {1,-1}, {0}) = Cay(D_2n, {a, a^-1, b})", (1,), (1,), (0,), False, False,
           3, 105, "A",
           lambda c: (3 + _sqrt(c, 5)) * (5 + _sqrt(c, 21)) / 4, "(3+sqrt5)(5+sqrt21)/4",
           (("P1", ("3/2", "5/2")),)),
    Family(6, "BC(Z_n; {1,-1,n/2}, {1,-1,n/2}, {0}) = Cay(D_2n, {a, a^-1, a^(n/2), b})",
           (1,), (1,), (0,), True, True, 21, 105, "D",
           lambda c: (3 + _sqrt(c, 5)) * (5 + _sqrt(c, 21)) ** 2 * (7 + 3 * _sqrt(c, 5)) / 16,
           "(3+sqrt5)(5+sqrt21)^2(7+3sqrt5)/16",
           (("P4", ("5/2", "7/2")), ("P1", ("3/2", "5/2")))),
)


def family(index: int) -> Family:
    for fam in FAMILIES:
        if fam.index == index:
            return fam
    raise KeyError(f"no reference family {index}")
