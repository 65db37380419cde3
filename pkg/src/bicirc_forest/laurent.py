"""Integer Laurent polynomials and the exact closed-form forest count.

For a bicirculant graph the eigenvalues of I + L pair up over the n-th roots
of unity, and the forest count becomes a product of a palindromic Laurent
polynomial over those roots.  That product is evaluated here exactly, as a
resultant against z^n - 1, so no floating point enters the formula route.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from . import polyq
from .errors import NonDivisible, NotPalindromic, OddOrderForHalfClass, ZeroPolynomial
from .graph import BicirculantSpec, GammaClass, classify

__all__ = [
    "ChebTransform",
    "IntLaurentPoly",
    "SymmetricPolyPack",
    "build_ABC",
    "build_P",
    "cheb_transform",
    "chebyshev_t_coeffs",
    "cyclotomic_product",
    "forest_count_formula",
    "resultant",
]

Number = Union[int, Fraction, complex]


@dataclass(frozen=True)
class IntLaurentPoly:
    """sum(coeffs[i] * z**(lo + i)), trimmed so both end coefficients are nonzero."""

    lo: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = [int(c) for c in self.coeffs]
        lo = int(self.lo)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            lo, cs = 0, []
        else:
            lo, cs = lo + start, cs[start:end]
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "coeffs", tuple(cs))

    # construction

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "IntLaurentPoly":
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        cs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            cs[e - lo] += c
        return cls(lo, tuple(cs))

    @classmethod
    def constant(cls, c: int) -> "IntLaurentPoly":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "IntLaurentPoly":
        return cls(exponent, (c,))

    @classmethod
    def symmetric(cls, exponent: int, c: int = 1) -> "IntLaurentPoly":
        """c * (z^e + z^-e)."""
        return cls.from_terms({exponent: c}) + cls.from_terms({-exponent: c})

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Largest exponent k; for a palindromic polynomial P has support [-k, k]."""
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return self.hi

    @property
    def leading_coefficient(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, exponent: int) -> int:
        i = exponent - self.lo
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> dict[int, int]:
        return {self.lo + i: c for i, c in enumerate(self.coeffs) if c}

    def reflect(self) -> "IntLaurentPoly":
        """P(z^-1)."""
        if self.is_zero:
            return self
        return IntLaurentPoly(-self.hi, tuple(reversed(self.coeffs)))

    def is_palindromic(self) -> bool:
        return self == self.reflect()

    def evaluate(self, x):
        """Evaluate at any value supporting integer powers (Fraction, complex, mpc)."""
        if isinstance(x, int) and self.lo < 0:
            x = Fraction(x)  # keep negative powers exact
        total = 0
        for e, c in self.terms().items():
            total += c * x**e
        return total

    def __call__(self, x):
        return self.evaluate(x)

    # arithmetic

    def __add__(self, other: "IntLaurentPoly | int") -> "IntLaurentPoly":
        other = _coerce(other)
        terms = self.terms()
        for e, c in other.terms().items():
            terms[e] = terms.get(e, 0) + c
        return IntLaurentPoly.from_terms(terms)

    __radd__ = __add__

    def __neg__(self) -> "IntLaurentPoly":
        return IntLaurentPoly(self.lo, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntLaurentPoly | int") -> "IntLaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntLaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "IntLaurentPoly | int") -> "IntLaurentPoly":
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return IntLaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntLaurentPoly(self.lo + other.lo, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntLaurentPoly":
        result = IntLaurentPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    # text form

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*z^{e}" for e, c in sorted(self.terms().items()))

    @classmethod
    def parse(cls, text: str) -> "IntLaurentPoly":
        """Inverse of ``str``: ``"-2*z^-1 + 7*z^0 + -2*z^1"``."""
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[int, int] = {}
        for part in text.split(" + "):
            m = _TERM.fullmatch(part.strip())
            if m is None:
                raise ValueError(f"cannot parse term {part!r}")
            e = int(m.group(2))
            terms[e] = terms.get(e, 0) + int(m.group(1))
        return cls.from_terms(terms)


_TERM = re.compile(r"(-?\d+)\*z\^(-?\d+)")


def _coerce(x: "IntLaurentPoly | int") -> IntLaurentPoly:
    if isinstance(x, IntLaurentPoly):
        return x
    if isinstance(x, int):
        return IntLaurentPoly.constant(x)
    return NotImplemented  # type: ignore[return-value]


@dataclass(frozen=True)
class SymmetricPolyPack:
    A: IntLaurentPoly
    B: IntLaurentPoly
    C: IntLaurentPoly
    P: tuple[IntLaurentPoly, IntLaurentPoly, IntLaurentPoly, IntLaurentPoly]

    @property
    def P1(self) -> IntLaurentPoly:
        return self.P[0]

    @property
    def P2(self) -> IntLaurentPoly:
        return self.P[1]

    @property
    def P3(self) -> IntLaurentPoly:
        return self.P[2]

    @property
    def P4(self) -> IntLaurentPoly:
        return self.P[3]

    @property
    def degrees(self) -> tuple[int, int, int, int]:
        return tuple(p.degree for p in self.P)  # type: ignore[return-value]

    @property
    def k(self) -> int:
        degs = set(self.degrees)
        if len(degs) != 1:
            raise ValueError(f"P1..P4 have different degrees {self.degrees}")
        return degs.pop()

    def for_class(self, gamma_class: GammaClass) -> IntLaurentPoly:
        """The polynomial that pairs with P1 for the given class (P1 itself for G1)."""
        return self.P[gamma_class.value - 1]


def build_ABC(spec: BicirculantSpec) -> tuple[IntLaurentPoly, IntLaurentPoly, IntLaurentPoly]:
    """Symbols of the right block, left block and spoke block of I + L.

    Half flags are ignored here; their +2 shift is applied in ``build_P``.
    """
    return _abc(spec.alphas, spec.betas, spec.gammas)


def _abc(alphas, betas, gammas):
    s = len(gammas)
    A = IntLaurentPoly.constant(2 * len(alphas) + s + 1)
    for a in alphas:
        A = A - IntLaurentPoly.symmetric(a)
    B = IntLaurentPoly.constant(2 * len(betas) + s + 1)
    for b in betas:
        B = B - IntLaurentPoly.symmetric(b)
    C = IntLaurentPoly.from_terms({g: -1 for g in gammas})
    return A, B, C


@lru_cache(maxsize=1024)
def _build_P(alphas, betas, gammas) -> SymmetricPolyPack:
    A, B, C = _abc(alphas, betas, gammas)
    CC = C.reflect() * C
    P = (A * B - CC, (A + 2) * B - CC, A * (B + 2) - CC, (A + 2) * (B + 2) - CC)
    return SymmetricPolyPack(A, B, C, P)


def build_P(spec: BicirculantSpec) -> SymmetricPolyPack:
    """A, B, C and the four palindromic polynomials P1..P4.

    The pack depends only on the half-set data, not on n.
    """
    return _build_P(spec.alphas, spec.betas, spec.gammas)


@lru_cache(maxsize=None)
def chebyshev_t_coeffs(j: int) -> tuple[int, ...]:
    """Monomial coefficients of T_j(w), lowest degree first."""
    if j == 0:
        return (1,)
    if j == 1:
        return (0, 1)
    prev, cur = chebyshev_t_coeffs(j - 2), chebyshev_t_coeffs(j - 1)
    out = [0] * (j + 1)
    for i, c in enumerate(cur):
        out[i + 1] += 2 * c
    for i, c in enumerate(prev):
        out[i] -= c
    return tuple(out)


@dataclass(frozen=True)
class ChebTransform:
    """U(w) with U((z + 1/z)/2) = P(z); coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    def evaluate(self, w):
        total = 0
        for c in reversed(self.coeffs):
            total = total * w + c
        return total

    def __call__(self, w):
        return self.evaluate(w)


def cheb_transform(p: IntLaurentPoly) -> ChebTransform:
    """Chebyshev transform of a nonzero palindromic Laurent polynomial."""
    if p.is_zero:
        raise ZeroPolynomial("cannot transform the zero polynomial")
    if not p.is_palindromic():
        raise NotPalindromic(f"P(z) != P(1/z) for {p}")
    k = p.degree
    out = [0] * (k + 1)
    out[0] = p.coefficient(0)
    for j in range(1, k + 1):
        eta = p.coefficient(j)
        if eta:
            for i, c in enumerate(chebyshev_t_coeffs(j)):
                out[i] += 2 * eta * c
    return ChebTransform(tuple(out))


def _x_pow_mod(n: int, m: Sequence[Fraction]) -> list[Fraction]:
    """z^n mod m by repeated squaring."""
    result = polyq.mod([Fraction(1)], m)
    base = polyq.mod([Fraction(0), Fraction(1)], m)
    while n:
        if n & 1:
            result = polyq.mod(polyq.mul(result, base), m)
        n >>= 1
        if n:
            base = polyq.mod(polyq.mul(base, base), m)
    return result


def resultant(f: Sequence[Number], g: Sequence[Number]) -> Fraction:
    """Res(f, g) of dense polynomials (lowest degree first) by the Euclidean scheme.

    Uses Res(f, g) = (-1)^(deg f deg g) lc(g)^(deg f - deg r) Res(g, r) with
    r = f mod g.
    """
    a = polyq.to_q(f)
    b = polyq.to_q(g)
    if not a or not b:
        return Fraction(0)
    acc = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return acc * b[0] ** da
        if da == 0:
            return acc * a[0] ** db
        if da < db:
            a, b = b, a
            if da * db % 2:
                acc = -acc
            continue
        r = polyq.mod(a, b)
        if not r:
            return Fraction(0)
        if da * db % 2:
            acc = -acc
        acc *= b[-1] ** (da - (len(r) - 1))
        a, b = b, r


def cyclotomic_product(p: IntLaurentPoly, n: int) -> int:
    """Exact prod_{j=0}^{n-1} P(e^{2 pi i j / n}).

    With q(z) = z^{-lo} P(z) an ordinary polynomial, the product of q over the
    n-th roots of unity is Res(z^n - 1, q), and the monomial factor
    contributes prod_j e^{2 pi i j lo / n} = (-1)^{lo (n-1)}.
    """
    if p.is_zero:
        raise ZeroPolynomial("cyclotomic product of the zero polynomial")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    q = [Fraction(c) for c in p.coeffs]
    d = len(q) - 1
    if d == 0:
        res = q[0] ** n
    else:
        rem = _x_pow_mod(n, q) or [Fraction(0)]
        rem[0] -= 1
        rem = polyq.trim(rem)
        if not rem:
            return 0
        # Res(z^n - 1, q) = (-1)^{nd} Res(q, z^n - 1) = (-1)^{nd} lc(q)^{n - deg rem} Res(q, rem)
        res = resultant(q, rem) * q[-1] ** (n - (len(rem) - 1))
        if n * d % 2:
            res = -res
    if p.lo * (n - 1) % 2:
        res = -res
    if res.denominator != 1:
        raise NonDivisible(f"cyclotomic product is not an integer: {res}")
    return int(res)


def forest_count_formula(spec: BicirculantSpec, n: int | None = None) -> int:
    """Exact forest count from cyclotomic products of P1..P4.

    ``n`` defaults to ``spec.n``.  Passing another order evaluates the same
    half-set data over Z_n, which is how sequences in n are tabulated.
    """
    n = spec.n if n is None else n
    gamma_class = classify(spec)
    pack = build_P(spec)
    if gamma_class is GammaClass.G1:
        value = cyclotomic_product(pack.P1, n)
    else:
        if n % 2:
            raise OddOrderForHalfClass(f"class {gamma_class.name} needs even n, got {n}")
        shifted = pack.for_class(gamma_class)
        half = n // 2
        num = cyclotomic_product(shifted, n) * cyclotomic_product(pack.P1, half)
        den = cyclotomic_product(shifted, half)
        value, rem = divmod(num, den)
        if rem:
            raise NonDivisible(f"{num} is not divisible by {den}")
    value = abs(value)
    assert value >= 1, f"forest count must be positive, got {value}"
    return value
