"""Dense univariate polynomials over Q, stored lowest degree first."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]


def to_q(p: Sequence) -> Poly:
    return trim([Fraction(c) for c in p])


def trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(p) - 1


def mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    trim(r)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(r) - db, 0)
    lead = b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = r[-1] / lead
        q[shift] = c
        for i, x in enumerate(b):
            r[shift + i] -= c * x
        r.pop()
        trim(r)
    return trim(q), r


def mod(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    return divmod_(a, b)[1]


def monic(p: Sequence[Fraction]) -> Poly:
    return [c / p[-1] for c in p]


def gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, mod(a, b)
    return monic(a) if a else []


def derivative(p: Sequence[Fraction]) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def primitive_int(p: Sequence[Fraction]) -> list[int]:
    """Scale a rational polynomial to a primitive integer one with positive lead."""
    from math import gcd as igcd, lcm

    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = igcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def squarefree_decomposition(p: Sequence) -> list[tuple[list[int], int]]:
    """Yun's algorithm: p = c * prod f_i^i with the f_i squarefree and coprime.

    Returns ``(f_i, i)`` pairs with f_i primitive integer polynomials of
    positive degree.
    """
    f = to_q(p)
    if len(f) <= 1:
        return []
    out = []
    df = derivative(f)
    a = gcd(f, df)
    b = divmod_(f, a)[0]
    c = divmod_(df, a)[0]
    d = [x - y for x, y in _pad(c, derivative(b))]
    trim(d)
    i = 1
    while len(b) > 1:
        a = gcd(b, d)
        if len(a) > 1:
            out.append((primitive_int(a), i))
        b = divmod_(b, a)[0]
        c = divmod_(d, a)[0]
        d = [x - y for x, y in _pad(c, derivative(b))]
        trim(d)
        i += 1
    return out


def _pad(a: Sequence[Fraction], b: Sequence[Fraction]):
    size = max(len(a), len(b))
    za = list(a) + [Fraction(0)] * (size - len(a))
    zb = list(b) + [Fraction(0)] * (size - len(b))
    return zip(za, zb)
