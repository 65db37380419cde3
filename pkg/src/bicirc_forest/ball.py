"""Midpoint-radius ball arithmetic on top of mpmath.

Each value is a midpoint plus a radius that bounds the distance to the true
value.  Every operation adds the propagated uncertainty and a bound on the
rounding error of the midpoint computation; radius computations are
inflated by a few ulps so that their own rounding cannot undercut the bound.

Precision lives in an explicit ``MPContext`` carried by the midpoints, never
in mpmath's global context.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from mpmath.ctx_mp import MPContext

__all__ = ["CertifiedComplex", "CertifiedReal", "make_context"]


def make_context(prec: int) -> MPContext:
    ctx = MPContext()
    ctx.prec = int(prec)
    return ctx


def _ulp(ctx: MPContext, k: int = 1):
    return ctx.ldexp(ctx.one, k - ctx.prec)


def _up(ctx: MPContext, x):
    """Outward safety factor for radius arithmetic."""
    return x * (1 + _ulp(ctx, 4))


def _to_mp(ctx: MPContext, value, complex_: bool = False):
    """Return (midpoint, radius) for an exact or floating input."""
    if isinstance(value, Fraction):
        mid = ctx.mpf(value.numerator) / value.denominator
        return (ctx.mpc(mid) if complex_ else mid), abs(mid) * _ulp(ctx, 1)
    if isinstance(value, int):
        mid = ctx.mpf(value)
        rad = ctx.zero if int(mid) == value else abs(mid) * _ulp(ctx, 1)
        return (ctx.mpc(mid) if complex_ else mid), rad
    if complex_:
        return ctx.mpc(value), ctx.zero
    return ctx.mpf(value), ctx.zero


Scalar = Union[int, Fraction, "CertifiedReal"]


class CertifiedReal:
    """A real number known to lie in [mid - rad, mid + rad]."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=None):
        ctx = mid.context
        self.mid = ctx.mpf(mid)
        self.rad = ctx.zero if rad is None else ctx.mpf(rad)
        if self.rad < 0:
            raise ValueError("radius must be non-negative")

    @classmethod
    def from_value(cls, ctx: MPContext, value) -> "CertifiedReal":
        mid, rad = _to_mp(ctx, value)
        return cls(mid, rad)

    @property
    def ctx(self) -> MPContext:
        return self.mid.context

    def _coerce(self, other) -> "CertifiedReal":
        if isinstance(other, CertifiedReal):
            return other
        return CertifiedReal.from_value(self.ctx, other)

    # bounds

    def lower(self):
        lo = self.mid - self.rad
        return lo - abs(lo) * _ulp(self.ctx, 1)

    def upper(self):
        hi = self.mid + self.rad
        return hi + abs(hi) * _ulp(self.ctx, 1)

    @property
    def width(self):
        return 2 * self.rad

    def contains(self, x) -> bool:
        ctx = self.ctx
        if isinstance(x, Fraction):
            return self.lower() * x.denominator <= x.numerator <= self.upper() * x.denominator
        return self.lower() <= ctx.mpf(x) <= self.upper()

    def overlaps(self, other: "CertifiedReal") -> bool:
        return self.lower() <= other.upper() and other.lower() <= self.upper()

    def unique_integer(self) -> int | None:
        """The only integer in the ball when the ball is narrower than 1/2."""
        if self.width >= 0.5:
            return None
        ctx = self.ctx
        lo, hi = int(ctx.ceil(self.lower())), int(ctx.floor(self.upper()))
        return lo if lo == hi else None

    # arithmetic

    def __neg__(self) -> "CertifiedReal":
        return CertifiedReal(-self.mid, self.rad)

    def __add__(self, other) -> "CertifiedReal":
        other = self._coerce(other)
        ctx = self.ctx
        mid = self.mid + other.mid
        return CertifiedReal(mid, _up(ctx, self.rad + other.rad + abs(mid) * _ulp(ctx, 1)))

    __radd__ = __add__

    def __sub__(self, other) -> "CertifiedReal":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CertifiedReal":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CertifiedReal":
        other = self._coerce(other)
        ctx = self.ctx
        mid = self.mid * other.mid
        rad = (abs(self.mid) * other.rad + abs(other.mid) * self.rad
               + self.rad * other.rad + abs(mid) * _ulp(ctx, 1))
        return CertifiedReal(mid, _up(ctx, rad))

    __rmul__ = __mul__

    def inverse(self) -> "CertifiedReal":
        ctx = self.ctx
        m = abs(self.mid)
        gap = m - self.rad - m * _ulp(ctx, 2)
        if gap <= 0:
            raise ZeroDivisionError("ball contains zero")
        mid = 1 / self.mid
        rad = self.rad / (m * gap) + abs(mid) * _ulp(ctx, 2)
        return CertifiedReal(mid, _up(ctx, rad))

    def __truediv__(self, other) -> "CertifiedReal":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "CertifiedReal":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "CertifiedReal":
        if k < 0:
            return (self ** (-k)).inverse()
        result = CertifiedReal.from_value(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __abs__(self) -> "CertifiedReal":
        if self.lower() >= 0:
            return self
        if self.upper() <= 0:
            return -self
        half = (abs(self.mid) + self.rad) / 2
        return CertifiedReal(half, _up(self.ctx, half))

    def _monotone(self, fn, lo, hi) -> "CertifiedReal":
        ctx = self.ctx
        a, b = fn(lo), fn(hi)
        a -= abs(a) * _ulp(ctx, 3)
        b += abs(b) * _ulp(ctx, 3)
        return CertifiedReal((a + b) / 2, _up(ctx, (b - a) / 2))

    def exp(self) -> "CertifiedReal":
        return self._monotone(self.ctx.exp, self.lower(), self.upper())

    def log(self) -> "CertifiedReal":
        lo = self.lower()
        if lo <= 0:
            raise ValueError("logarithm of a ball reaching zero")
        return self._monotone(self.ctx.log, lo, self.upper())

    def sqrt(self) -> "CertifiedReal":
        lo = self.lower()
        if lo < 0:
            raise ValueError("square root of a ball reaching below zero")
        return self._monotone(self.ctx.sqrt, lo, self.upper())

    # output

    def __float__(self) -> float:
        return float(self.mid)

    def __repr__(self) -> str:
        return f"CertifiedReal({self.ctx.nstr(self.mid, 20)} +/- {self.ctx.nstr(self.rad, 3)})"

    def format(self, digits: int = 15) -> str:
        return f"{self.ctx.nstr(self.mid, digits)} +/- {self.ctx.nstr(self.rad, 3)}"

    def to_json(self, digits: int | None = None) -> dict[str, str]:
        ctx = self.ctx
        digits = digits or max(17, int(ctx.prec * 0.30103))
        return {"mid": ctx.nstr(self.mid, digits), "rad": ctx.nstr(self.rad, 5)}


class CertifiedComplex:
    """A complex number within distance ``rad`` of ``mid``."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=None):
        ctx = mid.context
        self.mid = ctx.mpc(mid)
        self.rad = ctx.zero if rad is None else ctx.mpf(rad)

    @classmethod
    def from_value(cls, ctx: MPContext, value) -> "CertifiedComplex":
        if isinstance(value, CertifiedReal):
            return cls(ctx.mpc(value.mid), value.rad)
        mid, rad = _to_mp(ctx, value, complex_=True)
        return cls(mid, rad)

    @property
    def ctx(self) -> MPContext:
        return self.mid.context

    def _coerce(self, other) -> "CertifiedComplex":
        if isinstance(other, CertifiedComplex):
            return other
        return CertifiedComplex.from_value(self.ctx, other)

    def __neg__(self) -> "CertifiedComplex":
        return CertifiedComplex(-self.mid, self.rad)

    def __add__(self, other) -> "CertifiedComplex":
        other = self._coerce(other)
        ctx = self.ctx
        mid = self.mid + other.mid
        return CertifiedComplex(mid, _up(ctx, self.rad + other.rad + abs(mid) * _ulp(ctx, 1)))

    __radd__ = __add__

    def __sub__(self, other) -> "CertifiedComplex":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CertifiedComplex":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CertifiedComplex":
        other = self._coerce(other)
        ctx = self.ctx
        ma, mb = abs(self.mid), abs(other.mid)
        mid = self.mid * other.mid
        rad = ma * other.rad + mb * self.rad + self.rad * other.rad + ma * mb * _ulp(ctx, 2)
        return CertifiedComplex(mid, _up(ctx, rad))

    __rmul__ = __mul__

    def inverse(self) -> "CertifiedComplex":
        ctx = self.ctx
        m = abs(self.mid)
        gap = m - self.rad - m * _ulp(ctx, 2)
        if gap <= 0:
            raise ZeroDivisionError("ball contains zero")
        mid = 1 / self.mid
        rad = self.rad / (m * gap) + abs(mid) * _ulp(ctx, 3)
        return CertifiedComplex(mid, _up(ctx, rad))

    def __truediv__(self, other) -> "CertifiedComplex":
        return self * self._coerce(other).inverse()

    def __pow__(self, k: int) -> "CertifiedComplex":
        if k < 0:
            return (self ** (-k)).inverse()
        result = CertifiedComplex.from_value(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __abs__(self) -> CertifiedReal:
        ctx = self.ctx
        m = abs(self.mid)
        return CertifiedReal(m, _up(ctx, self.rad + m * _ulp(ctx, 2)))

    @property
    def real(self) -> CertifiedReal:
        ctx = self.ctx
        return CertifiedReal(self.mid.real, _up(ctx, self.rad))

    @property
    def imag(self) -> CertifiedReal:
        ctx = self.ctx
        return CertifiedReal(self.mid.imag, _up(ctx, self.rad))

    def contains(self, z) -> bool:
        ctx = self.ctx
        if isinstance(z, Fraction):
            z = ctx.mpf(z.numerator) / z.denominator
        return abs(ctx.mpc(z) - self.mid) <= self.rad * (1 + _ulp(ctx, 4)) + abs(self.mid) * _ulp(ctx, 2)

    def overlaps(self, other: "CertifiedComplex") -> bool:
        ctx = self.ctx
        return abs(self.mid - other.mid) <= _up(ctx, self.rad + other.rad)

    def __repr__(self) -> str:
        return f"CertifiedComplex({self.ctx.nstr(self.mid, 20)} +/- {self.ctx.nstr(self.rad, 3)})"
