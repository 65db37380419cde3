"""Certified evaluation of the Chebyshev forms and of Mahler measures.

The exact count from :mod:`bicirc_forest.laurent` is re-derived here along
the Chebyshev route: roots w of the Chebyshev transform are enclosed in
certified discs, T_n is evaluated on those discs in ball arithmetic and the
product is rounded to the unique integer it contains.  The same machinery
gives the growth constants as Mahler measures, computed both from root
moduli and from the circle integral of log|P|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from mpmath.libmp.libhyper import NoConvergence

from . import polyq
from .ball import CertifiedComplex, CertifiedReal, make_context
from .errors import OddOrderForHalfClass, PrecisionExhausted, RootOnUnitCircle, ToleranceNotMet, ZeroPolynomial
from .graph import BicirculantSpec, GammaClass, classify
from .laurent import ChebTransform, IntLaurentPoly, build_P, cheb_transform, forest_count_formula

__all__ = [
    "ConvergenceRow",
    "RootSet",
    "asymptotic_constant",
    "cheb_T",
    "chebyshev_cyclotomic_product",
    "class_polynomial",
    "convergence_report",
    "find_roots",
    "find_transform_roots",
    "forest_count_chebyshev",
    "mahler_integral",
    "mahler_roots",
    "report_record",
    "sample_on_circle",
]

START_PRECISION = 128
MAX_PRECISION = 16384


@dataclass(frozen=True)
class RootSet:
    """Certified root discs; disc i holds exactly one root of multiplicity ``multiplicities[i]``."""

    roots: tuple[CertifiedComplex, ...] = ()
    multiplicities: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    def __iter__(self):
        return iter(zip(self.roots, self.multiplicities))


def _horner(coeffs: Sequence[int], z: CertifiedComplex) -> CertifiedComplex:
    acc = CertifiedComplex.from_value(z.ctx, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _newton_polish(coeffs: Sequence[int], guesses, ctx):
    """Refine double-precision roots by Newton's method; None if it stalls."""
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    tol = ctx.ldexp(1, 8 - ctx.prec)
    out = []
    for g in guesses:
        z = ctx.mpc(complex(g))
        for _ in range(ctx.prec.bit_length() + 12):
            fz = ctx.polyval(list(reversed(coeffs)), z)
            dz = ctx.polyval(list(reversed(deriv)), z)
            if dz == 0:
                return None
            step = fz / dz
            z -= step
            if abs(step) <= tol * max(1, abs(z)):
                break
        else:
            return None
        out.append(z)
    return out


def _certify_simple_roots(coeffs: Sequence[int], prec: int) -> list[CertifiedComplex]:
    """Enclose every root of a squarefree integer polynomial.

    Approximations come from companion-matrix eigenvalues polished by
    Newton's method, with mpmath's Durand-Kerner iteration as fallback.  They are
    certified with Gershgorin's theorem applied to the Weierstrass matrix
    diag(z_i) - W 1^T, whose eigenvalues are the roots: disc i is centred at
    z_i - W_i with radius (d-1)|W_i|, and a disc disjoint from all others
    holds exactly one root.
    """
    ctx = make_context(prec)
    d = len(coeffs) - 1
    if d == 1:
        root = Fraction(-coeffs[0], coeffs[1])
        return [CertifiedComplex.from_value(ctx, root)]
    approx = _newton_polish(coeffs, np.roots(list(reversed(coeffs))), ctx)
    if approx is not None:
        try:
            return _gershgorin_discs(coeffs, approx, ctx)
        except PrecisionExhausted:
            pass
    try:
        approx = ctx.polyroots(list(reversed(coeffs)), maxsteps=200 + 4 * d,
                               extraprec=prec, error=False)
    except NoConvergence as exc:
        raise PrecisionExhausted(f"root iteration did not converge at {prec} bits") from exc
    return _gershgorin_discs(coeffs, approx, ctx)


def _gershgorin_discs(coeffs: Sequence[int], approx, ctx) -> list[CertifiedComplex]:
    d = len(coeffs) - 1
    prec = ctx.prec
    points = [CertifiedComplex.from_value(ctx, ctx.mpc(z)) for z in approx]
    lead = coeffs[-1]
    discs = []
    for i, zi in enumerate(points):
        denom = CertifiedComplex.from_value(ctx, lead)
        for j, zj in enumerate(points):
            if j != i:
                denom = denom * (zi - zj)
        try:
            w = _horner(coeffs, zi) / denom
        except ZeroDivisionError as exc:
            raise PrecisionExhausted("coincident root approximations") from exc
        centre = zi - w
        mag = abs(w)
        discs.append(CertifiedComplex(centre.mid, centre.rad + (d - 1) * mag.upper()))
    for i in range(d):
        for j in range(i + 1, d):
            if discs[i].overlaps(discs[j]):
                raise PrecisionExhausted(f"root discs not separated at {prec} bits")
    return discs


def find_roots(coeffs: Sequence[int], precision: int = START_PRECISION) -> RootSet:
    """Certified roots, with multiplicity, of an integer polynomial (lowest degree first).

    Repeated roots are split off exactly by squarefree decomposition, so every
    returned disc encloses a single distinct root.
    """
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomial("the zero polynomial has no finite root set")
    roots: list[CertifiedComplex] = []
    mults: list[int] = []
    for factor, mult in polyq.squarefree_decomposition(coeffs):
        for disc in _certify_simple_roots(factor, precision):
            roots.append(disc)
            mults.append(mult)
    return RootSet(tuple(roots), tuple(mults))


def find_transform_roots(u: ChebTransform, precision: int = START_PRECISION) -> RootSet:
    """Certified roots w_1..w_k of a Chebyshev transform; empty when k = 0."""
    if u.degree < 1:
        return RootSet()
    return find_roots(u.coeffs, precision)


def cheb_T(n: int, w) -> CertifiedComplex:
    """T_n(w) on a ball, via the doubling ladder T_2m = 2T_m^2 - 1, T_2m+1 = 2T_m T_m+1 - w.

    The ladder uses only ring operations, so it is branch-free for any
    complex w and costs O(log n) ball multiplications.
    """
    if n < 0:
        raise ValueError("Chebyshev index must be non-negative")
    if not isinstance(w, CertifiedComplex):
        raise TypeError("cheb_T expects a CertifiedComplex argument")
    one = CertifiedComplex.from_value(w.ctx, 1)
    if n == 0:
        return one
    lo, hi = w, 2 * w * w - 1  # (T_m, T_m+1) with m = 1
    for bit in bin(n)[3:]:
        if bit == "1":
            lo, hi = 2 * lo * hi - w, 2 * hi * hi - 1
        else:
            lo, hi = 2 * lo * lo - 1, 2 * lo * hi - w
    return lo


def _cheb_factor(p: IntLaurentPoly, m: int, shift: int, prec: int) -> CertifiedReal:
    """|eta_k|^m prod |2 T_m(w) + shift|^mult over roots w of the transform of p."""
    ctx = make_context(prec)
    value = CertifiedReal.from_value(ctx, abs(p.leading_coefficient)) ** m
    u = cheb_transform(p)
    for w, mult in find_transform_roots(u, prec):
        term = abs(2 * cheb_T(m, w) + shift)
        value = value * term**mult
    return value


def chebyshev_cyclotomic_product(p: IntLaurentPoly, n: int, precision: int = START_PRECISION) -> CertifiedComplex:
    """(-1)^{nk} eta_k^n prod (2T_n(w) - 2) in ball arithmetic; equals prod P(e^{2 pi i j/n})."""
    ctx = make_context(precision)
    k = p.degree
    value = CertifiedComplex.from_value(ctx, (-1) ** (n * k) * p.leading_coefficient**n)
    for w, mult in find_transform_roots(cheb_transform(p), precision):
        value = value * (2 * cheb_T(n, w) - 2) ** mult
    return value


def _chebyshev_ball(spec: BicirculantSpec, n: int, prec: int) -> CertifiedReal:
    gamma_class = classify(spec)
    pack = build_P(spec)
    if gamma_class is GammaClass.G1:
        return _cheb_factor(pack.P1, n, -2, prec)
    if n % 2:
        raise OddOrderForHalfClass(f"class {gamma_class.name} needs even n, got {n}")
    half = n // 2
    return _cheb_factor(pack.for_class(gamma_class), half, 2, prec) * _cheb_factor(pack.P1, half, -2, prec)


def forest_count_chebyshev(
    spec: BicirculantSpec,
    precision: int = START_PRECISION,
    *,
    n: int | None = None,
    max_precision: int = MAX_PRECISION,
    return_precision: bool = False,
):
    """Forest count from the Chebyshev closed form, rounded from a certified ball.

    Precision doubles from ``precision`` until the enclosure is narrower than
    1/2, so the result is the unique integer inside it.  With
    ``return_precision`` the final working precision is returned too.
    """
    n = spec.n if n is None else n
    prec = int(precision)
    while prec <= max_precision:
        try:
            ball = _chebyshev_ball(spec, n, prec)
        except (PrecisionExhausted, ZeroDivisionError):
            ball = None
        if ball is not None:
            value = ball.unique_integer()
            if value is not None:
                return (value, prec) if return_precision else value
        prec *= 2
    raise PrecisionExhausted(f"no integer isolated below {max_precision} bits")


def _as_int_poly(p: IntLaurentPoly) -> list[int]:
    """Coefficients of z^{-lo} P(z), lowest degree first."""
    return list(p.coeffs)


def mahler_roots(
    p: IntLaurentPoly, precision: int = START_PRECISION, *, max_precision: int = 4096
) -> CertifiedReal:
    """Mahler measure |a| prod_{|z|>1} |z| over certified roots of z^{-lo} P(z)."""
    if p.is_zero:
        raise ZeroPolynomial("Mahler measure of the zero polynomial")
    coeffs = _as_int_poly(p)
    prec = int(precision)
    while prec <= max_precision:
        ctx = make_context(prec)
        try:
            roots = find_roots(coeffs, prec)
        except PrecisionExhausted:
            prec *= 2
            continue
        value = CertifiedReal.from_value(ctx, abs(coeffs[-1]))
        undecided = False
        for z, mult in roots:
            mod = abs(z)
            if mod.lower() > 1:
                value = value * mod**mult
            elif mod.upper() >= 1:
                undecided = True
                break
        if not undecided:
            return value
        prec *= 2
    raise RootOnUnitCircle(f"cannot separate roots of {p} from |z| = 1 below {max_precision} bits")


def mahler_integral(
    p: IntLaurentPoly, tolerance: float = 1e-12, *, max_points: int = 1 << 18
) -> CertifiedReal:
    """exp of the mean of log|P| on the unit circle, by the trapezoidal rule.

    log|P(e^{i theta})| is periodic and analytic when P has no zero on the
    circle, so the equispaced rule converges geometrically.  The number of
    nodes doubles (reusing old nodes) until two successive estimates of the
    measure differ by less than ``tolerance``; that difference is reported
    as the radius.  It is an a posteriori estimate, not a proof.
    """
    if p.is_zero:
        raise ZeroPolynomial("Mahler measure of the zero polynomial")
    digits = max(30, int(-math.log10(tolerance)) + 15) if tolerance > 0 else 30
    ctx = make_context(int(digits * 3.33) + 8)
    coeffs = _as_int_poly(p)

    def log_abs(t):
        z = ctx.expjpi(2 * t)
        acc = ctx.mpc(0)
        for c in reversed(coeffs):
            acc = acc * z + c
        mag = abs(acc)
        if mag == 0:
            raise RootOnUnitCircle(f"{p} vanishes on the unit circle")
        return ctx.log(mag)

    points = 8
    total = ctx.fsum(log_abs(ctx.mpf(j) / points) for j in range(points))
    estimate = ctx.exp(total / points)
    while points < max_points:
        total += ctx.fsum(log_abs(ctx.mpf(2 * j + 1) / (2 * points)) for j in range(points))
        points *= 2
        new = ctx.exp(total / points)
        diff = abs(new - estimate)
        estimate = new
        if points >= 32 and diff < tolerance:
            return CertifiedReal(estimate, diff + abs(estimate) * ctx.ldexp(1, 8 - ctx.prec))
    raise ToleranceNotMet(f"trapezoidal rule for {p} not within {tolerance} at {points} nodes")


def class_polynomial(spec: BicirculantSpec) -> IntLaurentPoly:
    """P1 for class G1, otherwise the product P_j P1 whose measure governs growth."""
    pack = build_P(spec)
    gamma_class = classify(spec)
    if gamma_class is GammaClass.G1:
        return pack.P1
    return pack.for_class(gamma_class) * pack.P1


def asymptotic_constant(spec: BicirculantSpec, precision: int = START_PRECISION) -> CertifiedReal:
    """Growth constant A, B, C or D: f(2n) ~ M^n for G1, M^{n/2} otherwise."""
    return mahler_roots(class_polynomial(spec), precision)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    count: int
    constant: CertifiedReal
    ratio: CertifiedReal


def convergence_report(
    spec: BicirculantSpec, n_list: Iterable[int], precision: int = 256
) -> list[ConvergenceRow]:
    """Ratios f(2n) / M^n (G1) or f(2n) / M^{n/2} (G2-G4) for each n.

    Counts come from the exact route, evaluated on the half-set data of
    ``spec`` at each requested order.
    """
    gamma_class = classify(spec)
    n_list = list(n_list)
    if gamma_class.has_half:
        odd = [n for n in n_list if n % 2]
        if odd:
            raise OddOrderForHalfClass(f"class {gamma_class.name} needs even n, got {odd}")
    if not n_list:
        return []
    constant = asymptotic_constant(spec, precision)
    rows = []
    for n in n_list:
        count = forest_count_formula(spec, n)
        exponent = n if gamma_class is GammaClass.G1 else n // 2
        ratio = CertifiedReal.from_value(constant.ctx, count) / constant**exponent
        rows.append(ConvergenceRow(n, count, constant, ratio))
    return rows


def report_record(row: ConvergenceRow) -> dict:
    return {
        "n": row.n,
        "count": str(row.count),
        "constant": row.constant.to_json(),
        "ratio": row.ratio.to_json(),
    }


def sample_on_circle(p: IntLaurentPoly, num: int = 1000) -> np.ndarray:
    """P(e^{i theta}) on ``num`` equispaced angles, in double precision."""
    theta = 2 * np.pi * np.arange(num) / num
    out = np.zeros(num, dtype=complex)
    for e, c in p.terms().items():
        out += c * np.exp(1j * e * theta)
    return out
