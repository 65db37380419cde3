"""Acceptance suite: one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py`` (summary printed at the end of
the session) or directly with ``python3 tests/test_acceptance.py``.
"""

import math
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bicirc_forest.arithmetic import sequence_table, theorem4_constants
from bicirc_forest.ball import make_context
from bicirc_forest.exact import forest_count_oracle
from bicirc_forest.families import FAMILIES, family
from bicirc_forest.graph import classify
from bicirc_forest.laurent import build_P, chebyshev_t_coeffs, forest_count_formula
from bicirc_forest.numeric import (
    MAX_PRECISION,
    class_polynomial,
    convergence_report,
    forest_count_chebyshev,
    mahler_integral,
    mahler_roots,
    sample_on_circle,
)

from conftest import random_corpus

RESULTS: dict[int, tuple[bool, str]] = {}

CORPUS_SIZE = 600


def record(number: int, ok: bool, detail: str) -> None:
    RESULTS[number] = (ok, detail)
    assert ok, detail


def summary_lines() -> list[str]:
    return [f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
            for k, (ok, detail) in sorted(RESULTS.items())]


@pytest.fixture(scope="module")
def corpus():
    return random_corpus(CORPUS_SIZE)


def test_criterion_1_oracle_equivalence(corpus):
    flags = Counter((s.half_in_R, s.half_in_T) for s in corpus)
    assert len(flags) == 4, "corpus must cover every half-flag combination"
    assert all(s.n <= 10 and max(s.r, s.t, s.s) <= 3 for s in corpus)
    bad = [s for s in corpus if forest_count_formula(s) != forest_count_oracle(s)]
    record(1, not bad, f"{len(corpus) - len(bad)}/{len(corpus)} specs exact (flags {dict(flags)})")


def test_criterion_2_golden_values():
    fam1, fam2 = family(1), family(2)
    t4 = sum(c * Fraction(7, 4) ** i for i, c in enumerate(chebyshev_t_coeffs(4)))
    expected_n4 = 2**4 * abs(2 * t4 - 2)
    got = {
        "f1(3)": (forest_count_formula(fam1.spec(3)), forest_count_oracle(fam1.spec(3)), 243),
        "f1(4)": (forest_count_formula(fam1.spec(4)), forest_count_oracle(fam1.spec(4)), expected_n4),
        "f2(4)": (forest_count_formula(fam2.spec(4)), forest_count_oracle(fam2.spec(4)), 3993),
    }
    ok = all(f == o == want for f, o, want in got.values())
    record(2, ok, ", ".join(f"{k}={v[0]}" for k, v in got.items()))


def test_criterion_3_published_constants():
    got = [(lambda s: (s.odd, s.even))(theorem4_constants(f.spec())) for f in FAMILIES]
    want = [(3, 33), (5, 33), (69, 33), (93, 33), (3, 105), (21, 105)]
    record(3, got == want, f"{got}")


def test_criterion_4_square_structure():
    checked = 0
    for fam in FAMILIES:
        rows = sequence_table(fam.spec(), 1, 30)
        checked += len(rows)
        assert all(r.constant * r.root**2 == r.f for r in rows)
        expected = 15 if fam.has_half else 30
        assert len(rows) == expected
    record(4, True, f"{checked} (family, n) pairs with n <= 30 are constant * square")


def test_criterion_5_mahler_routes():
    ctx = make_context(256)
    worst_gap = worst_closed = 0.0
    for fam in FAMILIES:
        poly = class_polynomial(fam.spec())
        by_roots = mahler_roots(poly, 256)
        by_integral = mahler_integral(poly, 1e-12)
        worst_gap = max(worst_gap, float(abs(by_roots.mid - by_integral.mid)))
        worst_closed = max(worst_closed, float(abs(by_roots.mid - fam.closed_form(ctx))))
    record(5, worst_gap < 1e-9 and worst_closed < 1e-9,
           f"max route gap {worst_gap:.1e}, max closed-form gap {worst_closed:.1e}")


def test_criterion_6_convergence():
    fam1 = family(1).spec()
    rows = convergence_report(fam1, range(15, 61))
    err = {r.n: abs(float(r.ratio.mid - 1)) for r in rows}
    ok = all(e < 1e-6 for e in err.values()) and err[25] < 1e-9
    details = [f"family 1: max |ratio-1| for n>=15 is {max(err.values()):.1e}, at n=25 {err[25]:.1e}"]
    for fam in FAMILIES[1:]:
        ns = [n for n in range(10, 61) if not fam.has_half or n % 2 == 0]
        errs = [abs(float(r.ratio.mid - 1)) for r in convergence_report(fam.spec(), ns)]
        decreasing = all(a > b for a, b in zip(errs, errs[1:]))
        ok = ok and decreasing and errs[-1] < 1e-6
        details.append(f"family {fam.index}: {errs[0]:.1e} -> {errs[-1]:.1e}")
    record(6, ok, "; ".join(details))


def test_criterion_7_chebyshev_route():
    top = 0
    count = 0
    mismatches = []
    for fam in FAMILIES:
        spec = fam.spec()
        for n in fam.valid_orders(100):
            value, prec = forest_count_chebyshev(spec, n=n, return_precision=True)
            top = max(top, prec)
            count += 1
            if value != forest_count_formula(spec, n):
                mismatches.append((fam.index, n))
    record(7, not mismatches and top < MAX_PRECISION,
           f"{count - len(mismatches)}/{count} orders exact, max precision {top} bits")


def test_criterion_8_positivity(corpus):
    specs = list(corpus) + [f.spec() for f in FAMILIES]
    worst = math.inf
    for spec in specs:
        vals = sample_on_circle(build_P(spec).P1, 1000)
        assert abs(vals.imag).max() < 1e-9
        worst = min(worst, float(vals.real.min() - (2 * spec.s + 1)))
    record(8, worst >= -1e-9, f"{len(specs)} specs, min P1 - (2s+1) = {worst:.2e}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
