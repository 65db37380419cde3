#!/usr/bin/env python3
# Growth constants as Mahler measures, and how fast f(2n)/M^n settles.

import numpy as np

from bicirc_forest import (
    FAMILIES,
    build_P,
    convergence_report,
    mahler_integral,
    mahler_roots,
)
from bicirc_forest.ball import make_context
from bicirc_forest.numeric import class_polynomial, sample_on_circle

ctx = make_context(256)
for fam in FAMILIES:
    p = class_polynomial(fam.spec())
    roots = mahler_roots(p, 256)  # certified, from root moduli
    quad = mahler_integral(p)  # trapezoidal rule on the circle
    print(f"({fam.index}) {fam.constant_name} = {roots.format(30)}")
    print(f"    quadrature {quad.format(20)}")
    print(f"    {fam.closed_form_text} = {ctx.nstr(fam.closed_form(ctx), 30)}")

# ratio to the asymptotic prediction for the first family
for row in convergence_report(FAMILIES[0].spec(), [5, 10, 15, 20, 25]):
    print(row.n, row.ratio.format(18))

# P1 never dips below 2s+1 on the unit circle
p1 = build_P(FAMILIES[4].spec()).P1
vals = sample_on_circle(p1, 1000).real
print("min P1 on circle:", vals.min(), "  2s+1 =", 3)
print("argmin theta/pi:", 2 * np.argmin(vals) / 1000)
