#!/usr/bin/env python3
# Every forest count is a small constant times a perfect square.

from bicirc_forest import FAMILIES, sequence_table, theorem4_constants

for fam in FAMILIES:
    spec = fam.spec()
    c = theorem4_constants(spec)
    print(f"({fam.index}) {fam.label}")
    print(f"    constants: {c.odd} (odd index), {c.even} (even index)")
    for row in sequence_table(spec, 1, 12)[:6]:
        print(f"    n={row.n:<3} f={row.f} = {row.constant} * {row.root}^2")

# the raw integers behind the constants
c = theorem4_constants(FAMILIES[5].spec())
print(c.odd_raw, "->", c.odd, "   ", c.even_raw, "->", c.even)
