#!/usr/bin/env python3
# Counting rooted spanning forests three ways: det(I+L), resultants, Chebyshev balls.

from bicirc_forest import (
    forest_count_chebyshev,
    forest_count_formula,
    forest_count_oracle,
    forest_matrix,
    parse_spec,
)

# prism-like graph: two 3-cycles joined by a perfect matching
g = parse_spec(3, R=[1, 2], T=[], S=[0])
print(g)
print(forest_matrix(g))

print("det(I+L)       ", forest_count_oracle(g))
print("resultants     ", forest_count_formula(g))
print("certified balls", forest_count_chebyshev(g))

# the same half-set data over larger cyclic groups
for n in (5, 10, 20, 40):
    h = g.at(n)
    f = forest_count_formula(h)
    print(n, f, "(oracle agrees)" if n <= 20 and forest_count_oracle(h) == f else "")

# adding the involution n/2 to R changes the class
g2 = parse_spec(4, R=[1, 2, 3], T=[], S=[0])
print(g2.gamma_class, forest_count_formula(g2))  # 3993

# big n: only the exact and certified routes are practical
f, bits = forest_count_chebyshev(g2, n=200, return_precision=True)
print(len(str(f)), "digits, isolated at", bits, "bits; exact route agrees:", f == forest_count_formula(g2, 200))
