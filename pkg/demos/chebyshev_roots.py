#!/usr/bin/env python3
# The Chebyshev transform turns P(z) into U(w) with w = (z + 1/z)/2.

from fractions import Fraction

from bicirc_forest import build_P, cheb_transform, find_roots, parse_spec

# dihedral family: Cay(D_2n, {a, a^-1, b})
g = parse_spec(3, R=[1, 2], T=[1, 2], S=[0])
pack = build_P(g)
print("P1 =", pack.P1)

u = cheb_transform(pack.P1)
print("U coefficients (low to high):", u.coeffs)

# check U((z+1/z)/2) = P(z) at a rational point
z = Fraction(3, 2)
print(u((z + 1 / z) / 2), "==", pack.P1(z))

# certified roots of U: 3/2 and 5/2
for disc, mult in find_roots(u.coeffs, 128):
    print(disc, "multiplicity", mult)
