"""
The logarithm of a cube root of unity
=====================================

Work in Q_3(sqrt(-3)) to a fixed number of digits. Valuations there are
counted in powers of pi = sqrt(-3), so 3 has order 2.
"""

from triadic import padic
from triadic.valuation import nu

w = padic.omega(40)
print("omega  =", w)
print("omega^3 - 1 vanishes to 40 digits:", padic.cube_root_check(40))

# log(1 + x) converges for ord(x) > 0; omega - 1 has order 1 in pi units
print("log(omega) vanishes to 40 digits:", padic.log_omega_vanishes(40))

# a principal unit that is not a root of unity has a nonzero log
lg = padic.padic_log(padic.QuadExt.from_rationals(1, 3, 50), 60)
print("log(1 + 3 pi) has order", lg.valuation)

# the rational shadow: partial sums of sum_k (-3)^k/(2k+1) gain 3-divisibility
for K in (3, 10, 20, 40, 80):
    s = padic.lemma42_partial(K)
    print(f"K={K:2d}  ord = {nu(3, s)}  guaranteed >= {padic.lemma42_tail_bound(K)}")
