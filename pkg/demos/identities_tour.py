"""
Exact identities behind the congruences
=======================================

"""

from fractions import Fraction

from triadic import sums

# m^(n-1) times the scaled sum is a binomial-weighted sum of Lucas numbers
print(sums.check_sun_tauraso(4, 2), sums.check_st2(7, 3), sums.check_sun32(4, 3))

# both sides of the convolution identity, as exact rationals
for x in (Fraction(0), Fraction(1), Fraction(-3, 4)):
    print(x, sums.convolution_sides(5, x))

# m = 4 closed form: scaled_sum(4, k) * 2^(2k-1) = k C(2k,k)
print(all(sums.check_quarter_power(k) for k in range(1, 60)))

# f(a) mod 3 does not depend on m (m = 1 mod 3) and is always 2
print({(a, m): sums.f_of_a(a, m)[1] for a in (2, 3) for m in (7, 10, 13)})

# triple blocks: the sum over l with 3 | k - l of 2C(2k-1,l) - C(2k,l), mod 3
for k in range(1, 10):
    print(k, sums.triple_block_sum(k) % 3, sums.triple_block_target(k) % 3)
