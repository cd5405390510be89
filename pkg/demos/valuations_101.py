"""
3-adic orders of central binomial sums
======================================

"""

from math import comb

import numpy as np

from triadic import central_sum, nu, nu_binomial
from triadic.theorems import check_ssz_many

# nu(p, x) is the exponent of p in x; zero has infinite order
print(nu(3, 54), nu(3, 0))

# Kummer: the order of C(n, k) counts the carries when adding k and n - k in base p
for n, k in [(6, 3), (18, 9), (54, 27)]:
    print(f"C({n},{k}) = {comb(n, k)}  carries = {nu_binomial(3, n, k)}")

# the order of sum_{k<n} C(2k,k) is 2 ord(n) + ord(C(2n,n))
ns = np.arange(1, 28)
orders = np.array([nu(3, central_sum(int(n))) for n in ns])
predicted = np.array([2 * nu(3, int(n)) + nu_binomial(3, 2 * int(n), int(n)) for n in ns])
print(np.column_stack([ns, orders, predicted]))

# the same statement, checked for n up to 2000 with the claim checker
results = check_ssz_many(range(1, 2001))
print(sum(r.passed for r in results), "of", len(results), "pass")
