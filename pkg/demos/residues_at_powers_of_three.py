"""
Residues at n = 3^a
===================

"""

from triadic.theorems import check_scc2, check_scc4, check_scc5
from triadic.valuation import nu_int

# sum_{k<3^a} C(2k,k)/m^k, divided by 3^a, is (m-1)/3 modulo 3^ord(m-1)
for m in (4, 7, 10, 28, 82):
    t = nu_int(3, m - 1)
    row = [check_scc2(m, a) for a in range(max(t, 1), 7)]
    print(m, [(r.params["a"], r.measured.value, r.required.value) for r in row])

# the alternating version lands on -(m-1)/3 once a > ord(m-1)
for m in (4, 7, 10, 28):
    t = nu_int(3, m - 1)
    print(m, [(a, check_scc4(m, a).measured.value) for a in range(t + 1, 7)])

# m = 1: the residue is -3^(a-1) mod 3^a; a = 7 has 2187 terms and runs truncated
for a in range(2, 8):
    r = check_scc5(a)
    print(a, r.mode.value, r.measured.value, r.required.value, r.passed)
