"""
Lucas sequences and the m = 4 special case
==========================================

u_n(A, 1) obeys u_{n+1} = A u_n - u_{n-1}. For m = 1 mod 3 the quotients
u_n(m-2, 1)/n and u_n(-1, 1)/n agree to a predictable 3-adic order. The
special case m = 4 is claimed to give a congruence mod 3 as well, and that
is false whenever 3 divides n.
"""

from fractions import Fraction

from triadic.lucas import LucasParams, check_lemma21, lucas_u, lucas_u_closed, u_neg11_fast

# recurrence and closed form agree (the closed form takes m and uses A = m - 2)
print([lucas_u(LucasParams(5), n) for n in range(1, 8)])
print([lucas_u_closed(7, n) for n in range(1, 8)])

# A = -1 has period 3: 0, 1, -1, 0, 1, -1, ...
print([u_neg11_fast(n) for n in range(9)])

# A = 2 gives u_n = n, so u_n(2,1)/n = 1, while u_n(-1,1) = 0 when 3 | n
for n in (3, 6, 9):
    diff = Fraction(lucas_u(LucasParams(2), n), n) - Fraction(u_neg11_fast(n), n)
    print(n, diff, check_lemma21(4, n).passed)

# the general statements hold; only the m = 4 part fails
bad = [(m, n, part.params["part"]) for m in range(4, 50, 3) for n in range(1, 61)
       for part in check_lemma21(m, n).parts if not part.passed]
print(len(bad), "failing parts, all with m = 4:", {m for m, _, _ in bad})
