"""
Counting occurrences with a variable t
======================================

The weight enumerator sums t**(number of occurrences) over all arrangements.
At t=0 it counts avoiders; at t=1 it counts all words.
"""

from incpat import multinomial, oracle_weight, p_poly, weight_enumerator, weight_uniform

###############################################################################
# For r=2 an occurrence is an ascent, so permutations give Eulerian polynomials.

for n in range(1, 7):
    print(n, weight_enumerator((1,) * n, 2))

###############################################################################
# Cluster polynomials P_k(t) feed the weighted recurrence.

for k in range(3, 9):
    print(f"P_{k}(t) for r=3:", p_poly(k, 3))

###############################################################################
# A multiset example, checked against brute force and both specializations.

m = (2, 2, 1, 1)
g = weight_enumerator(m, 3)
print(g, "| brute force agrees:", g == oracle_weight(m, 3))
print("g(0) =", g(0), " g(1) =", g(1), " multinomial =", multinomial(m))

###############################################################################
# Uniform words 1^2 ... n^2 with pattern 123.

for n in range(6):
    print(n, list(weight_uniform(2, n, 3).coeffs))
