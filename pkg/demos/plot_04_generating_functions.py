"""
Checking the generating functions
=================================

The counts are coefficients of 1 / (1 - e_1 + e_r - e_{r+1} + e_{2r} - ...),
with e_k the elementary symmetric polynomials. Expanding that reciprocal as a
truncated series reproduces them, and the permutation counts satisfy an
exponential generating function identity.
"""

from incpat.series import (
    avoidance_denominator,
    egf_check,
    expand_reciprocal,
    verify_against_recurrence,
)

den = avoidance_denominator(3, 3, 6)
print("denominator terms:", sorted(den.terms.items()))
s = expand_reciprocal(den)
print("coefficient of x1^2 x2^2 x3^2:", s[(2, 2, 2)])

for weighted in (False, True):
    print(verify_against_recurrence(4, 3, 6, weighted).summary())

for r in range(2, 10):
    print(egf_check(r, 15).summary())
