"""
Counting words that avoid 12...r
================================

A word avoids the consecutive pattern 123 when no three adjacent letters are
strictly increasing. Here we count such arrangements of a few multisets, first
by brute force and then with the recurrence.
"""

from incpat import count_avoiders, multinomial, oracle_count, words_of_multiset
from incpat.brute import occurrences

###############################################################################
# The multiset 1^2 2^2 3^2 has 90 arrangements. Filter them directly:

m = (2, 2, 2)
bad = [w for w in words_of_multiset(m) if occurrences(w, 3)]
print(f"{multinomial(m)} words, {len(bad)} contain 123, e.g. {bad[:3]}")
print("avoiders (brute force):", oracle_count(m, 3))

###############################################################################
# The recurrence gives the same number without listing any word, and scales
# to multisets far too large to enumerate.

print("avoiders (recurrence): ", count_avoiders(m, 3))
print("1^5 2^4 3^3 4^2 5^1 6^1, r=4:", count_avoiders((5, 4, 3, 2, 1, 1), 4))

###############################################################################
# Order of the multiplicities does not matter; the count is symmetric.

print(count_avoiders((1, 3, 2), 3), count_avoiders((3, 2, 1), 3))
