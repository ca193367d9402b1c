"""
Permutations and uniform words
==============================

``count_permutations`` uses a one-dimensional recurrence over n.
``count_uniform`` counts words in 1^s 2^s ... n^s by tracking how many letters
still have j copies to place, which is polynomial in n for each fixed s.
"""

import time

from incpat import count_permutations, count_uniform

###############################################################################
# Permutations avoiding 123, 1234, ..., 123456789

for r in range(3, 10):
    print(r, [count_permutations(n, r) for n in range(12)])

###############################################################################
# Two, three and four copies of each letter, pattern 123.

for s, nmax in [(2, 80), (3, 40), (4, 20)]:
    start = time.perf_counter()
    seq = [count_uniform(s, n, 3) for n in range(nmax + 1)]
    print(f"s={s}: {seq[:6]} ... n={nmax} has {len(str(seq[-1]))} digits "
          f"({time.perf_counter() - start:.1f}s)")
