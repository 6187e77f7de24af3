"""Avoidance sets and statistic generating polynomials.

Run with: python demos/avoidance_polynomials.py
"""
from permstat import enumerate_avoiders, q_factorial, stat_polynomial

# The permutations of size 4 avoiding 321, in lexicographic order.
avoiders = list(enumerate_avoiders(4, [(3, 2, 1)]))
print(f"{len(avoiders)} permutations of size 4 avoid 321:")
for p in avoiders:
    print("  ", p)

# Any single length-3 pattern leaves a Catalan number of avoiders.
print()
print("avoider counts for 321 at sizes 0..9 (the Catalan numbers):")
print("  ", [sum(1 for _ in enumerate_avoiders(n, [(3, 2, 1)])) for n in range(10)])

# Tallying a statistic over an avoidance set gives an integer polynomial in q;
# index i holds the number of avoiders with statistic value i.
for stat in ("charge", "maj", "inv"):
    poly = stat_polynomial(4, [(3, 2, 1)], stat)
    print(f"size-4 {poly.stat} polynomial over the 321-avoiders: {list(poly.coeffs)}")

# With nothing forbidden the avoiders are all of S_n, and each statistic is
# Mahonian: its distribution is the q-factorial.
print()
poly = stat_polynomial(5, [], "inv")
print("inversions over all of S_5:", list(poly.coeffs))
print("q-factorial [5]_q!:        ", list(q_factorial(5)))

# Enumeration shards by first entry, so polynomial builds parallelize; the
# shard polynomials merge coefficient-wise (see stat_polynomial's `first`).
shard_counts = [
    stat_polynomial(5, [(3, 2, 1)], "ch", first=k).total() for k in range(1, 6)
]
print()
print("321-avoiders of size 5 by first entry:", shard_counts, "=", sum(shard_counts))
