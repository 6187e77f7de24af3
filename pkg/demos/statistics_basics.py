"""Walk through the three statistics on a single permutation.

Run with: python demos/statistics_basics.py
"""
from permstat import (
    charge,
    charge_values,
    complement,
    descent_set,
    f_map,
    inverse,
    inversions,
    major_index,
    reverse,
)

pi = (3, 2, 8, 5, 7, 4, 6, 1, 9)
print("permutation:", pi)

# Descents are the positions that step down; the major index adds them up.
print("descent set:", sorted(descent_set(pi)))
print("major index:", major_index(pi))

# Each value i >= 2 earns a charge value: zero when it sits to the right of
# i-1, and n+1-i when it sits to the left.  The total is the charge.
print("charge values by value:", charge_values(pi))
print("charge:", charge(pi))
print("inversions:", inversions(pi))

# The three symmetry operations, and their composite f = inverse . complement . reverse.
print()
print("reverse:   ", reverse(pi))
print("complement:", complement(pi))
print("inverse:   ", inverse(pi))
print("f(pi):     ", f_map(pi))

# f carries the major index to charge -- the engine behind every charge/major
# equivalence in this package.
image = f_map(pi)
print()
print(f"maj(pi) = {major_index(pi)}  equals  charge(f(pi)) = {charge(image)}")
