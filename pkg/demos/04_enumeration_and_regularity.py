"""Brute-force enumeration over sign vertices, and the regularity of the
interval matrix [A - I, A + I].

Run with ``python demos/04_enumeration_and_regularity.py``.
"""
import numpy as np

from avenewton import (enumerate_solutions, enumerate_with_uniqueness,
                       interval_regularity_vertex_test)

np.set_printoptions(precision=6, suppress=True)

# 0.5x - |x| = b has two solutions per coordinate when b < 0 ...
sols = enumerate_solutions(0.5 * np.eye(2), [-1.0, -1.0])
print(len(sols), "solutions:", sols.solutions)
# ... and none when b > 0.
print(len(enumerate_solutions(0.5 * np.eye(2), [1.0, 1.0])), "solutions for b > 0")
print()

# Regular interval matrix <=> exactly one solution for every b.  Compare
# the exact vertex test with random sampling of right-hand sides.
rng = np.random.default_rng(7)
agree = 0
for k in range(20):
    n = int(rng.integers(1, 5))
    A = rng.standard_normal((n, n)) * rng.uniform(0.5, 3.0)
    reg = interval_regularity_vertex_test(A)
    sampled = enumerate_with_uniqueness(A, 50, seed=k)
    agree += reg == sampled
    print(f"n = {n}: vertex test {reg!s:5s}  sampling {sampled!s:5s}")
print(f"{agree}/20 agree")
