"""Generalized Newton on Ax - |x| = b: termination by sign patterns.

Run with ``python demos/01_newton_termination.py``.
"""
import numpy as np

from avenewton import generate_instance, gnm_solve, termination_test

np.set_printoptions(precision=6, suppress=True)

# A small symmetric instance.  Starting at (-1, -1) the first step lands on
# (0, -1): the zero component means the old and new sign patterns differ,
# but they agree wherever the new one is nonzero -- and that is enough.
inst = generate_instance("ex32")
trace = gnm_solve(inst.A, inst.b, inst.x0)
print("A =\n", inst.A, "\nb =", inst.b)
for k, (x, d) in enumerate(zip(trace.iterates, trace.patterns)):
    print(f"  x{k} = {x}   sign = {d}")
print("stopped:", trace.termination.value, "after", trace.iterations_used, "solve(s)")
print("relaxed rule on (-1,-1) -> (0,-1):", termination_test([-1, -1], [0, -1]))
print()

# A non-structured 2x2 instance where the sign pattern wanders before it
# settles: (-,-) -> (+,-) -> (-,+) -> (+,+) -> (+,+).
inst = generate_instance("remark43")
trace = gnm_solve(inst.A, inst.b, inst.x0)
for k, (x, d, r) in enumerate(zip(trace.iterates, trace.patterns, trace.residuals)):
    print(f"  x{k} = {x}   sign = {d}   residual = {r:.2e}")
print("stopped:", trace.termination.value, "after", trace.iterations_used, "solves")
print()

# Failure modes are reported, not raised.  With A = 0 the iteration just
# flips signs back and forth.
trace = gnm_solve(np.zeros((2, 2)), [1.0, 1.0], [1.0, 1.0])
print("A = 0:", trace.termination.value, [d.tolist() for d in trace.patterns])
trace = gnm_solve([[2.0, -1.0], [-1.0, 2.0]], [1.0, 1.0], [1.0, 1.0])
print("A - I singular at the start:", trace.termination.value)
