"""When A - I is an irreducible singular M-matrix the sign of v'b decides
everything (v > 0 spans the left null space of A - I).

Run with ``python demos/03_singular_m_matrix.py``.
"""
import numpy as np

from avenewton import (check_solution, classify_ave, enumerate_solutions,
                       generate_instance, gnm_solve, iteration_bound,
                       singular_case_trichotomy, zero_component_solution)

np.set_printoptions(precision=6, suppress=True)

A = np.array([[2.0, -1.0], [-1.0, 2.0]])
print(classify_ave(A).detail, "| iteration bound:", iteration_bound(A))
for b in ([-1.0, -1.0], [1.0, 1.0], [1.0, -1.0]):
    v = singular_case_trichotomy(A, b)
    print(f"b = {b}: v'b = {v.v_dot_b:+.1f} -> {v.case.value}")
print()

# v'b = 0: a ray of nonnegative solutions x(alpha) = w - alpha*u for
# alpha <= alpha_max, with exactly one member that has a zero component.
fam = singular_case_trichotomy(A, [1.0, -1.0]).family
for step in (0.0, 1.0, 10.0):
    x = fam(fam.alpha_max - step)
    print(f"x(alpha_max - {step:4.1f}) = {x}   residual {check_solution(A, [1.0, -1.0], x):.1e}")
print("zero-component solution from GNM:", zero_component_solution(A, [1.0, -1.0]))
print()

# A random 6x6 instance of the same class: GNM from ten different starts
# (each with a nonpositive entry) ends at the same point.
inst = generate_instance("a2_random", 6, seed=3, rhs="range")
rng = np.random.default_rng(1)
ends = []
for _ in range(10):
    x0 = rng.standard_normal(6)
    x0[rng.integers(6)] = -1.0
    t = gnm_solve(inst.A, inst.b, x0)
    ends.append(t.solution)
    print(f"  {t.termination.value:20s} after {t.iterations_used} solves: {t.solution}")
print("oracle solutions with a zero:", enumerate_solutions(inst.A, inst.b).solutions)
