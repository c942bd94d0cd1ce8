"""Sufficient conditions for global convergence: ||A^-1|| < 1/3 versus
rho(|A^-1|) < 1/3.

Run with ``python demos/02_convergence_certificates.py``.
"""
import numpy as np

from avenewton import (certify_norm_third, certify_rho_third, elementwise_abs,
                       generate_instance, gnm_solve, inverse, spectral_norm,
                       spectral_radius)
from avenewton.oracle import upper_minus_ones

# Unit upper triangular with -1 above the diagonal.  The inverse has
# powers of two in its last column, so the 2-norm blows up with n while
# rho(|A^-1|) stays exactly 1 (|A^-1| is triangular with unit diagonal).
for n in (4, 8, 12, 16):
    Ainv = inverse(upper_minus_ones(n))
    print(f"n = {n:2d}: ||A^-1||_2 = {spectral_norm(Ainv):12.2f}   "
          f"rho(|A^-1|) = {spectral_radius(elementwise_abs(Ainv)):.6f}")
print(inverse(upper_minus_ones(5)))
print()

# A diagonal example where both certificates are easy to read off.
for c in (certify_norm_third(4 * np.eye(3)), certify_rho_third(4 * np.eye(3))):
    print(c.name.value, c.holds, c.detail)
print()

# Random matrices with rho(|A^-1|) < 0.3: every start reaches the same point.
rng = np.random.default_rng(0)
for seed in range(5):
    inst = generate_instance("rho_third_random", 6, seed)
    cert = certify_rho_third(inst.A)
    sols = [gnm_solve(inst.A, inst.b, 10 * rng.standard_normal(6)) for _ in range(20)]
    spread = max(np.abs(t.solution - sols[0].solution).max() for t in sols)
    iters = sorted({t.iterations_used for t in sols})
    print(f"seed {seed}: rho(|A^-1|) = {cert.value:.3f}, rho(2B) = {cert.extras['rho_2B']:.3f}, "
          f"norm = {certify_norm_third(inst.A).value:.3f}, iterations {iters}, spread {spread:.1e}")
