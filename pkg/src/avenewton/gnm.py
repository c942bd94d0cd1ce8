"""Generalized Newton iteration for Ax - |x| = b.

Each step solves ``(A - diag(sign(x_k))) x_{k+1} = b``.  The next iterate
depends on x_k only through its sign pattern, which is what makes both the
termination rule and cycle detection exact.
"""
import enum
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .errors import SingularJacobian, SingularMatrix
from .linalg import as_matrix, as_vector, lu_solve


class Termination(enum.Enum):
    SOLVED_BY_PATTERN_RULE = "SolvedByPatternRule"
    SOLVED_BY_RESIDUAL = "SolvedByResidual"
    CYCLE_DETECTED = "CycleDetected"
    SINGULAR_JACOBIAN = "SingularJacobian"
    MAX_ITERATIONS = "MaxIterations"

    @property
    def solved(self):
        return self in (Termination.SOLVED_BY_PATTERN_RULE,
                        Termination.SOLVED_BY_RESIDUAL)


@dataclass
class GnmTrace:
    """Iteration history.  ``iterates[0]`` is the starting point."""
    iterates: List[np.ndarray] = field(default_factory=list)
    patterns: List[np.ndarray] = field(default_factory=list)
    residuals: List[float] = field(default_factory=list)
    termination: Optional[Termination] = None
    iterations_used: int = 0
    solution: Optional[np.ndarray] = None
    warnings: List[str] = field(default_factory=list)

    @property
    def solved(self):
        return self.termination is not None and self.termination.solved

    def to_dict(self):
        return {
            "termination": self.termination.value,
            "iterations": self.iterations_used,
            "solution": None if self.solution is None else [float(t) for t in self.solution],
            "residual": self.residuals[-1] if self.residuals else None,
            "patterns": [[int(t) for t in p] for p in self.patterns],
        }


def sign_pattern(x):
    """Componentwise sign with sign(0) = 0, as a small int array."""
    return np.sign(np.asarray(x, dtype=np.float64)).astype(np.int8)


def gnm_step(A, b, d):
    d = np.asarray(d)
    try:
        return lu_solve(A - np.diag(d.astype(np.float64)), b)
    except SingularMatrix as exc:
        raise SingularJacobian(d) from exc


def termination_test(d_prev, d_next):
    """True iff d_next agrees with d_prev on every component where d_next != 0.

    Zero components of d_next are unconstrained, so this fires in cases
    where the full patterns differ.
    """
    d_prev = np.asarray(d_prev)
    d_next = np.asarray(d_next)
    if d_prev.shape != d_next.shape:
        raise ValueError("patterns have different lengths")
    nz = d_next != 0
    return bool(np.all(d_next[nz] == d_prev[nz]))


def check_solution(A, b, x):
    """Max-norm residual of Ax - |x| - b."""
    A = np.asarray(A, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    return float(np.abs(A @ x - np.abs(x) - b).max())


def gnm_solve(A, b, x0=None, max_iter=100, tol=1e-12):
    """Run the generalized Newton method from ``x0`` (default: zero vector).

    Stops on the first of: the sign-pattern rule, residual <= tol, a
    repeated sign pattern, a singular Jacobian, or ``max_iter`` solves.
    Failures are reported through ``trace.termination``; nothing is raised
    for them.
    """
    A = as_matrix(A)
    n = A.shape[0]
    b = as_vector(b)
    if b.size != n:
        raise ValueError(f"dimension mismatch: A is {n}x{n}, b has {b.size}")
    x = np.zeros(n) if x0 is None else as_vector(x0)
    if x.size != n:
        raise ValueError(f"dimension mismatch: A is {n}x{n}, x0 has {x.size}")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")

    trace = GnmTrace()
    d = sign_pattern(x)
    trace.iterates.append(x.copy())
    trace.patterns.append(d)
    trace.residuals.append(check_solution(A, b, x))
    seen = {d.tobytes()}

    for _ in range(max_iter):
        try:
            x_new = gnm_step(A, b, d)
        except SingularJacobian:
            trace.termination = Termination.SINGULAR_JACOBIAN
            return trace
        trace.iterations_used += 1
        d_new = sign_pattern(x_new)
        res = check_solution(A, b, x_new)
        trace.iterates.append(x_new)
        trace.patterns.append(d_new)
        trace.residuals.append(res)
        _note_tiny_components(trace, x_new)

        if termination_test(d, d_new):
            trace.termination = Termination.SOLVED_BY_PATTERN_RULE
            trace.solution = x_new
            if res > tol:
                trace.warnings.append(
                    f"iterate {trace.iterations_used}: pattern rule fired with "
                    f"residual {res:.3e} > tol {tol:.1e}")
            return trace
        if res <= tol:
            trace.termination = Termination.SOLVED_BY_RESIDUAL
            trace.solution = x_new
            return trace
        key = d_new.tobytes()
        if key in seen:
            trace.termination = Termination.CYCLE_DETECTED
            return trace
        seen.add(key)
        d = d_new

    trace.termination = Termination.MAX_ITERATIONS
    return trace


def _note_tiny_components(trace, x):
    scale = np.abs(x).max()
    tiny = (x != 0) & (np.abs(x) <= 1e-12 * scale)
    if np.any(tiny):
        trace.warnings.append(
            f"iterate {trace.iterations_used}: components {np.flatnonzero(tiny).tolist()} "
            "are nonzero but below 1e-12 relative; signs taken as computed")
