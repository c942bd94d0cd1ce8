"""Brute-force ground truth and instance generators.

``enumerate_solutions`` finds every solution of Ax - |x| = b by solving the
linear piece (A - diag(s)) x = b for each s in {-1, +1}^n and keeping the
sign-consistent results.  A zero component is consistent with either sign,
so the 2^n vertex pieces cover all solutions whenever every piece is
nonsingular.
"""
import itertools
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .errors import InvalidKind, SingularMatrix, TooLarge
from .gnm import check_solution
from .linalg import (as_matrix, as_vector, elementwise_abs, inverse, lu_solve,
                     spectral_radius)

KINDS = ("ex32", "ex37", "remark43", "a1_random", "a2_random", "rho_third_random")
RHS_KINDS = ("random", "range", "negative", "positive")


@dataclass
class SolutionSet:
    solutions: List[np.ndarray] = field(default_factory=list)
    singular_patterns: List[np.ndarray] = field(default_factory=list)
    consistent_patterns: List[np.ndarray] = field(default_factory=list)
    complete: bool = True

    def __len__(self):
        return len(self.solutions)

    def to_dict(self):
        return {
            "solutions": [[float(t) for t in x] for x in self.solutions],
            "singular_patterns": [[int(t) for t in s] for s in self.singular_patterns],
            "consistent_patterns": [[int(t) for t in s] for s in self.consistent_patterns],
            "complete": self.complete,
        }


@dataclass
class Instance:
    kind: str
    A: np.ndarray
    b: np.ndarray
    x0: Optional[np.ndarray] = None


def enumerate_solutions(A, b, max_n=16):
    A = as_matrix(A)
    n = A.shape[0]
    b = as_vector(b, n)
    if n > max_n:
        raise TooLarge(f"enumeration over 2^{n} sign vertices (n > {max_n})")
    out = SolutionSet()
    bscale = max(1.0, np.abs(b).max())
    for s in itertools.product((-1, 1), repeat=n):
        s = np.array(s, dtype=np.int8)
        M = A - np.diag(s.astype(np.float64))
        try:
            x = lu_solve(M, b)
        except SingularMatrix:
            out.singular_patterns.append(s)
            y = np.linalg.lstsq(M, b, rcond=None)[0]
            if np.abs(M @ y - b).max() <= 1e-9 * bscale:
                out.consistent_patterns.append(s)
                out.complete = False
            continue
        if np.any(s * x < -1e-12 * max(1.0, np.abs(x).max())):
            continue
        if check_solution(A, b, x) > 1e-9:
            continue
        if any(np.abs(x - y).max() <= 1e-8 for y in out.solutions):
            continue
        out.solutions.append(x)
    return out


def _random_rhs(rng, A, n):
    # mix plain Gaussian draws with images F(x) = Ax - |x| of Gaussian x;
    # the latter land in multiply-covered regions with useful probability
    if rng.random() < 0.5:
        return rng.standard_normal(n)
    x = rng.standard_normal(n)
    return A @ x - np.abs(x)


def enumerate_with_uniqueness(A, trials=50, seed=None, max_n=8):
    """True iff every one of ``trials`` random right-hand sides gives
    exactly one solution with a complete enumeration."""
    A = as_matrix(A)
    n = A.shape[0]
    if n > max_n:
        raise TooLarge(f"uniqueness sampling limited to n <= {max_n}")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        sols = enumerate_solutions(A, _random_rhs(rng, A, n))
        if len(sols) != 1 or not sols.complete:
            return False
    return True


def upper_minus_ones(n):
    """Unit upper triangular matrix with -1 everywhere above the diagonal."""
    return np.eye(n) - np.triu(np.ones((n, n)), 1)


def _irreducible_offdiagonal(rng, n, density=0.6):
    C = rng.uniform(0.0, 1.0, (n, n)) * (rng.random((n, n)) < density)
    if n > 1:
        idx = np.arange(n)
        C[idx, (idx + 1) % n] += rng.uniform(0.5, 1.0, n)
    np.fill_diagonal(C, 0.0)
    return C


def singular_m_with_null_vector(C, u):
    """diag(C u / u) - C for off-diagonal C >= 0: a singular M-matrix
    whose right null vector is ``u`` up to rounding in the diagonal."""
    return np.diag((C @ u) / u) - C


def _rhs(rng, A, n, rhs):
    M = A - np.eye(n)
    if rhs == "random":
        return rng.standard_normal(n)
    w = rng.integers(-3, 4, n).astype(np.float64)
    b = M @ w
    if rhs == "range":
        return b
    t = rng.uniform(0.5, 2.0)
    return b - t if rhs == "negative" else b + t


def generate_instance(kind, n=None, seed=None, rhs="random"):
    """Build an (A, b, x0) instance of the given kind.

    Fixed kinds: ``ex32`` and ``remark43`` (2x2 with starting points) and
    ``ex37`` (the n x n upper triangular matrix of ``upper_minus_ones``).
    Random kinds: ``a1_random`` (A - I nonsingular M-matrix),
    ``a2_random`` (A - I irreducible singular M-matrix) and
    ``rho_third_random`` (rho(|A^-1|) < 0.3).  ``rhs`` selects b for the
    random kinds: Gaussian, ``range`` (b = (A - I)w with integer w), or
    that shifted by -t or +t times the ones vector.
    """
    if kind not in KINDS:
        raise InvalidKind(f"unknown instance kind {kind!r}; expected one of {KINDS}")
    if rhs not in RHS_KINDS:
        raise InvalidKind(f"unknown rhs kind {rhs!r}; expected one of {RHS_KINDS}")
    rng = np.random.default_rng(seed)

    if kind == "ex32":
        return Instance(kind, np.array([[3.0, -1.0], [-1.0, 3.0]]),
                        np.array([1.0, -4.0]), np.array([-1.0, -1.0]))
    if kind == "remark43":
        return Instance(kind, np.array([[0.59, 1.02], [0.15, 0.67]]),
                        np.array([1.68, 0.05]), np.array([-0.46, -0.61]))

    if n is None or n < 1:
        raise ValueError(f"kind {kind!r} needs n >= 1")
    if kind == "ex37":
        return Instance(kind, upper_minus_ones(n), rng.standard_normal(n))

    if kind == "rho_third_random":
        M = rng.uniform(-1.0, 1.0, (n, n))
        M *= rng.uniform(0.05, 0.3) / spectral_radius(elementwise_abs(M))
        A = inverse(M)
    else:
        C = _irreducible_offdiagonal(rng, n)
        u = rng.uniform(0.5, 1.5, n)
        A = np.eye(n) + singular_m_with_null_vector(C, u)
        if kind == "a1_random":
            A += rng.uniform(0.1, 1.0) * max(1.0, np.diag(A).mean() - 1.0) * np.eye(n)
    return Instance(kind, A, _rhs(rng, A, n, rhs))
