"""Structural tests on square matrices: Z- and M-matrix classes,
irreducibility, Perron null vectors and interval regularity."""
import enum
import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.sparse.csgraph import connected_components

from .errors import NotApplicable, TooLarge
from .linalg import (as_matrix, determinant, inverse, perron_pair,
                     spectral_radius)


class MClass(enum.Enum):
    NONSINGULAR_M = "NonsingularM"
    SINGULAR_M = "SingularM"
    NOT_M = "NotM"
    NOT_Z = "NotZ"


@dataclass
class MatrixReport:
    """Classification of A, mostly in terms of A - I."""
    is_z_matrix_A_minus_I: bool
    m_class: MClass
    irreducible: bool
    right_null_vector_u: Optional[np.ndarray] = None
    left_null_vector_v: Optional[np.ndarray] = None
    interval_regular: Optional[bool] = None
    certificates: list = field(default_factory=list)

    def to_dict(self):
        def vec(x):
            return None if x is None else [float(t) for t in x]
        return {
            "is_z_matrix_A_minus_I": self.is_z_matrix_A_minus_I,
            "m_class": self.m_class.value,
            "irreducible": self.irreducible,
            "right_null_vector_u": vec(self.right_null_vector_u),
            "left_null_vector_v": vec(self.left_null_vector_v),
            "interval_regular": self.interval_regular,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def is_z_matrix(A):
    A = as_matrix(A)
    off = A[~np.eye(A.shape[0], dtype=bool)]
    return bool(np.all(off <= 0))


def m_matrix_tolerance(s):
    return 1e-9 * max(1.0, s)


def classify_m_matrix(A):
    """Write a Z-matrix as sI - B with s = max diagonal and compare s to rho(B)."""
    A = as_matrix(A)
    if not is_z_matrix(A):
        return MClass.NOT_Z
    n = A.shape[0]
    s = float(np.diag(A).max())
    B = s * np.eye(n) - A
    gap = s - spectral_radius(B)
    tau = m_matrix_tolerance(s)
    if gap > tau:
        return MClass.NONSINGULAR_M
    if gap < -tau:
        return MClass.NOT_M
    return MClass.SINGULAR_M


def is_irreducible(A):
    """True iff the digraph of the off-diagonal nonzeros is strongly connected."""
    A = as_matrix(A)
    n = A.shape[0]
    if n == 1:
        return True
    adj = (A != 0) & ~np.eye(n, dtype=bool)
    ncomp, _ = connected_components(adj.astype(np.int8), directed=True,
                                    connection="strong")
    return ncomp == 1


def singular_m_null_vectors(A, start=None):
    """Positive right and left null vectors of an irreducible singular M-matrix.

    Both are Perron vectors of B (resp. B^T) where A = sI - B, found by
    shifted power iteration and scaled to unit max-norm.  ``start`` is an
    optional positive starting vector used for both iterations.
    """
    A = as_matrix(A)
    if classify_m_matrix(A) is not MClass.SINGULAR_M or not is_irreducible(A):
        raise NotApplicable("matrix is not an irreducible singular M-matrix")
    n = A.shape[0]
    s = float(np.diag(A).max())
    B = s * np.eye(n) - A
    _, u = perron_pair(B, start=start)
    _, v = perron_pair(B.T, start=start)
    for name, M, z in (("u", A, u), ("v", A.T, v)):
        resid = np.abs(M @ z).max()
        if resid > 1e-8:
            raise NotApplicable(f"null vector {name} has residual {resid:.3e}")
    return u, v


def _hadamard_scale(M):
    return float(np.prod(np.linalg.norm(M, axis=1)))


def vertex_determinants(A):
    """Yield (d, det(A - diag(d)), scale) over all d in {-1, +1}^n."""
    A = as_matrix(A)
    n = A.shape[0]
    for d in itertools.product((-1.0, 1.0), repeat=n):
        M = A - np.diag(d)
        yield np.array(d), determinant(M), _hadamard_scale(M)


def interval_regularity_vertex_test(A, max_n=20):
    """Regularity of the interval matrix [A - I, A + I].

    det(A - diag(d)) is affine in each d_i, so it keeps one strict sign on
    the whole box iff it does so on the 2^n vertices.  Vertex determinants
    below 1e-12 times the Hadamard bound count as zero.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if n > max_n:
        raise TooLarge(f"vertex test needs 2^{n} determinants (n > {max_n})")
    sign = 0
    for _, det, scale in vertex_determinants(A):
        if abs(det) <= 1e-12 * scale:
            return False
        s = 1 if det > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def neumann_ratio(X):
    """rho((I - X)^{-1} X) for nonnegative X with rho(X) < 1."""
    X = as_matrix(X)
    if np.any(X < 0):
        raise NotApplicable("X has negative entries")
    if spectral_radius(X) >= 1:
        raise NotApplicable("rho(X) >= 1")
    n = X.shape[0]
    Y = inverse(np.eye(n) - X) @ X
    return spectral_radius(Y)
