"""Small dense linear algebra kernels.

Matrices and vectors are plain ``float64`` numpy arrays.  Problem sizes are
desk scale (n <= ~100), so the LU factorization is written out directly with
partial pivoting instead of going through LAPACK; this keeps the singularity
cutoff and the exact-zero determinant behaviour under our control.
"""
import numpy as np

from .errors import NoConvergence, SingularMatrix

# relative pivot cutoff used by the solvers (not by determinant)
PIVOT_TOL = 1e-14


def as_matrix(A, square=True):
    A = np.array(A, dtype=np.float64)
    if A.ndim != 2 or A.size == 0:
        raise ValueError(f"expected a non-empty 2-d array, got shape {A.shape}")
    if square and A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def as_vector(x, n=None):
    x = np.array(x, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise ValueError(f"expected a non-empty 1-d array, got shape {x.shape}")
    if n is not None and x.size != n:
        raise ValueError(f"expected a vector of length {n}, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector has non-finite entries")
    return x


def lu_factor(A):
    """LU factorization with partial pivoting, PA = LU.

    Returns ``(lu, perm, sign)`` where ``lu`` packs the unit lower factor
    below the diagonal and U on and above it, ``perm`` is the row order and
    ``sign`` the parity of the permutation.  Never raises on singular input;
    a zero pivot column is simply skipped.
    """
    lu = as_matrix(A).copy()
    n = lu.shape[0]
    perm = np.arange(n)
    sign = 1.0
    for k in range(n - 1):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            sign = -sign
        pivot = lu[k, k]
        if pivot == 0.0:
            continue
        lu[k + 1:, k] /= pivot
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, perm, sign


def _check_pivots(lu, scale):
    piv = np.abs(np.diag(lu))
    bad = np.flatnonzero(piv <= PIVOT_TOL * scale)
    if bad.size:
        k = int(bad[0])
        raise SingularMatrix(
            f"pivot {k} has magnitude {piv[k]:.3e} <= {PIVOT_TOL:g} * {scale:.3e}")


def _substitute(lu, perm, B):
    n = lu.shape[0]
    y = B[perm].copy()
    for i in range(1, n):
        y[i] -= lu[i, :i] @ y[:i]
    for i in range(n - 1, -1, -1):
        y[i] = (y[i] - lu[i, i + 1:] @ y[i + 1:]) / lu[i, i]
    return y


def lu_solve(A, b):
    """Solve ``A x = b`` by partial-pivoting LU.

    Raises SingularMatrix when a pivot falls below ``PIVOT_TOL`` times the
    largest entry magnitude of ``A``.
    """
    A = as_matrix(A)
    b = as_vector(b)
    if b.size != A.shape[0]:
        raise ValueError(f"dimension mismatch: A is {A.shape[0]}x{A.shape[1]}, b has {b.size}")
    scale = np.abs(A).max()
    lu, perm, _ = lu_factor(A)
    _check_pivots(lu, scale)
    return _substitute(lu, perm, b)


def determinant(A):
    lu, _, sign = lu_factor(A)
    return float(sign * np.prod(np.diag(lu)))


def inverse(A):
    A = as_matrix(A)
    n = A.shape[0]
    scale = np.abs(A).max()
    lu, perm, _ = lu_factor(A)
    _check_pivots(lu, scale)
    M = _substitute(lu, perm, np.eye(n))
    resid = np.abs(A @ M - np.eye(n)).max()
    # residual sanity check; ill-conditioned but nonsingular inputs still pass
    if not np.isfinite(resid) or resid > 1e-6 * max(1.0, np.abs(M).max() * scale * n):
        raise SingularMatrix(f"inverse residual {resid:.3e} too large")
    return M


def elementwise_abs(A):
    return np.abs(np.asarray(A, dtype=np.float64))


def spectral_radius(A):
    """Largest eigenvalue modulus of a square matrix (dense QR algorithm)."""
    A = as_matrix(A)
    try:
        ev = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return float(np.abs(ev).max())


def spectral_norm(A):
    A = as_matrix(A, square=False)
    try:
        s = np.linalg.svd(A, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return float(s[0])


def collatz_wielandt_bounds(X, z):
    """Lower and upper Collatz-Wielandt bounds on rho(X) for X >= 0, z > 0."""
    X = as_matrix(X)
    z = as_vector(z, X.shape[0])
    if np.any(z <= 0):
        raise ValueError("test vector must be strictly positive")
    r = (X @ z) / z
    return float(r.min()), float(r.max())


def perron_pair(X, shift=1.0, tol=1e-13, max_iter=200_000, start=None):
    """Perron root and vector of a nonnegative irreducible matrix.

    Power iteration on ``X + shift*I``; the shift leaves the eigenvectors
    alone and makes an irreducible X primitive.  Iteration stops once the
    Collatz-Wielandt bounds of the shifted matrix agree to ``tol``
    (relative).  Returns ``(rho, z)`` with ``z > 0`` and ``max(z) == 1``.
    """
    X = as_matrix(X)
    if np.any(X < 0):
        raise ValueError("perron_pair needs a nonnegative matrix")
    n = X.shape[0]
    M = X + shift * np.eye(n)
    z = np.ones(n) if start is None else as_vector(start, n).copy()
    if np.any(z <= 0):
        raise ValueError("start vector must be strictly positive")
    z /= z.max()
    for _ in range(max_iter):
        y = M @ z
        top = y.max()
        if top <= 0:
            raise NoConvergence("power iteration collapsed to zero")
        if np.all(y > 0) and np.all(z > 0):
            r = y / z
            lo, hi = r.min(), r.max()
            if hi - lo <= tol * hi:
                return float(0.5 * (lo + hi) - shift), y / top
        # zeros can persist for a while (or forever, if X is reducible)
        z = y / top
    raise NoConvergence(f"power iteration did not converge in {max_iter} steps")
