"""Convergence and solvability certificates for Ax - |x| = b.

Covers the norm and spectral-radius sufficient conditions for global GNM
convergence, the two M-matrix classes of A - I, the sign-of-v'b
trichotomy when A - I is an irreducible singular M-matrix, and the
one-parameter solution family in the degenerate case.
"""
import enum
import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import NoConvergence, NotApplicable, SingularMatrix
from .gnm import gnm_solve, sign_pattern
from .linalg import (as_matrix, as_vector, elementwise_abs, inverse,
                     spectral_norm, spectral_radius)
from .structure import (MatrixReport, MClass, classify_m_matrix,
                        interval_regularity_vertex_test, is_irreducible,
                        is_z_matrix, neumann_ratio, singular_m_null_vectors)

THIRD = 1.0 / 3.0


class CertName(enum.Enum):
    NORM_THIRD = "NormThird"
    RHO_THIRD = "RhoThird"
    INTERVAL_REGULAR = "IntervalRegular"
    A1 = "A1_NonsingularM"
    A2 = "A2_IrreducibleSingularM"


@dataclass
class Certificate:
    name: CertName
    holds: bool
    value: Optional[float] = None
    detail: str = ""
    extras: dict = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name.value, "holds": self.holds,
                "value": self.value, "detail": self.detail,
                "extras": dict(self.extras)}


class Case(enum.Enum):
    UNIQUE = "UniqueSolution"
    NONE = "NoSolution"
    INFINITELY_MANY = "InfinitelyMany"
    INAPPLICABLE = "Inapplicable"


@dataclass
class SolutionFamily:
    """The ray x(alpha) = w - alpha*u, alpha <= alpha_max, of solutions."""
    w: np.ndarray
    u: np.ndarray
    alpha_max: float

    def __call__(self, alpha):
        if alpha > self.alpha_max:
            raise ValueError(f"alpha = {alpha} exceeds alpha_max = {self.alpha_max}")
        return self.w - alpha * self.u

    def to_dict(self):
        return {"w": [float(t) for t in self.w], "u": [float(t) for t in self.u],
                "alpha_max": self.alpha_max}


@dataclass
class SolvabilityVerdict:
    case: Case
    v_dot_b: float
    family: Optional[SolutionFamily] = None
    zero_component_solution: Optional[np.ndarray] = None

    def to_dict(self):
        z = self.zero_component_solution
        return {"case": self.case.value, "v_dot_b": self.v_dot_b,
                "family": None if self.family is None else self.family.to_dict(),
                "zero_component_solution": None if z is None else [float(t) for t in z]}


def certify_norm_third(A):
    A = as_matrix(A)
    try:
        nrm = spectral_norm(inverse(A))
    except SingularMatrix as exc:
        return Certificate(CertName.NORM_THIRD, False, None, f"A is singular: {exc}")
    return Certificate(CertName.NORM_THIRD, nrm < THIRD, nrm, f"||A^-1||_2 = {nrm:.6g}")


def certify_rho_third(A):
    """Check rho(|A^-1|) < 1/3.

    When rho(|A^-1|) < 1 the contraction matrix B = (I - |A^-1|)^-1 |A^-1|
    is also formed; ``extras`` gets rho(B) and rho(2B), and rho(B) is
    compared with r/(1 - r).
    """
    A = as_matrix(A)
    try:
        P = elementwise_abs(inverse(A))
    except SingularMatrix as exc:
        return Certificate(CertName.RHO_THIRD, False, None, f"A is singular: {exc}")
    r = spectral_radius(P)
    holds = r < THIRD - 1e-12
    detail = f"rho(|A^-1|) = {r:.6g}"
    extras = {}
    if r < 1:
        try:
            rho_B = neumann_ratio(P)
        except (NotApplicable, SingularMatrix):
            rho_B = None
        if rho_B is not None:
            predicted = r / (1 - r)
            extras = {"rho_B": rho_B, "rho_2B": 2 * rho_B,
                      "rho_B_predicted": predicted}
            detail += f", rho(2B) = {2 * rho_B:.6g}"
            if abs(rho_B - predicted) > 1e-8 * max(1.0, predicted):
                warnings.warn(f"rho(B) = {rho_B!r} differs from r/(1-r) = {predicted!r}")
    return Certificate(CertName.RHO_THIRD, holds, r, detail, extras)


def classify_ave(A):
    """A1 certificate if A - I is a nonsingular M-matrix, A2 if it is an
    irreducible singular M-matrix, otherwise a failed certificate."""
    A = as_matrix(A)
    M = A - np.eye(A.shape[0])
    mc = classify_m_matrix(M)
    if mc is MClass.NONSINGULAR_M:
        return Certificate(CertName.A1, True, None, "A - I is a nonsingular M-matrix")
    if mc is MClass.SINGULAR_M:
        if is_irreducible(M):
            return Certificate(CertName.A2, True, None,
                               "A - I is an irreducible singular M-matrix")
        return Certificate(CertName.A2, False, None,
                           "A - I is a reducible singular M-matrix")
    return Certificate(CertName.A1, False, None, f"A - I is {mc.value}")


def _require_a2(A):
    cert = classify_ave(A)
    if not (cert.name is CertName.A2 and cert.holds):
        raise NotApplicable(f"A - I is not an irreducible singular M-matrix ({cert.detail})")


def singular_case_trichotomy(A, b):
    A = as_matrix(A)
    n = A.shape[0]
    b = as_vector(b, n)
    _require_a2(A)
    M = A - np.eye(n)
    u, v = singular_m_null_vectors(M)
    vb = float(v @ b)
    if abs(vb) <= 1e-10 * np.linalg.norm(v) * np.linalg.norm(b):
        w = np.linalg.lstsq(M, b, rcond=None)[0]
        family = SolutionFamily(w, u, float(np.min(w / u)))
        return SolvabilityVerdict(Case.INFINITELY_MANY, vb, family,
                                  family(family.alpha_max))
    if vb < 0:
        return SolvabilityVerdict(Case.UNIQUE, vb)
    return SolvabilityVerdict(Case.NONE, vb)


def iteration_bound(A):
    """Worst-case GNM iteration count: n + 2 under A1, n + 1 under A2."""
    A = as_matrix(A)
    n = A.shape[0]
    cert = classify_ave(A)
    if cert.holds and cert.name is CertName.A1:
        return n + 2
    if cert.holds and cert.name is CertName.A2:
        return n + 1
    raise NotApplicable(f"no iteration bound: {cert.detail}")


def zero_component_solution(A, b, x0=None):
    """The unique solution with a zero component when v'b = 0.

    Found by GNM from ``x0`` (default zero vector); ``x0`` must have at
    least one nonpositive component.  Raises NoConvergence if the run does
    not end, within n + 1 solves, at a nonnegative solution with a zero
    component.
    """
    A = as_matrix(A)
    n = A.shape[0]
    verdict = singular_case_trichotomy(A, b)
    if verdict.case is not Case.INFINITELY_MANY:
        raise NotApplicable(f"v'b = {verdict.v_dot_b:.3e} is not zero")
    if x0 is not None and np.all(sign_pattern(x0) == 1):
        raise NotApplicable("x0 must have a nonpositive component")
    trace = gnm_solve(A, b, x0)
    if not trace.solved:
        raise NoConvergence(f"GNM stopped with {trace.termination.value}")
    x = trace.solution
    if trace.iterations_used > n + 1:
        raise NoConvergence(f"GNM used {trace.iterations_used} > n + 1 iterations")
    if np.any(x < -1e-10):
        raise NoConvergence("GNM solution has a negative component")
    if not np.any(np.abs(x) <= 1e-9 * max(1.0, np.abs(x).max())):
        raise NoConvergence("GNM solution has no zero component")
    return x


def matrix_report(A, regularity=False):
    A = as_matrix(A)
    n = A.shape[0]
    M = A - np.eye(n)
    report = MatrixReport(is_z_matrix(M), classify_m_matrix(M), is_irreducible(M))
    ave = classify_ave(A)
    report.certificates.append(ave)
    if ave.holds and ave.name is CertName.A2:
        report.right_null_vector_u, report.left_null_vector_v = singular_m_null_vectors(M)
    report.certificates.append(certify_norm_third(A))
    report.certificates.append(certify_rho_third(A))
    if regularity:
        reg = interval_regularity_vertex_test(A)
        report.interval_regular = reg
        report.certificates.append(Certificate(
            CertName.INTERVAL_REGULAR, reg, None,
            "[A - I, A + I] is regular" if reg else "[A - I, A + I] is not regular"))
    return report
