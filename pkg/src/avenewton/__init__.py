"""Generalized Newton method for the absolute value equation Ax - |x| = b,
with M-matrix diagnostics and a brute-force enumeration oracle."""
from .errors import (AveError, InvalidKind, NoConvergence, NotApplicable,
                     SingularJacobian, SingularMatrix, TooLarge)
from .linalg import (collatz_wielandt_bounds, determinant, elementwise_abs,
                     inverse, lu_solve, perron_pair, spectral_norm,
                     spectral_radius)
from .structure import (MatrixReport, MClass, classify_m_matrix,
                        interval_regularity_vertex_test, is_irreducible,
                        is_z_matrix, neumann_ratio, singular_m_null_vectors)
from .gnm import (GnmTrace, Termination, check_solution, gnm_solve, gnm_step,
                  sign_pattern, termination_test)
from .diagnostics import (Case, Certificate, CertName, SolutionFamily,
                          SolvabilityVerdict, certify_norm_third,
                          certify_rho_third, classify_ave, iteration_bound,
                          matrix_report, singular_case_trichotomy,
                          zero_component_solution)
from .oracle import (Instance, SolutionSet, enumerate_solutions,
                     enumerate_with_uniqueness, generate_instance)

__version__ = "0.1.0"
