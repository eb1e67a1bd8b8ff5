"""Exact minimal generating sets for kernels of quasi-monomial curve maps.

For n >= 3 the map sends x to t^a (1 + t^q), y to t^(a+1), z to t^(a+2)
with a = (n-1)n/2; its kernel is a prime ideal minimally generated by n
polynomials, which this package constructs in exact rational arithmetic and
verifies independently (kernel membership, leading-form structure,
good-kernel dimensions, and the colength a+2 modulo z).
"""

from .binomials import bin_det, binom, binom_submatrix, interval, pascal, rotated_matrix
from .generators import (CaseKind, CaseTag, GeneratorRecord, GeneratorSet,
                         SingularSystemError, build_all, build_leading,
                         build_small, build_tail, expected_sigma_orders,
                         tail_stages)
from .linalg import (DimensionMismatchError, Matrix, SingularMatrixError,
                     kernel_basis, rank, solve_unique)
from .polynomials import (OMEGA, OutOfValidatedRangeError, Poly1, Poly3,
                          ZeroPolynomialError, basis_combination, format_poly,
                          poly_from_json_terms, poly_to_json_terms, rho_apply,
                          sigma_order, sigma_split, weight, wr_basis)
from .restrictions import (GoodSet, IndexOutOfRangeError, RestrictionMatrix,
                           WrongCardinalityError, good_kernel_basis, good_set,
                           kernel_dim, kernel_poly, restriction_matrix)
from .semigroup import (ElementProfile, NotInSemigroupError, SemigroupContext,
                        build_context, classify_window, factorizations,
                        is_member, profile)
from .verification import (BoundTooSmallError, CheckResult, VerificationReport,
                           brute_kernel_search, default_search_bound,
                           expected_mod_z_monomials, full_report,
                           mod_z_monomials, staircase_count, verify_below_s0,
                           verify_colength, verify_kernel,
                           verify_leading_spans, verify_sigma_structure,
                           verify_window_dimensions)

__version__ = "0.1.0"
