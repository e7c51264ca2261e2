"""Exact symbolic machinery for conformally equivariant boundary operators.

Everything is computed over the rationals: sparse multivariate
polynomials, Gegenbauer families with symbolic parameter, Fourier-side
solution spaces and their closed forms, Clifford-valued spinor
analogues, decomposition reports with infinitesimal characters, and the
emitted operator stencils together with their equivariance checks.
"""

from .polynomial import (
    ALPHA,
    GX,
    LAMBDA,
    T,
    MultiPolynomial,
    Signature,
    monomial_basis,
    parse_polynomial,
    poly,
    var_name,
    x,
    xi,
)
from .linalg import nullspace, rank
from .gegenbauer import (
    GegenbauerPoly,
    gegenbauer_C,
    gegenbauer_Ctilde,
    gegenbauer_ode_residual,
    inflated_Cscript,
    ode_residual_R,
    verify_identity,
)
from .scalar import (
    SYMBOLIC,
    SolBasis,
    apply_P,
    apply_Q,
    brute_force_sol,
    classify_sol,
    closed_form_f,
    closed_form_w,
    harmonic_dimension,
    harmonic_space,
    radial_reduction_check,
)
from .clifford import CliffordPolynomial, all_blades, clifford_mul, dirac, reversal
from .spinor import (
    apply_spinor_P,
    apply_spinor_Q,
    brute_force_spinor_sol,
    monogenic_basis,
    spinor_ode_residuals,
    spinor_singular_F,
)
from .branching import (
    BranchReport,
    CharacterVector,
    factorization_witness,
    inf_char_scalar,
    inf_char_spinor,
    irreducibility_test,
    is_generic,
    lambda_j,
    scalar_branch_report,
    spinor_branch_report,
    submodule_inclusion_holds,
)
from .juhl import (
    OperatorStencil,
    apply_and_restrict,
    build_ambient_operator,
    build_operator,
    coeff_a,
    coeff_b,
    verify_intertwining,
)
from .suites import run_suite, suite_registry

__version__ = "0.1.0"
