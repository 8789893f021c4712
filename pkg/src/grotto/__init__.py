"""Virtual classes of affine constraint varieties and transfer-matrix pipelines
for the upper-triangular groups of rank 2, 3 and 4."""

from .classring import (
    ClassExpr,
    ClassPoly,
    NotPolynomial,
    PoleAtPoint,
    e_polynomial,
    evaluate_at,
)
from .groups import (
    GroupSpec,
    StrataClassMismatch,
    StratumSpec,
    SymbolicMatrix,
    U2,
    U3,
    U4,
    commutator,
    generic_element,
    group,
    mat_inv,
    mat_mul,
    membership_constraints,
    strata,
)
from .poly import (
    NonLinearFactorization,
    ParseError,
    Poly,
    Rational,
    parse_poly,
    perfect_power,
    perfect_square_root,
    split_product,
    univariate_linear_roots,
)
from .tqft import (
    GENUS_HANDLE,
    NotLocalized,
    ParabolicState,
    Puncture,
    TqftMatrix,
    closed_form,
    closed_form_published,
    diag_check,
    eta,
    f_tensor,
    first_column,
    matrix_power,
    reduced_L,
    rep_variety_class,
    u2_parabolic_apply,
    u2_parabolic_class,
    z_pi_L,
)
from .variety import (
    BudgetExceeded,
    ClassResult,
    DepthExceeded,
    Engine,
    Unresolvable,
    Variety,
    class_of,
    count_points,
    load_variety,
    parse_variety,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
