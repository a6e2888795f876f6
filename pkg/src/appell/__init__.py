"""Exact Appell polynomial families through the creation matrix H.

Every Appell family with generating function f(t) e^{xt} is carried by its
transfer matrix M = f(H), where H is the nilpotent creation matrix with
subdiagonal 1, 2, ..., m.  All arithmetic is in exact rationals.
"""

from .errors import (
    AppellError,
    DomainError,
    IdentityViolation,
    NotInvertible,
    OrderMismatch,
    SingularMatrix,
    ZeroScale,
)
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    Kind,
    TransferMatrix,
    gamma_coefficients,
    generalized_binomial,
    taylor_coefficients,
    transfer_matrix,
)
from .matrix import (
    LTMatrix,
    Rat,
    creation_matrix,
    diag_factorial,
    diag_geometric,
    lt_inverse,
    mat_mul,
    mat_pow,
    mat_vec,
    monomial_vector,
    pascal_generalized,
    series_of_H,
)
from .ops import (
    AppellVector,
    appell_vector,
    classical_chebyshev1,
    classical_chebyshev2,
    classical_hermite,
    classical_laguerre,
    classical_legendre,
    combine,
    compose,
    derivative,
    evaluate,
    forward_difference,
    odd_coeffs_vanish,
    recurrence_eval,
    scale_argument,
    symmetry_holds,
    translate,
)

__version__ = "0.1.0"

__all__ = [
    "AppellError",
    "DomainError",
    "IdentityViolation",
    "NotInvertible",
    "OrderMismatch",
    "SingularMatrix",
    "ZeroScale",
    "FAMILY_NAMES",
    "FamilySpec",
    "Kind",
    "TransferMatrix",
    "gamma_coefficients",
    "generalized_binomial",
    "taylor_coefficients",
    "transfer_matrix",
    "LTMatrix",
    "Rat",
    "creation_matrix",
    "diag_factorial",
    "diag_geometric",
    "lt_inverse",
    "mat_mul",
    "mat_pow",
    "mat_vec",
    "monomial_vector",
    "pascal_generalized",
    "series_of_H",
    "AppellVector",
    "appell_vector",
    "classical_chebyshev1",
    "classical_chebyshev2",
    "classical_hermite",
    "classical_laguerre",
    "classical_legendre",
    "combine",
    "compose",
    "derivative",
    "evaluate",
    "forward_difference",
    "odd_coeffs_vanish",
    "recurrence_eval",
    "scale_argument",
    "symmetry_holds",
    "translate",
]
