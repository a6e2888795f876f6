"""Operations on Appell vectors p(x) = M xi(x).

Polynomials are carried only by their transfer matrix: row n of M lists the
coefficients of p_n in ascending powers of x.
"""

import warnings
from dataclasses import dataclass
from math import comb

from .errors import DomainError, IdentityViolation, OrderMismatch
from .families import FamilySpec, Kind, TransferMatrix, gamma_coefficients, transfer_matrix
from .matrix import (
    ZERO,
    LTMatrix,
    as_rat,
    diag_factorial,
    diag_geometric,
    mat_mul,
    mat_vec,
    monomial_vector,
    pascal,
    pascal_generalized,
    rat_vector,
)


class DegenerateAppellWarning(UserWarning):
    """A derived vector has c_0 = 0, so it is Appell only in the weak sense."""


@dataclass(frozen=True)
class AppellVector:
    tm: TransferMatrix

    @property
    def matrix(self):
        return self.tm.matrix

    @property
    def m(self):
        return self.tm.m

    @property
    def spec(self):
        return self.tm.spec

    @property
    def is_degenerate(self):
        return self.tm.c0 == 0

    def coefficients(self, n):
        """Coefficients of p_n, ascending powers, length n+1."""
        return self.matrix.row(n)[: n + 1]

    def degree(self, n):
        row = self.coefficients(n)
        for k in range(n, -1, -1):
            if row[k]:
                return k
        return -1

    def __call__(self, x):
        return evaluate(self, x)


def appell_vector(spec, m):
    return AppellVector(transfer_matrix(spec, m))


def from_matrix(matrix, spec=None):
    """Wrap an arbitrary lower-triangular coefficient matrix."""
    return AppellVector(TransferMatrix(spec, matrix.m, matrix))


def evaluate(av, x):
    """(p_0(x), ..., p_m(x)) computed as M xi(x)."""
    return mat_vec(av.matrix, monomial_vector(av.m, x))


def derivative(av):
    """Coefficient matrix of (p_0', ..., p_m').

    Differentiates each row term by term; the result equals H M.
    """
    rows = av.matrix.rows
    n = av.matrix.order
    return LTMatrix.from_function(n, lambda i, k: (k + 1) * rows[i][k + 1] if k + 1 <= i else ZERO)


def translate(av, y, x):
    """p(x + y) computed as P(y) p(x)."""
    return mat_vec(pascal_generalized(av.m, y), evaluate(av, x))


def forward_difference(av, x):
    """p(x + 1) - p(x) computed as (P - I) p(x)."""
    m = av.m
    return mat_vec(pascal(m) - LTMatrix.identity(m + 1), evaluate(av, x))


def scale_argument(av, a, x, route="pascal"):
    """p(a x) by one of three routes.

    ``"pascal"``: P((a-1) x) p(x).  ``"diagonal"``: M D[a] xi(x), which
    raises :class:`ZeroScale` for a = 0.  ``"direct"``: M xi(a x).
    """
    a, x = as_rat(a), as_rat(x)
    if route == "pascal":
        return mat_vec(pascal_generalized(av.m, (a - 1) * x), evaluate(av, x))
    if route == "diagonal":
        return mat_vec(mat_mul(av.matrix, diag_geometric(av.m, a)), monomial_vector(av.m, x))
    if route == "direct":
        return evaluate(av, a * x)
    raise ValueError(f"unknown route {route!r}")


def _flip_signs(values):
    # D[-1] applied to a vector
    return tuple(v if k % 2 == 0 else -v for k, v in enumerate(values))


def symmetry_holds(av, h, sample_xs):
    """Whether p(h) = D[-1] p(0).

    When it does, p(h - x) = D[-1] p(x) must follow for every x; each
    sample point is checked and :class:`IdentityViolation` is raised on a
    mismatch.
    """
    h = as_rat(h)
    if evaluate(av, h) != _flip_signs(evaluate(av, 0)):
        return False
    for x in sample_xs:
        x = as_rat(x)
        if evaluate(av, h - x) != _flip_signs(evaluate(av, x)):
            raise IdentityViolation(f"p({h} - x) != D[-1] p(x) at x = {x}")
    return True


def odd_coeffs_vanish(spec, m):
    """Whether c_n = 0 for every odd n <= m.

    For c_0 != 0 the same must hold for the gamma sequence, in both
    directions; a disagreement raises :class:`IdentityViolation`.
    """
    coeffs = transfer_matrix(spec, m).coeffs
    c_odd = all(c == 0 for c in coeffs[1::2])
    if coeffs[0] != 0:
        gamma = gamma_coefficients(spec, m)
        g_odd = all(g == 0 for g in gamma[1::2])
        if c_odd != g_odd:
            raise IdentityViolation("odd c_n and odd gamma_n do not vanish together")
    return c_odd


def recurrence_eval(spec, m, x):
    """p_0(x)..p_m(x) from the gamma sequence alone.

    Uses p_n = (x^n - sum_{k<n} C(n,k) gamma_(n-k) p_k) / gamma_0.
    """
    gamma = gamma_coefficients(spec, m)
    xs = monomial_vector(m, x)
    p = []
    for n in range(m + 1):
        acc = sum((comb(n, k) * gamma[n - k] * p[k] for k in range(n)), ZERO)
        p.append((xs[n] - acc) / gamma[0])
    return tuple(p)


def combine(avs, weights):
    """Weighted sum of Appell vectors; the transfer matrices add linearly.

    A result with c_0 = 0 is returned but flagged with
    :class:`DegenerateAppellWarning`.
    """
    avs = list(avs)
    weights = rat_vector(weights)
    if not avs or len(avs) != len(weights):
        raise ValueError("need one weight per Appell vector")
    m = avs[0].m
    total = LTMatrix.zero(m + 1)
    for av, w in zip(avs, weights):
        if av.m != m:
            raise OrderMismatch("all Appell vectors must share the same degree bound")
        total = total + av.matrix.scale(w)
    out = from_matrix(total)
    if out.is_degenerate:
        warnings.warn("combination has c_0 = 0", DegenerateAppellWarning, stacklevel=2)
    return out


def compose(outer, inner):
    """Replace x^k in each outer polynomial by inner p_k: matrix M_outer M_inner."""
    if outer.m != inner.m:
        raise OrderMismatch("degree bounds differ")
    return from_matrix(mat_mul(outer.matrix, inner.matrix))


def classical_hermite(m, x):
    """H_0(x)..H_m(x) as D[2] M xi(x) from the monic Hermite family."""
    av = appell_vector(FamilySpec(Kind.HERMITE_MONIC), m)
    return mat_vec(diag_geometric(m, 2), evaluate(av, x))


def laguerre_ladder(m, alpha, x):
    """(L_0^(a), L_1^(a-1), ..., L_m^(a-m)) at x, from (I - H)^a."""
    av = appell_vector(FamilySpec(Kind.LAGUERRE_MODIFIED, alpha=alpha), m)
    v = mat_vec(diag_geometric(m, -1), evaluate(av, x))
    f = diag_factorial(m)
    return tuple(v[n] / f[n, n] for n in range(m + 1))


def classical_laguerre(m, alpha, x):
    """Generalized Laguerre values L_n^(alpha)(x), n = 0..m.

    The ladder vector L satisfies L = P(-1) Lg, so Lg = P L.
    """
    return mat_vec(pascal(m), laguerre_ladder(m, alpha, x))


def _conjugate_even(matrix, x):
    # D[s] M D[s]^-1 with s = sqrt(1 - x^2): entry M_ij s^(i-j); only even
    # offsets may be nonzero, so only (1 - x^2) is needed
    x = as_rat(x)
    if x * x >= 1:
        raise DomainError(f"need |x| < 1, got x = {x}")
    s2 = 1 - x * x
    rows = matrix.rows

    def entry(i, j):
        d = i - j
        if d % 2:
            if rows[i][j]:
                raise IdentityViolation(f"odd-offset entry ({i}, {j}) is nonzero")
            return ZERO
        return rows[i][j] * s2 ** (d // 2)

    return LTMatrix.from_function(matrix.order, entry)


def _classical_even(kind, m, x):
    tm = transfer_matrix(FamilySpec(kind), m)
    return mat_vec(_conjugate_even(tm.matrix, x), monomial_vector(m, x))


def classical_legendre(m, x):
    return _classical_even(Kind.LEGENDRE_MODIFIED, m, x)


def classical_chebyshev1(m, x):
    return _classical_even(Kind.CHEBYSHEV1_MODIFIED, m, x)


def classical_chebyshev2(m, x):
    """U_0(x)..U_m(x); rescales the modified family by D_(m+1) = diag(1..m+1)."""
    v = _classical_even(Kind.CHEBYSHEV2_MODIFIED, m, x)
    return tuple((n + 1) * u for n, u in enumerate(v))


CLASSICAL = {
    Kind.HERMITE_MONIC: "hermite",
    Kind.LAGUERRE_MODIFIED: "laguerre",
    Kind.LEGENDRE_MODIFIED: "legendre",
    Kind.CHEBYSHEV1_MODIFIED: "chebyshev1",
    Kind.CHEBYSHEV2_MODIFIED: "chebyshev2",
}


def classical_values(spec, m, x):
    """Dispatch to the classical reconstruction matching ``spec``."""
    kind = spec.kind
    if kind is Kind.HERMITE_MONIC:
        return classical_hermite(m, x)
    if kind is Kind.LAGUERRE_MODIFIED:
        return classical_laguerre(m, spec.alpha, x)
    if kind is Kind.LEGENDRE_MODIFIED:
        return classical_legendre(m, x)
    if kind is Kind.CHEBYSHEV1_MODIFIED:
        return classical_chebyshev1(m, x)
    if kind is Kind.CHEBYSHEV2_MODIFIED:
        return classical_chebyshev2(m, x)
    raise ValueError(f"family {spec.name!r} has no classical counterpart")
