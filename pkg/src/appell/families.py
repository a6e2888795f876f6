"""Transfer matrices M = f(H) for the supported polynomial families.

Each builder reproduces the matrix construction literally (inverses of
truncated series in H, powers of the Pascal matrix) rather than plugging
in known coefficient tables.  The Taylor data ``c_n = p_n(0)`` is then read
off the first column.
"""

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .errors import NotInvertible
from .matrix import (
    ONE,
    ZERO,
    LTMatrix,
    as_rat,
    creation_matrix,
    lt_inverse,
    mat_mul,
    matrix_power_series,
    pascal,
    rat_vector,
    series_of_H,
)


class Kind(str, enum.Enum):
    MONOMIAL = "monomial"
    BERNOULLI = "bernoulli"
    EULER = "euler"
    HERMITE_MONIC = "hermite-monic"
    LAGUERRE_MODIFIED = "laguerre-modified"
    LEGENDRE_MODIFIED = "legendre-modified"
    CHEBYSHEV1_MODIFIED = "chebyshev1-modified"
    CHEBYSHEV2_MODIFIED = "chebyshev2-modified"
    GENOCCHI = "genocchi"
    BERNOULLI_2IT = "bernoulli-2it"
    EULER_2IT = "euler-2it"
    BERNOULLI_EULER = "bernoulli-euler"
    GENERALIZED_EULER = "generalized-euler"
    CUSTOM = "custom"


FAMILY_NAMES = tuple(k.value for k in Kind)

EVEN_KINDS = frozenset(
    {Kind.HERMITE_MONIC, Kind.LEGENDRE_MODIFIED, Kind.CHEBYSHEV1_MODIFIED, Kind.CHEBYSHEV2_MODIFIED}
)


@dataclass(frozen=True)
class FamilySpec:
    """A family identifier plus exactly the parameters its kind needs.

    ``alpha`` belongs to ``laguerre-modified``, ``gamma_bar`` to
    ``generalized-euler`` and ``custom_coeffs`` (the values c_0, c_1, ...)
    to ``custom``.  The Laguerre condition alpha > -1 only matters for
    orthogonality and is not enforced.
    """

    kind: Kind
    alpha: Fraction = None
    gamma_bar: Fraction = None
    custom_coeffs: tuple = None

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        for name, owner in (
            ("alpha", Kind.LAGUERRE_MODIFIED),
            ("gamma_bar", Kind.GENERALIZED_EULER),
            ("custom_coeffs", Kind.CUSTOM),
        ):
            value = getattr(self, name)
            if (value is None) == (kind is owner):
                if kind is owner:
                    raise ValueError(f"family {kind.value!r} requires {name}")
                raise ValueError(f"family {kind.value!r} does not take {name}")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", as_rat(self.alpha))
        if self.gamma_bar is not None:
            object.__setattr__(self, "gamma_bar", as_rat(self.gamma_bar))
        if self.custom_coeffs is not None:
            coeffs = rat_vector(self.custom_coeffs)
            if not coeffs or coeffs[0] == 0:
                raise ValueError("custom family needs c_0 != 0")
            object.__setattr__(self, "custom_coeffs", coeffs)

    @classmethod
    def named(cls, name, *, alpha=None, gamma_bar=None, coeffs=None):
        return cls(Kind(name), alpha=alpha, gamma_bar=gamma_bar, custom_coeffs=coeffs)

    @property
    def name(self):
        return self.kind.value

    @property
    def is_even(self):
        return self.kind in EVEN_KINDS

    def params(self):
        """Parameters as a dict of canonical strings (for serialization)."""
        out = {}
        if self.alpha is not None:
            out["alpha"] = str(self.alpha)
        if self.gamma_bar is not None:
            out["gamma_bar"] = str(self.gamma_bar)
        if self.custom_coeffs is not None:
            out["coeffs"] = [str(c) for c in self.custom_coeffs]
        return out


@dataclass(frozen=True)
class TransferMatrix:
    """The matrix M with row n holding the coefficients of p_n.

    ``spec`` is ``None`` for matrices obtained by combining or composing
    other families.
    """

    spec: FamilySpec
    m: int
    matrix: LTMatrix
    coeffs: tuple = field(default=None)

    def __post_init__(self):
        if self.matrix.order != self.m + 1:
            raise ValueError("matrix order does not match m")
        if self.coeffs is None:
            object.__setattr__(self, "coeffs", self.matrix.column(0))

    @property
    def c0(self):
        return self.coeffs[0]

    @property
    def is_singular(self):
        return self.coeffs[0] == 0


def generalized_binomial(alpha, n):
    """alpha (alpha-1) ... (alpha-n+1) / n!, exact for rational alpha."""
    if n < 0:
        raise ValueError("n must be >= 0")
    alpha = as_rat(alpha)
    out = ONE
    for k in range(n):
        out *= alpha - k
    return out / factorial(n)


def _bernoulli_denominator(m):
    # E_{1,2}(H) = sum H^n / (n+1)!
    return matrix_power_series([Fraction(1, factorial(n + 1)) for n in range(m + 1)], m)


def _pascal_plus_identity(m):
    return pascal(m) + LTMatrix.identity(m + 1)


def _even_series(m, weight):
    # sum_k weight(k) H^(2k), truncated where H^(2k) vanishes
    weights = [ZERO] * (m + 1)
    for k in range(m // 2 + 1):
        weights[2 * k] = as_rat(weight(k))
    return matrix_power_series(weights, m)


def _build(spec, m):
    kind = spec.kind
    order = m + 1
    if kind is Kind.MONOMIAL:
        return LTMatrix.identity(order)
    if kind is Kind.BERNOULLI:
        return lt_inverse(_bernoulli_denominator(m))
    if kind is Kind.EULER:
        return lt_inverse(_pascal_plus_identity(m)).scale(2)
    if kind is Kind.HERMITE_MONIC:
        return _even_series(m, lambda k: Fraction((-1) ** k, 4**k * factorial(k)))
    if kind is Kind.LAGUERRE_MODIFIED:
        a = spec.alpha
        return matrix_power_series([generalized_binomial(a, n) * (-1) ** n for n in range(order)], m)
    if kind is Kind.LEGENDRE_MODIFIED:
        return _even_series(m, lambda k: Fraction((-1) ** k, 4**k * factorial(k) ** 2))
    if kind is Kind.CHEBYSHEV1_MODIFIED:
        return _even_series(m, lambda k: Fraction((-1) ** k, factorial(2 * k)))
    if kind is Kind.CHEBYSHEV2_MODIFIED:
        return _even_series(m, lambda k: Fraction((-1) ** k, factorial(2 * k + 1)))
    if kind is Kind.GENOCCHI:
        h = creation_matrix(m)
        return mat_mul(h, lt_inverse(_pascal_plus_identity(m))).scale(2)
    if kind is Kind.BERNOULLI_2IT:
        e12 = _bernoulli_denominator(m)
        return lt_inverse(mat_mul(e12, e12))
    if kind is Kind.EULER_2IT:
        pi = _pascal_plus_identity(m)
        return lt_inverse(mat_mul(pi, pi)).scale(4)
    if kind is Kind.BERNOULLI_EULER:
        return lt_inverse(mat_mul(_pascal_plus_identity(m), _bernoulli_denominator(m))).scale(2)
    if kind is Kind.GENERALIZED_EULER:
        g = spec.gamma_bar
        return lt_inverse(LTMatrix.identity(order).scale(1 - g) + pascal(m).scale(g))
    if kind is Kind.CUSTOM:
        coeffs = spec.custom_coeffs
        if len(coeffs) < order:
            raise ValueError(f"custom family supplies {len(coeffs)} coefficients, need {order}")
        return series_of_H(coeffs[:order], m)
    raise AssertionError(f"unhandled family kind {kind}")


@functools.lru_cache(maxsize=1024)
def transfer_matrix(spec, m):
    """Build the transfer matrix of ``spec`` with degree bound ``m``.

    Results are immutable and cached per (spec, m).
    """
    if m < 0:
        raise ValueError("degree bound m must be >= 0")
    return TransferMatrix(spec, m, _build(spec, m))


def taylor_coefficients(spec, m):
    """c_0..c_m, i.e. p_n(0), read from the first column of M."""
    return transfer_matrix(spec, m).coeffs


def gamma_from_coeffs(coeffs):
    """Taylor data of 1/f from that of f (coefficients of M^{-1})."""
    coeffs = rat_vector(coeffs)
    c0 = coeffs[0]
    if c0 == 0:
        raise NotInvertible()
    gamma = [1 / c0]
    for k in range(1, len(coeffs)):
        acc = sum((comb(k, s) * coeffs[k - s] * gamma[s] for s in range(k)), ZERO)
        gamma.append(-acc / c0)
    return tuple(gamma)


def gamma_coefficients(spec, m):
    """gamma_0..gamma_m with series_of_H(gamma) equal to the inverse of M.

    Raises :class:`NotInvertible` when c_0 = 0 (Genocchi).
    """
    return gamma_from_coeffs(taylor_coefficients(spec, m))


def default_custom(length):
    """A fixed nonsymmetric coefficient vector, c_n = (-1)^n (n+1)/(n+2)."""
    return tuple(Fraction((-1) ** n * (n + 1), n + 2) for n in range(length))


DEFAULT_CUSTOM = default_custom(33)


def all_specs(alpha=Fraction(1, 2), gamma_bar=Fraction(1, 3), custom=DEFAULT_CUSTOM):
    """One spec per kind, with representative parameters.

    ``custom`` must be at least m+1 long for whatever m the caller uses.
    """
    out = []
    for kind in Kind:
        if kind is Kind.LAGUERRE_MODIFIED:
            out.append(FamilySpec(kind, alpha=alpha))
        elif kind is Kind.GENERALIZED_EULER:
            out.append(FamilySpec(kind, gamma_bar=gamma_bar))
        elif kind is Kind.CUSTOM:
            out.append(FamilySpec(kind, custom_coeffs=custom))
        else:
            out.append(FamilySpec(kind))
    return out
