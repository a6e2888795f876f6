"""Exact lower-triangular matrix kernel.

All scalars are :class:`fractions.Fraction`.  Matrices are stored densely as
``(m+1) x (m+1)`` tuples of rows, indexed from zero, and are immutable.
"""

from fractions import Fraction
from math import comb, factorial
from numbers import Rational

from .errors import OrderMismatch, SingularMatrix, ZeroScale

Rat = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def as_rat(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: every quantity in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE_ "):
            raise ValueError(f"not a rational of the form p/q: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def rat_str(value):
    """Canonical ``"p/q"`` (or ``"p"``) form; the sign sits on the numerator."""
    return str(as_rat(value))


def rat_vector(values):
    return tuple(as_rat(v) for v in values)


class LTMatrix:
    """Immutable dense lower-triangular matrix over the rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(as_rat(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("order must be at least 1")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            if any(row[j] for j in range(i + 1, n)):
                raise ValueError(f"row {i} has a nonzero entry above the diagonal")
        self._rows = rows

    @classmethod
    def _trusted(cls, rows):
        obj = cls.__new__(cls)
        obj._rows = rows
        return obj

    @classmethod
    def from_function(cls, order, entry):
        """Build the matrix whose (i, j) entry is ``entry(i, j)`` for i >= j."""
        rows = tuple(
            tuple(as_rat(entry(i, j)) if j <= i else ZERO for j in range(order))
            for i in range(order)
        )
        return cls._trusted(rows)

    @classmethod
    def from_triangle(cls, triangle):
        """Build from ragged rows, row i holding entries 0..i."""
        triangle = [list(r) for r in triangle]
        n = len(triangle)
        for i, r in enumerate(triangle):
            if len(r) != i + 1:
                raise ValueError(f"triangular row {i} must have {i + 1} entries")
        return cls.from_function(n, lambda i, j: triangle[i][j])

    @classmethod
    def identity(cls, order):
        return cls.from_function(order, lambda i, j: ONE if i == j else ZERO)

    @classmethod
    def zero(cls, order):
        return cls.from_function(order, lambda i, j: ZERO)

    @classmethod
    def diagonal(cls, values):
        values = rat_vector(values)
        return cls.from_function(len(values), lambda i, j: values[i] if i == j else ZERO)

    @property
    def order(self):
        return len(self._rows)

    @property
    def m(self):
        """Degree bound: order - 1."""
        return len(self._rows) - 1

    @property
    def rows(self):
        return self._rows

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def diagonal_entries(self):
        return tuple(self._rows[i][i] for i in range(self.order))

    def triangle(self):
        """Ragged rows; row n lists the entries 0..n."""
        return tuple(r[: i + 1] for i, r in enumerate(self._rows))

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, LTMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("(" + ", ".join(rat_str(v) for v in r) + ")" for r in self.triangle())
        return f"LTMatrix[{body}]"

    def _check(self, other):
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, LTMatrix):
            return NotImplemented
        self._check(other)
        return LTMatrix._trusted(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __sub__(self, other):
        if not isinstance(other, LTMatrix):
            return NotImplemented
        self._check(other)
        return LTMatrix._trusted(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k):
        k = as_rat(k)
        return LTMatrix._trusted(tuple(tuple(k * a for a in r) for r in self._rows))

    def __mul__(self, k):
        if isinstance(k, LTMatrix):
            return NotImplemented
        return self.scale(k)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, LTMatrix):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def __pow__(self, s):
        return mat_pow(self, s)


def mat_mul(a, b):
    a._check(b)
    n = a.order
    br = b.rows
    rows = []
    for ri in a.rows:
        acc = [ZERO] * n
        for k, aik in enumerate(ri):
            if not aik:
                continue
            bk = br[k]
            # row k of b is zero beyond column k
            for j in range(k + 1):
                if bk[j]:
                    acc[j] += aik * bk[j]
        rows.append(tuple(acc))
    return LTMatrix._trusted(tuple(rows))


def mat_vec(a, v):
    v = rat_vector(v)
    if len(v) != a.order:
        raise OrderMismatch(f"vector length {len(v)} does not match order {a.order}")
    return tuple(sum((r[k] * v[k] for k in range(i + 1)), ZERO) for i, r in enumerate(a.rows))


def mat_pow(a, s):
    if s < 0:
        raise ValueError("exponent must be nonnegative")
    result = LTMatrix.identity(a.order)
    for _ in range(s):
        result = mat_mul(result, a)
    return result


def lt_inverse(a):
    """Exact inverse of a lower-triangular matrix by forward substitution.

    Raises :class:`SingularMatrix` naming the first zero diagonal entry.
    """
    n = a.order
    rows = a.rows
    for i in range(n):
        if rows[i][i] == 0:
            raise SingularMatrix(i)
    inv = [[ZERO] * n for _ in range(n)]
    # column j of the inverse solves A x = e_j
    for j in range(n):
        inv[j][j] = 1 / rows[j][j]
        for i in range(j + 1, n):
            acc = sum((rows[i][k] * inv[k][j] for k in range(j, i)), ZERO)
            inv[i][j] = -acc / rows[i][i]
    return LTMatrix._trusted(tuple(tuple(r) for r in inv))


def creation_matrix(m):
    """The creation matrix H: entry (i, i-1) = i, zero elsewhere."""
    if m < 0:
        raise ValueError("degree bound m must be >= 0")
    return LTMatrix.from_function(m + 1, lambda i, j: i if i == j + 1 else 0)


def pascal_generalized(m, x):
    """P(x) = exp(xH), with entries C(i, j) x^(i-j)."""
    if m < 0:
        raise ValueError("degree bound m must be >= 0")
    x = as_rat(x)
    powers = [ONE]
    for _ in range(m):
        powers.append(powers[-1] * x)
    return LTMatrix.from_function(m + 1, lambda i, j: comb(i, j) * powers[i - j])


def pascal(m):
    return pascal_generalized(m, 1)


def diag_geometric(m, l):
    """D[l] = diag(l^0, l^1, ..., l^m)."""
    l = as_rat(l)
    if l == 0:
        raise ZeroScale("D[l] requires l != 0")
    return LTMatrix.diagonal([l**k for k in range(m + 1)])


def diag_factorial(m):
    return LTMatrix.diagonal([factorial(k) for k in range(m + 1)])


def matrix_power_series(weights, m):
    """Sum of ``weights[n] * H**n`` for n = 0..m, by repeated multiplication.

    Missing trailing weights are taken as zero; weights beyond index m are
    ignored since H**(m+1) vanishes.
    """
    weights = rat_vector(weights)
    h = creation_matrix(m)
    total = LTMatrix.zero(m + 1)
    power = LTMatrix.identity(m + 1)
    for n in range(m + 1):
        if n < len(weights) and weights[n]:
            total = total + power.scale(weights[n])
        if n < m:
            power = mat_mul(power, h)
    return total


def series_of_H(coeffs, m, method="sum"):
    """f(H) for the Taylor data ``f(t) = sum c_n t^n / n!``.

    ``method="sum"`` accumulates ``c_n H^n / n!`` term by term;
    ``method="closed"`` fills entry (i, j) with ``C(i, j) c_(i-j)`` directly.
    Both give the same matrix.
    """
    coeffs = rat_vector(coeffs)
    if len(coeffs) != m + 1:
        raise OrderMismatch(f"expected {m + 1} coefficients, got {len(coeffs)}")
    if method == "closed":
        return LTMatrix.from_function(m + 1, lambda i, j: comb(i, j) * coeffs[i - j])
    if method == "sum":
        return matrix_power_series([c / factorial(n) for n, c in enumerate(coeffs)], m)
    raise ValueError(f"unknown method {method!r}")


def monomial_vector(m, x):
    """xi(x) = (1, x, ..., x^m); entry 0 is 1 even at x = 0."""
    x = as_rat(x)
    out = [ONE]
    for _ in range(m):
        out.append(out[-1] * x)
    return tuple(out)
