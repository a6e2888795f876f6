"""Independent reference implementations used only for cross-checking.

Nothing here imports the matrix machinery: values come from classical
recurrences and truncated power-series arithmetic, so agreement with the
transfer-matrix route is a genuine two-route check.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial


def bernoulli_numbers(m):
    """B_0..B_m from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1 (so B_1 = -1/2)."""
    b = [Fraction(1)]
    for n in range(1, m + 1):
        s = sum(comb(n + 1, k) * b[k] for k in range(n))
        b.append(-s / (n + 1))
    return tuple(b)


def genocchi_numbers(m):
    """G_n = 2 (1 - 2^n) B_n."""
    return tuple(2 * (1 - 2**n) * bn for n, bn in enumerate(bernoulli_numbers(m)))


def _series_divide(num, den, terms):
    # ordinary power series quotient num/den, den[0] != 0
    q = []
    for n in range(terms):
        acc = num[n] - sum(q[k] * den[n - k] for k in range(n))
        q.append(acc / den[0])
    return q


def euler_poly_values(m, x):
    """E_0(x)..E_m(x) from 2 e^{xt} / (e^t + 1) by series division."""
    x = Fraction(x)
    num = [2 * x**n / factorial(n) for n in range(m + 1)]
    den = [Fraction(2)] + [Fraction(1, factorial(n)) for n in range(1, m + 1)]
    q = _series_divide(num, den, m + 1)
    return tuple(qn * factorial(n) for n, qn in enumerate(q))


def hermite_monic_inverse_gamma(m):
    """Taylor data (coefficients of t^n/n!) of e^{t^2/4}, computed by series division."""
    # e^{-t^2/4} as an ordinary series, then 1/that
    den = [Fraction(0)] * (m + 1)
    for k in range(m // 2 + 1):
        den[2 * k] = Fraction((-1) ** k, 4**k * factorial(k))
    num = [Fraction(1)] + [Fraction(0)] * m
    q = _series_divide(num, den, m + 1)
    return tuple(qn * factorial(n) for n, qn in enumerate(q))


def three_term(family, m, x, alpha=None):
    """Classical orthogonal-polynomial values by their three-term recurrences.

    ``family`` is one of ``hermite``, ``legendre``, ``chebyshev1``,
    ``chebyshev2`` or ``laguerre`` (which needs ``alpha``).
    """
    x = Fraction(x)
    if family == "hermite":
        seeds = (Fraction(1), 2 * x)

        def step(n, a, b):  # n is the index of b
            return 2 * x * b - 2 * n * a

    elif family == "legendre":
        seeds = (Fraction(1), x)

        def step(n, a, b):
            return ((2 * n + 1) * x * b - n * a) / (n + 1)

    elif family == "chebyshev1":
        seeds = (Fraction(1), x)

        def step(n, a, b):
            return 2 * x * b - a

    elif family == "chebyshev2":
        seeds = (Fraction(1), 2 * x)

        def step(n, a, b):
            return 2 * x * b - a

    elif family == "laguerre":
        if alpha is None:
            raise ValueError("laguerre needs alpha")
        al = Fraction(alpha)
        seeds = (Fraction(1), 1 + al - x)

        def step(n, a, b):
            return ((2 * n + 1 + al - x) * b - (n + al) * a) / (n + 1)

    else:
        raise ValueError(f"unknown family {family!r}")

    out = list(seeds[: m + 1])
    for n in range(1, m):
        out.append(step(n, out[n - 1], out[n]))
    return tuple(out)


@dataclass
class OracleReport:
    """Outcome of comparing one route against an oracle at a set of points."""

    family: str
    m: int
    checked_points: list = field(default_factory=list)
    passed: bool = True
    mismatch: tuple = None  # (x, index, expected, got) of the first failure

    def record(self, x, expected, got):
        self.checked_points.append(x)
        if self.passed and tuple(expected) != tuple(got):
            for i, (e, g) in enumerate(zip(expected, got)):
                if e != g:
                    self.mismatch = (x, i, e, g)
                    break
            else:
                self.mismatch = (x, None, expected, got)
            self.passed = False
        return self.passed

    def __str__(self):
        if self.passed:
            return f"{self.family} m={self.m}: pass ({len(self.checked_points)} points)"
        x, i, e, g = self.mismatch
        return f"{self.family} m={self.m}: FAIL at x={x}, index {i}: expected {e}, got {g}"
