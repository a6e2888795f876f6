"""Exact identity suite behind ``appell verify``.

Every check compares two independently computed exact quantities; there is
no tolerance anywhere.  Random sample points are drawn from a seeded
generator, so a run is reproducible byte for byte.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import oracles
from .errors import IdentityViolation, NotInvertible, SingularMatrix
from .families import (
    FamilySpec,
    Kind,
    all_specs,
    default_custom,
    gamma_coefficients,
    transfer_matrix,
)
from .matrix import (
    LTMatrix,
    creation_matrix,
    diag_geometric,
    lt_inverse,
    mat_mul,
    mat_pow,
    mat_vec,
    pascal_generalized,
    series_of_H,
)
from .ops import (
    appell_vector,
    classical_values,
    compose,
    derivative,
    evaluate,
    forward_difference,
    laguerre_ladder,
    odd_coeffs_vanish,
    recurrence_eval,
    scale_argument,
    symmetry_holds,
    translate,
)

PASS, FAIL, NA = "pass", "FAIL", "n/a"

# h with p(h - x) = D[-1] p(x); follows from f(-t) = e^{ht} f(t)
SYMMETRY_POINT = {
    Kind.MONOMIAL: 0,
    Kind.BERNOULLI: 1,
    Kind.EULER: 1,
    Kind.BERNOULLI_2IT: 2,
    Kind.EULER_2IT: 2,
    Kind.BERNOULLI_EULER: 2,
    Kind.HERMITE_MONIC: 0,
    Kind.LEGENDRE_MODIFIED: 0,
    Kind.CHEBYSHEV1_MODIFIED: 0,
    Kind.CHEBYSHEV2_MODIFIED: 0,
}


def random_rational(rng, admissible=False):
    """Numerator in [-99, 99], denominator in [1, 20]; |x| < 1 if ``admissible``."""
    den = rng.randint(1, 20)
    if admissible:
        return Fraction(rng.randint(-den + 1, den - 1), den)
    return Fraction(rng.randint(-99, 99), den)


def random_nonzero(rng):
    while True:
        x = random_rational(rng)
        if x:
            return x


@dataclass
class Result:
    identity: str
    family: str
    status: str
    detail: str = ""

    def line(self):
        tail = f": {self.detail}" if self.detail else ""
        return f"[{self.status:>4}] {self.identity} ({self.family}){tail}"


class Failure(Exception):
    pass


def _expect(cond, message):
    if not cond:
        raise Failure(message)


class Verifier:
    def __init__(self, m_max=16, seed=42, samples=50):
        self.m_max = m_max
        self.seed = seed
        self.samples = samples
        self.results = []

    def rng(self, *tag):
        # one independent stream per (check, family) keeps output order-insensitive
        return random.Random(f"{self.seed}:" + ":".join(map(str, tag)))

    def run(self, identity, family, fn):
        try:
            outcome = fn()
        except (Failure, IdentityViolation) as exc:
            self.results.append(Result(identity, family, FAIL, str(exc)))
            return
        if outcome is NA:
            self.results.append(Result(identity, family, NA, "transfer matrix singular"))
        else:
            self.results.append(Result(identity, family, PASS, outcome or ""))

    @property
    def ok(self):
        return all(r.status != FAIL for r in self.results)

    # -- kernel ---------------------------------------------------------

    def kernel(self):
        top = self.m_max

        def nilpotent():
            for m in range(top + 1):
                h = creation_matrix(m)
                zero = LTMatrix.zero(m + 1)
                for s in (m + 1, m + 2):
                    _expect(mat_pow(h, s) == zero, f"H^{s} != 0 at m={m}")

        def group_law():
            rng = self.rng("group")
            for _ in range(self.samples):
                x, y = random_rational(rng), random_rational(rng)
                a = mat_mul(pascal_generalized(top, x), pascal_generalized(top, y))
                _expect(a == pascal_generalized(top, x + y), f"P({x})P({y}) != P({x + y})")

        def exponential():
            rng = self.rng("exp")
            for _ in range(self.samples):
                x = random_rational(rng)
                c = [x**n for n in range(top + 1)]
                _expect(series_of_H(c, top) == pascal_generalized(top, x), f"exp(xH) != P(x) at x={x}")

        def conjugation():
            rng = self.rng("conj")
            d = diag_geometric(top, -1)
            for _ in range(self.samples):
                x = random_rational(rng)
                _expect(
                    pascal_generalized(top, -x) == mat_mul(mat_mul(d, pascal_generalized(top, x)), d),
                    f"P(-x) != D[-1]P(x)D[-1] at x={x}",
                )

        def inverse_round_trip():
            rng = self.rng("inv")
            n = top + 1
            for _ in range(10):
                a = LTMatrix.from_function(
                    n, lambda i, j: 1 if i == j else random_rational(rng)
                )
                b = lt_inverse(a)
                eye = LTMatrix.identity(n)
                _expect(mat_mul(a, b) == eye and mat_mul(b, a) == eye, "A A^-1 != I")

        self.run("creation matrix nilpotent: H^(m+1) = 0", "kernel", nilpotent)
        self.run("Pascal group law: P(x)P(y) = P(x+y)", "kernel", group_law)
        self.run("exponential: exp(xH) = P(x)", "kernel", exponential)
        self.run("reflection: P(-x) = D[-1]P(x)D[-1]", "kernel", conjugation)
        self.run("triangular inverse round trip", "kernel", inverse_round_trip)

    # -- per family -----------------------------------------------------

    def family(self, spec):
        name = spec.name
        top = self.m_max
        mid = min(top, 12)
        singular = transfer_matrix(spec, 0).is_singular

        def closed_form():
            for m in range(top + 1):
                tm = transfer_matrix(spec, m)
                by_sum = series_of_H(tm.coeffs, m, method="sum")
                by_closed = series_of_H(tm.coeffs, m, method="closed")
                _expect(by_sum == by_closed, f"sum and closed form differ at m={m}")
                _expect(tm.matrix == by_closed, f"M != C(i,j) c_(i-j) at m={m}")

        def ode():
            for m in range(top + 1):
                av = appell_vector(spec, m)
                _expect(
                    derivative(av) == mat_mul(creation_matrix(m), av.matrix),
                    f"p' != H p at m={m}",
                )

        def commutes():
            rng = self.rng("commute", name)
            av = appell_vector(spec, mid)
            h = creation_matrix(mid)
            _expect(mat_mul(h, av.matrix) == mat_mul(av.matrix, h), "M H != H M")
            for _ in range(5):
                p = pascal_generalized(mid, random_rational(rng))
                _expect(mat_mul(p, av.matrix) == mat_mul(av.matrix, p), "M P(x) != P(x) M")

        def translation():
            rng = self.rng("translate", name)
            av = appell_vector(spec, mid)
            for _ in range(self.samples):
                x, y = random_rational(rng), random_rational(rng)
                _expect(translate(av, y, x) == evaluate(av, x + y), f"p(x+y) != P(y)p(x) at x={x}, y={y}")
                diff = tuple(a - b for a, b in zip(evaluate(av, x + 1), evaluate(av, x)))
                _expect(forward_difference(av, x) == diff, f"forward difference at x={x}")

        def multiplication():
            rng = self.rng("scale", name)
            av = appell_vector(spec, mid)
            for _ in range(self.samples):
                a, x = random_nonzero(rng), random_rational(rng)
                direct = scale_argument(av, a, x, "direct")
                _expect(scale_argument(av, a, x, "pascal") == direct, f"P((a-1)x)p(x) at a={a}, x={x}")
                _expect(scale_argument(av, a, x, "diagonal") == direct, f"M D[a] xi(x) at a={a}, x={x}")

        def inverse():
            if singular:
                try:
                    lt_inverse(transfer_matrix(spec, top).matrix)
                except SingularMatrix:
                    return NA
                raise Failure("singular family inverted without error")
            for m in range(top + 1):
                g = gamma_coefficients(spec, m)
                m_inv = series_of_H(g, m)
                _expect(mat_mul(m_inv, transfer_matrix(spec, m).matrix) == LTMatrix.identity(m + 1),
                        f"series_of_H(gamma) M != I at m={m}")
            return None

        def recurrence():
            if singular:
                try:
                    recurrence_eval(spec, top, 0)
                except NotInvertible:
                    return NA
                raise Failure("recurrence ran on a singular family")
            rng = self.rng("recurrence", name)
            av = appell_vector(spec, top)
            for _ in range(20):
                x = random_rational(rng)
                _expect(recurrence_eval(spec, top, x) == evaluate(av, x), f"recurrence at x={x}")
            return None

        def parity():
            vanish = odd_coeffs_vanish(spec, top)
            _expect(vanish or not spec.is_even, "odd coefficients of an even family do not vanish")
            if vanish:
                rng = self.rng("reflect", name)
                av = appell_vector(spec, top)
                for _ in range(20):
                    x = random_rational(rng)
                    flipped = mat_vec(diag_geometric(top, -1), evaluate(av, x))
                    _expect(evaluate(av, -x) == flipped, f"p(-x) != D[-1]p(x) at x={x}")

        def symmetry():
            rng = self.rng("symmetry", name)
            av = appell_vector(spec, mid)
            xs = [random_rational(rng) for _ in range(20)]
            if spec.kind is Kind.MONOMIAL and mid >= 1:
                _expect(not symmetry_holds(av, 1, xs), "monomials symmetric about h=1")
            h = SYMMETRY_POINT[spec.kind]
            _expect(symmetry_holds(av, h, xs), f"p(h) != D[-1]p(0) at h={h}")
            return f"h={h}"

        self.run("closed form M = f(H), entry C(i,j) c_(i-j)", name, closed_form)
        self.run("Appell ODE: p'(x) = H p(x)", name, ode)
        self.run("M commutes with H and P(x)", name, commutes)
        self.run("translation p(x+y) = P(y) p(x), forward difference", name, translation)
        self.run("multiplication theorem, three routes", name, multiplication)
        self.run("inverse transfer matrix from gamma", name, inverse)
        self.run("general recurrence = matrix route", name, recurrence)
        self.run("odd c_n and odd gamma_n vanish together, reflection", name, parity)
        if spec.kind in SYMMETRY_POINT:
            self.run("symmetry p(h-x) = D[-1] p(x)", name, symmetry)
        self.oracle_checks(spec)

    # -- oracle comparisons and family-specific identities ---------------

    def oracle_checks(self, spec):
        kind, name, top = spec.kind, spec.name, self.m_max

        def coeffs_equal(expected):
            def check():
                got = transfer_matrix(spec, top).coeffs
                _expect(got == tuple(expected), f"coefficients differ from oracle: {got} vs {expected}")
            return check

        def gamma_equal(expected):
            def check():
                got = gamma_coefficients(spec, top)
                _expect(got == tuple(expected), "gamma differs from closed form")
            return check

        if kind is Kind.BERNOULLI:
            self.run("oracle: Bernoulli numbers", name, coeffs_equal(oracles.bernoulli_numbers(top)))
            self.run("gamma_k = 1/(k+1)", name, gamma_equal(Fraction(1, k + 1) for k in range(top + 1)))
        elif kind is Kind.GENOCCHI:
            self.run("oracle: Genocchi numbers", name, coeffs_equal(oracles.genocchi_numbers(top)))
        elif kind is Kind.EULER:
            def euler_values():
                rng = self.rng("euler-oracle")
                av = appell_vector(spec, top)
                for _ in range(20):
                    x = random_rational(rng)
                    _expect(evaluate(av, x) == oracles.euler_poly_values(top, x), f"E_n({x})")
            self.run("oracle: Euler polynomials by series division", name, euler_values)
            self.run("gamma = (1, 1/2, 1/2, ...)", name,
                     gamma_equal([Fraction(1)] + [Fraction(1, 2)] * top))
        elif kind is Kind.HERMITE_MONIC:
            self.run("oracle: gamma = Taylor data of exp(t^2/4)", name,
                     gamma_equal(oracles.hermite_monic_inverse_gamma(top)))
        elif kind is Kind.GENERALIZED_EULER:
            g = spec.gamma_bar
            self.run("gamma = (1, gbar, gbar, ...)", name, gamma_equal([Fraction(1)] + [g] * top))

            def half():
                for m in range(top + 1):
                    ge = transfer_matrix(FamilySpec(Kind.GENERALIZED_EULER, gamma_bar=Fraction(1, 2)), m)
                    _expect(ge.matrix == transfer_matrix(FamilySpec(Kind.EULER), m).matrix, f"m={m}")
            self.run("gbar = 1/2 gives Euler", name, half)
        elif kind is Kind.CHEBYSHEV2_MODIFIED:
            def sine():
                for m in range(top + 1):
                    sin_c = [0 if n % 2 == 0 else (-1) ** (n // 2) for n in range(m + 1)]
                    lhs = mat_mul(creation_matrix(m), transfer_matrix(spec, m).matrix)
                    _expect(lhs == series_of_H(sin_c, m), f"H M_U != sin H at m={m}")
            self.run("H M_U = sin H", name, sine)
        elif kind in (Kind.BERNOULLI_2IT, Kind.EULER_2IT, Kind.BERNOULLI_EULER):
            parts = {
                Kind.BERNOULLI_2IT: (Kind.BERNOULLI, Kind.BERNOULLI),
                Kind.EULER_2IT: (Kind.EULER, Kind.EULER),
                Kind.BERNOULLI_EULER: (Kind.BERNOULLI, Kind.EULER),
            }[kind]

            def product():
                for m in range(top + 1):
                    a, b = (appell_vector(FamilySpec(k), m) for k in parts)
                    target = transfer_matrix(spec, m).matrix
                    _expect(compose(a, b).matrix == target, f"composition at m={m}")
                    _expect(compose(b, a).matrix == target, f"reversed composition at m={m}")
            self.run("composition of constituent families", name, product)

        if kind in (Kind.HERMITE_MONIC, Kind.LAGUERRE_MODIFIED, Kind.LEGENDRE_MODIFIED,
                    Kind.CHEBYSHEV1_MODIFIED, Kind.CHEBYSHEV2_MODIFIED):
            classical = {
                Kind.HERMITE_MONIC: "hermite",
                Kind.LAGUERRE_MODIFIED: "laguerre",
                Kind.LEGENDRE_MODIFIED: "legendre",
                Kind.CHEBYSHEV1_MODIFIED: "chebyshev1",
                Kind.CHEBYSHEV2_MODIFIED: "chebyshev2",
            }[kind]
            admissible = kind not in (Kind.HERMITE_MONIC, Kind.LAGUERRE_MODIFIED)

            def reconstruct():
                rng = self.rng("classical", name)
                report = oracles.OracleReport(classical, top)
                for _ in range(20):
                    x = random_rational(rng, admissible=admissible)
                    expected = oracles.three_term(classical, top, x, alpha=spec.alpha)
                    report.record(x, expected, classical_values(spec, top, x))
                    if kind is Kind.LAGUERRE_MODIFIED:
                        lg = classical_values(spec, top, x)
                        _expect(laguerre_ladder(top, spec.alpha, x) == mat_vec(pascal_generalized(top, -1), lg),
                                f"ladder L != P(-1) Lg at x={x}")
                _expect(report.passed, str(report))
            self.run(f"oracle: classical {classical} by three-term recurrence", name, reconstruct)


def run_verification(m_max=16, seed=42, families=None, samples=50):
    """Run the full suite; returns the :class:`Verifier` holding the results.

    ``families`` is a list of :class:`FamilySpec`; by default one per kind
    (Laguerre with alpha in {0, 1/2, -1/2, 3}).
    """
    if families is None:
        custom = default_custom(max(33, m_max + 1))
        families = [s for s in all_specs(custom=custom) if s.kind is not Kind.LAGUERRE_MODIFIED]
        families[4:4] = [FamilySpec(Kind.LAGUERRE_MODIFIED, alpha=a)
                         for a in (0, Fraction(1, 2), Fraction(-1, 2), 3)]
    v = Verifier(m_max=m_max, seed=seed, samples=samples)
    v.kernel()
    for spec in families:
        label = spec.name
        if spec.alpha is not None:
            label += f"[alpha={spec.alpha}]"
        before = len(v.results)
        v.family(spec)
        for r in v.results[before:]:
            r.family = label
    return v
