import warnings
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from appell import oracles
from appell.errors import DomainError, NotInvertible, OrderMismatch, ZeroScale
from appell.families import FamilySpec, Kind, all_specs
from appell.matrix import creation_matrix, diag_geometric, mat_mul, mat_vec, pascal_generalized
from appell.ops import (
    DegenerateAppellWarning,
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
    laguerre_ladder,
    odd_coeffs_vanish,
    recurrence_eval,
    scale_argument,
    symmetry_holds,
    translate,
)

rationals = st.fractions(min_value=-99, max_value=99, max_denominator=20)
inside = st.fractions(min_value=-1, max_value=1, max_denominator=40).filter(lambda x: abs(x) < 1)

SPECS = all_specs()
IDS = [s.name for s in SPECS]

BERNOULLI = FamilySpec(Kind.BERNOULLI)
EULER = FamilySpec(Kind.EULER)
MONOMIAL = FamilySpec(Kind.MONOMIAL)
GENOCCHI = FamilySpec(Kind.GENOCCHI)


class TestAppellVector:
    def test_monomial_rows(self):
        av = appell_vector(MONOMIAL, 3)
        assert [av.coefficients(n) for n in range(4)] == [(1,), (0, 1), (0, 0, 1), (0, 0, 0, 1)]

    def test_bernoulli_row(self):
        assert appell_vector(BERNOULLI, 2).coefficients(2) == (F(1, 6), -1, 1)

    def test_genocchi_degree_deficiency(self):
        av = appell_vector(GENOCCHI, 2)
        assert av.coefficients(2) == (-1, 2, 0)
        assert av.degree(2) == 1
        assert av.is_degenerate

    @pytest.mark.parametrize("spec", SPECS, ids=IDS)
    def test_degree_n_with_leading_c0(self, spec):
        av = appell_vector(spec, 10)
        if av.is_degenerate:
            return
        for n in range(11):
            assert av.degree(n) == n
            assert av.coefficients(n)[n] == av.tm.c0


class TestEvaluate:
    @pytest.mark.parametrize("spec", SPECS, ids=IDS)
    def test_at_zero_gives_coeffs(self, spec):
        av = appell_vector(spec, 8)
        assert evaluate(av, 0) == av.tm.coeffs

    def test_monomial(self):
        assert evaluate(appell_vector(MONOMIAL, 3), 3) == (1, 3, 9, 27)

    def test_bernoulli_half(self):
        assert evaluate(appell_vector(BERNOULLI, 2), F(1, 2)) == (1, 0, F(-1, 12))


class TestDerivative:
    def test_monomial(self):
        assert derivative(appell_vector(MONOMIAL, 2)) == creation_matrix(2)

    def test_bernoulli(self):
        d = derivative(appell_vector(BERNOULLI, 2))
        m = appell_vector(BERNOULLI, 2).matrix
        assert d.row(2) == tuple(2 * v for v in m.row(1))

    def test_genocchi(self):
        d = derivative(appell_vector(GENOCCHI, 2))
        assert d.row(2) == (2, 0, 0)

    @pytest.mark.parametrize("spec", SPECS, ids=IDS)
    def test_equals_h_times_m(self, spec):
        for m in range(17):
            av = appell_vector(spec, m)
            assert derivative(av) == mat_mul(creation_matrix(m), av.matrix)


class TestTranslate:
    def test_zero_shift(self):
        av = appell_vector(EULER, 5)
        assert translate(av, 0, F(3, 4)) == evaluate(av, F(3, 4))

    def test_monomial(self):
        assert translate(appell_vector(MONOMIAL, 2), 1, 1) == (1, 2, 4)

    def test_bernoulli_at_one(self):
        av = appell_vector(BERNOULLI, 2)
        assert translate(av, 1, 0) == (1, F(1, 2), F(1, 6))
        assert translate(av, 1, 0) == mat_vec(diag_geometric(2, -1), evaluate(av, 0))

    @pytest.mark.parametrize("spec", SPECS, ids=IDS)
    @given(x=rationals, y=rationals)
    @settings(max_examples=15, deadline=None)
    def test_translation_property(self, spec, x, y):
        av = appell_vector(spec, 9)
        assert translate(av, y, x) == evaluate(av, x + y)

    @given(x=rationals, y=rationals)
    @settings(max_examples=20)
    def test_binomial_theorem_entrywise(self, x, y):
        from math import comb

        av = appell_vector(BERNOULLI, 7)
        px, pxy = evaluate(av, x), evaluate(av, x + y)
        for n in range(8):
            assert pxy[n] == sum(comb(n, k) * px[k] * y ** (n - k) for k in range(n + 1))


class TestForwardDifference:
    def test_monomial(self):
        assert forward_difference(appell_vector(MONOMIAL, 2), 0) == (0, 1, 1)

    def test_bernoulli(self):
        assert forward_difference(appell_vector(BERNOULLI, 2), 0) == (0, 1, 0)

    @given(x=rationals)
    @settings(max_examples=20)
    def test_bernoulli_difference_is_derivative_of_power(self, x):
        # B_n(x+1) - B_n(x) = n x^(n-1)
        fd = forward_difference(appell_vector(BERNOULLI, 8), x)
        assert fd == tuple(n * x ** (n - 1) if n else 0 for n in range(9))

    @pytest.mark.parametrize("spec", SPECS, ids=IDS)
    def test_routes_agree(self, spec):
        av = appell_vector(spec, 7)
        for x in (F(0), F(-3, 5), F(11, 2)):
            diff = tuple(a - b for a, b in zip(evaluate(av, x + 1), evaluate(av, x)))
            assert forward_difference(av, x) == diff


class TestScaleArgument:
    def test_a_one(self):
        av = appell_vector(EULER, 4)
        for route in ("pascal", "diagonal", "direct"):
            assert scale_argument(av, 1, F(2, 3), route) == evaluate(av, F(2, 3))

    def test_monomial(self):
        assert scale_argument(appell_vector(MONOMIAL, 2), 2, 1) == (1, 2, 4)

    def test_bernoulli(self):
        av = appell_vector(BERNOULLI, 2)
        for route in ("pascal", "diagonal", "direct"):
            assert scale_argument(av, 2, F(1, 2), route) == (1, F(1, 2), F(1, 6))

    def test_zero_scale_only_on_diagonal_route(self):
        av = appell_vector(BERNOULLI, 3)
        assert scale_argument(av, 0, 5, "pascal") == evaluate(av, 0)
        with pytest.raises(ZeroScale):
            scale_argument(av, 0, 5, "diagonal")

    @pytest.mark.parametrize("spec", SPECS, ids=IDS)
    @given(a=rationals.filter(bool), x=rationals)
    @settings(max_examples=10, deadline=None)
    def test_three_routes(self, spec, a, x):
        av = appell_vector(spec, 8)
        direct = scale_argument(av, a, x, "direct")
        assert scale_argument(av, a, x, "pascal") == direct
        assert scale_argument(av, a, x, "diagonal") == direct


class TestSymmetry:
    samples = [F(n, 7) for n in range(-10, 10)]

    @pytest.mark.parametrize("spec", [BERNOULLI, EULER], ids=["bernoulli", "euler"])
    def test_bernoulli_euler_h1(self, spec):
        assert symmetry_holds(appell_vector(spec, 12), 1, self.samples)

    def test_monomial_h1(self):
        assert not symmetry_holds(appell_vector(MONOMIAL, 3), 1, self.samples)

    @pytest.mark.parametrize("kind", [Kind.BERNOULLI_2IT, Kind.EULER_2IT, Kind.BERNOULLI_EULER])
    def test_products_symmetric_about_two(self, kind):
        assert symmetry_holds(appell_vector(FamilySpec(kind), 10), 2, self.samples)

    def test_genocchi_not_symmetric(self):
        assert not symmetry_holds(appell_vector(GENOCCHI, 6), 1, self.samples)


class TestOddCoefficients:
    @pytest.mark.parametrize(
        "kind", [Kind.HERMITE_MONIC, Kind.LEGENDRE_MODIFIED, Kind.CHEBYSHEV1_MODIFIED, Kind.CHEBYSHEV2_MODIFIED]
    )
    def test_even_families(self, kind):
        assert odd_coeffs_vanish(FamilySpec(kind), 16)

    def test_bernoulli(self):
        assert not odd_coeffs_vanish(BERNOULLI, 16)

    @pytest.mark.parametrize("spec", SPECS, ids=IDS)
    def test_matches_reflection(self, spec):
        av = appell_vector(spec, 10)
        reflects = all(
            evaluate(av, -x) == mat_vec(diag_geometric(10, -1), evaluate(av, x))
            for x in (F(1, 3), F(-7, 2), F(5))
        )
        assert reflects == odd_coeffs_vanish(spec, 10)

    @given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=9), min_size=8, max_size=8))
    def test_proposition_on_random_even_series(self, tail):
        # zero the odd positions of an arbitrary series: gamma must follow
        coeffs = [F(1)] + [v if n % 2 == 0 else 0 for n, v in enumerate(tail, start=1)]
        assert odd_coeffs_vanish(FamilySpec(Kind.CUSTOM, custom_coeffs=coeffs), 8)


class TestRecurrence:
    def test_monomial(self):
        assert recurrence_eval(MONOMIAL, 4, 3) == (1, 3, 9, 27, 81)

    def test_bernoulli_at_zero(self):
        assert recurrence_eval(BERNOULLI, 2, 0) == (1, F(-1, 2), F(1, 6))

    def test_euler_at_one(self):
        # E_2(x) = x^2 - x, so E_2(1) = 0
        assert recurrence_eval(EULER, 2, 1) == oracles.euler_poly_values(2, 1) == (1, F(1, 2), 0)

    def test_genocchi(self):
        with pytest.raises(NotInvertible):
            recurrence_eval(GENOCCHI, 3, 1)

    @pytest.mark.parametrize("spec", [s for s in SPECS if s.kind is not Kind.GENOCCHI],
                             ids=[s.name for s in SPECS if s.kind is not Kind.GENOCCHI])
    @given(x=rationals)
    @settings(max_examples=10, deadline=None)
    def test_matches_matrix_route(self, spec, x):
        assert recurrence_eval(spec, 16, x) == evaluate(appell_vector(spec, 16), x)


class TestCombineCompose:
    def test_combine_trivial(self):
        b, e = appell_vector(BERNOULLI, 5), appell_vector(EULER, 5)
        assert combine([b, e], [1, 0]).matrix == b.matrix
        assert combine([b, b], [F(1, 2), F(1, 2)]).matrix == b.matrix

    def test_combine_degenerate_flagged(self):
        b, e = appell_vector(BERNOULLI, 1), appell_vector(EULER, 1)
        with pytest.warns(DegenerateAppellWarning):
            out = combine([b, e], [1, -1])
        assert out.tm.coeffs == (0, 0)
        assert out.is_degenerate

    def test_combine_satisfies_ode(self):
        b, h = appell_vector(BERNOULLI, 9), appell_vector(FamilySpec(Kind.HERMITE_MONIC), 9)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            out = combine([b, h], [F(2, 3), F(-5, 4)])
        assert derivative(out) == mat_mul(creation_matrix(9), out.matrix)

    def test_combine_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            combine([appell_vector(BERNOULLI, 2), appell_vector(EULER, 3)], [1, 1])

    def test_compose_with_monomial(self):
        b = appell_vector(BERNOULLI, 7)
        assert compose(b, appell_vector(MONOMIAL, 7)).matrix == b.matrix

    def test_compose_known_products(self):
        b, e = appell_vector(BERNOULLI, 12), appell_vector(EULER, 12)
        assert compose(b, b).matrix == appell_vector(FamilySpec(Kind.BERNOULLI_2IT), 12).matrix
        assert compose(b, e).matrix == appell_vector(FamilySpec(Kind.BERNOULLI_EULER), 12).matrix
        assert compose(b, e).matrix == compose(e, b).matrix

    def test_compose_substitutes_powers(self):
        # w_n(x) = sum_k v_nk u_k(x)
        v, u = appell_vector(EULER, 6), appell_vector(FamilySpec(Kind.HERMITE_MONIC), 6)
        x = F(-2, 5)
        ux = evaluate(u, x)
        w = evaluate(compose(v, u), x)
        assert w == tuple(sum(v.matrix[n, k] * ux[k] for k in range(n + 1)) for n in range(7))
        assert derivative(compose(v, u)) == mat_mul(creation_matrix(6), compose(v, u).matrix)

    def test_compose_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            compose(appell_vector(BERNOULLI, 2), appell_vector(EULER, 3))


class TestClassical:
    def test_hermite(self):
        assert classical_hermite(2, 0) == (1, 0, -2)
        assert classical_hermite(1, 1) == (1, 2)
        assert classical_hermite(2, 1) == (1, 2, 2)

    def test_laguerre(self):
        for x in (F(0), F(5, 3), F(-2)):
            assert classical_laguerre(1, 0, x) == (1, 1 - x)
        assert classical_laguerre(2, 0, 0) == (1, 1, 1)
        assert classical_laguerre(2, 1, 0) == (1, 2, 3)

    @given(alpha=st.fractions(min_value=-3, max_value=5, max_denominator=6), x=rationals)
    @settings(max_examples=25)
    def test_laguerre_ladder_relation(self, alpha, x):
        m = 9
        lg = classical_laguerre(m, alpha, x)
        assert laguerre_ladder(m, alpha, x) == mat_vec(pascal_generalized(m, -1), lg)
        assert lg == oracles.three_term("laguerre", m, x, alpha=alpha)

    def test_legendre(self):
        assert classical_legendre(2, 0) == (1, 0, F(-1, 2))

    def test_chebyshev(self):
        assert classical_chebyshev1(3, F(1, 2)) == (1, F(1, 2), F(-1, 2), -1)
        assert classical_chebyshev2(2, F(1, 2)) == (1, 1, 0)

    @pytest.mark.parametrize("fn", [classical_legendre, classical_chebyshev1, classical_chebyshev2])
    @pytest.mark.parametrize("x", [1, -1, F(3, 2)])
    def test_domain(self, fn, x):
        with pytest.raises(DomainError):
            fn(3, x)

    @pytest.mark.parametrize(
        "fn,name",
        [(classical_legendre, "legendre"), (classical_chebyshev1, "chebyshev1"),
         (classical_chebyshev2, "chebyshev2")],
    )
    @given(x=inside)
    @settings(max_examples=20, deadline=None)
    def test_match_recurrences(self, fn, name, x):
        assert fn(16, x) == oracles.three_term(name, 16, x)

    @given(x=rationals)
    @settings(max_examples=20)
    def test_hermite_matches_recurrence(self, x):
        assert classical_hermite(16, x) == oracles.three_term("hermite", 16, x)
