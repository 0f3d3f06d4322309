from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from apolar import BinaryForm, DualForm, LinearForm, ProjectivePoint, apolar_apply, expand_power_sum, form_gcd, squarefree_test
from conftest import F1, F2, forms, nonzero_forms, rationals

X0, X1 = sp.symbols("x0 x1")


def to_sympy(f: BinaryForm):
    d = f.degree
    return sum(sp.Rational(c.numerator, c.denominator) * X0 ** (d - i) * X1**i for i, c in enumerate(f.coeffs))


def from_sympy(expr, d, cls=BinaryForm):
    p = sp.Poly(sp.expand(expr), X0, X1)
    return cls(tuple(Fraction(str(p.coeff_monomial(X0 ** (d - i) * X1**i))) for i in range(d + 1)))


class TestExpandPowerSum:
    def test_single_pure_power(self):
        assert expand_power_sum(2, [(LinearForm(1, 0), 1)]).coeffs == (1, 0, 0)

    def test_binomial(self):
        assert expand_power_sum(3, [(LinearForm(1, 1), 1)]).coeffs == (1, 3, 3, 1)

    def test_quintic_example(self):
        f1 = expand_power_sum(5, [(LinearForm(1, 0), -2), (LinearForm(0, 1), 2), (LinearForm(1, -1), 1)])
        assert f1 == F1
        assert f1 == from_sympy(-2 * X0**5 + 2 * X1**5 + (X0 - X1) ** 5, 5)

    def test_rejects_degree_zero(self):
        with pytest.raises(ValueError):
            expand_power_sum(0, [(LinearForm(1, 0), 1)])

    def test_rejects_zero_linear_form(self):
        with pytest.raises(ValueError):
            expand_power_sum(3, [((0, 0), 1)])

    @given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), rationals), min_size=1, max_size=4), st.integers(1, 7))
    def test_matches_symbolic_expansion(self, terms, d):
        terms = [(a, b, c) for a, b, c in terms if (a, b) != (0, 0)]
        if not terms:
            return
        # LinearForm normalizes, so feed the primitive pair to both sides
        lfs = [(LinearForm(a, b), c) for a, b, c in terms]
        expr = sum(sp.Rational(c.numerator, c.denominator) * (lf.a * X0 + lf.b * X1) ** d for lf, c in lfs)
        assert expand_power_sum(d, lfs) == from_sympy(expr, d)


class TestApolarApply:
    def test_y1_kills_x0_power(self):
        assert apolar_apply(DualForm((0, 1)), BinaryForm((1, 0, 0, 0))).is_zero()

    def test_y0_on_x0_squared(self):
        assert apolar_apply(DualForm((1, 0)), BinaryForm((1, 0, 0))) == BinaryForm((2, 0))

    def test_generator_kills_f1(self):
        assert apolar_apply(DualForm((0, 1, 1, 0)), F1).is_zero()
        assert apolar_apply(DualForm((0, 1, 1, 0)), F2).is_zero()

    def test_rejects_high_degree(self):
        with pytest.raises(ValueError):
            apolar_apply(DualForm((1, 0, 0)), BinaryForm((1, 0)))

    @given(st.integers(0, 4).flatmap(lambda k: st.tuples(nonzero_forms(DualForm, k), st.integers(k, 7).flatmap(lambda d: forms(BinaryForm, d)))))
    def test_matches_differentiation(self, pair):
        D, f = pair
        k, d = D.degree, f.degree
        expr = 0
        for j, b in enumerate(D.coeffs):
            term = sp.diff(to_sympy(f), X0, k - j) if k - j else to_sympy(f)
            term = sp.diff(term, X1, j) if j else term
            expr += sp.Rational(b.numerator, b.denominator) * term
        assert apolar_apply(D, f) == from_sympy(expr, d - k)

    @given(forms(DualForm, 2), forms(DualForm, 2), forms(BinaryForm, 5), rationals, rationals)
    def test_bilinear(self, D1, D2, f, a, b):
        lhs = apolar_apply(D1.scale(a) + D2.scale(b), f)
        assert lhs == apolar_apply(D1, f).scale(a) + apolar_apply(D2, f).scale(b)
        g = f.scale(b)
        assert apolar_apply(D1, f.scale(a) + g) == apolar_apply(D1, f).scale(a) + apolar_apply(D1, g)

    @given(nonzero_forms(DualForm, 2), nonzero_forms(BinaryForm, 6))
    def test_degree_bookkeeping(self, D, f):
        assert apolar_apply(D, f).degree == f.degree - D.degree

    @given(forms(DualForm, 1), forms(DualForm, 2), forms(BinaryForm, 5))
    def test_composition_is_product(self, D1, D2, f):
        assert apolar_apply(D1, apolar_apply(D2, f)) == apolar_apply(D1 * D2, f)

    @given(st.integers(-9, 9), st.integers(-9, 9), st.integers(1, 8))
    def test_dual_hyperplane_kills_power(self, a, b, d):
        if (a, b) == (0, 0):
            return
        lf = LinearForm(a, b)
        assert apolar_apply(DualForm((lf.b, -lf.a)), lf.power(d)).is_zero()
        assert apolar_apply(lf.dual(), lf.power(d)).is_zero()


class TestSquarefree:
    def test_quintic_generator(self):
        assert squarefree_test(DualForm((0, 1, 1, 0)))

    def test_visible_square(self):
        assert not squarefree_test(DualForm((0, 1, 0, 0)))  # y0^2 y1

    def test_quartic(self):
        assert squarefree_test(DualForm((1, 0, 0, 0, 1)))

    def test_root_at_infinity_twice(self):
        assert not squarefree_test(DualForm((0, 0, 1)))  # y1^2
        assert squarefree_test(DualForm((0, 1, 1)))  # y1 (y0 + y1)

    def test_constants_and_linear(self):
        assert squarefree_test(DualForm((3,)))
        assert squarefree_test(DualForm((2, -7)))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_test(DualForm.zero(3))

    @settings(max_examples=150)
    @given(st.integers(1, 6).flatmap(lambda k: nonzero_forms(DualForm, k)))
    def test_matches_discriminant(self, D):
        # projective squarefree <=> homogeneous discriminant nonzero
        k = D.degree
        y0, y1 = sp.symbols("y0 y1")
        expr = sum(sp.Rational(c.numerator, c.denominator) * y0 ** (k - i) * y1**i for i, c in enumerate(D.coeffs))
        if k == 1:
            expected = True
        else:
            m = next(i for i, c in enumerate(D.coeffs) if c)
            if m >= 2:
                expected = False
            else:
                g = sp.Poly(expr.subs(y1, 1), y0)
                # a root at infinity of multiplicity 1 lowers the degree by one
                expected = g.degree() == 0 or sp.discriminant(g) != 0
        assert squarefree_test(D) == expected

    @given(st.integers(1, 3).flatmap(lambda k: nonzero_forms(DualForm, k)), st.integers(1, 3).flatmap(lambda k: nonzero_forms(DualForm, k)))
    def test_common_factor_breaks_squarefree(self, A, B):
        if form_gcd(A, B).degree > 0:
            assert not squarefree_test(A * B)


class TestGcd:
    def test_simple(self):
        assert form_gcd(DualForm((0, 1, 0)), DualForm((1, 0, 0))) == DualForm((1, 0))

    def test_idempotent(self):
        D = DualForm((0, 2, 2, 0))
        assert form_gcd(D, D) == D.normalized() == DualForm((0, 1, 1, 0))

    def test_hand_factored(self):
        # (y0-y1)(y0+y1) and (y0+y1)^2
        assert form_gcd(DualForm((1, 0, -1)), DualForm((1, 2, 1))) == DualForm((1, 1))

    def test_both_zero(self):
        with pytest.raises(ValueError):
            form_gcd(DualForm.zero(2), DualForm.zero(1))

    def test_one_zero(self):
        assert form_gcd(DualForm.zero(2), DualForm((2, 4))) == DualForm((1, 2))

    @given(st.integers(1, 4).flatmap(lambda k: nonzero_forms(DualForm, k)), st.integers(1, 4).flatmap(lambda k: nonzero_forms(DualForm, k)))
    def test_matches_sympy(self, A, B):
        y0, y1 = sp.symbols("y0 y1")

        def expr(F):
            k = F.degree
            return sum(sp.Rational(c.numerator, c.denominator) * y0 ** (k - i) * y1**i for i, c in enumerate(F.coeffs))

        g = sp.Poly(sp.gcd(expr(A), expr(B)), y0, y1)
        deg = g.total_degree()
        assert form_gcd(A, B).degree == deg
        assert form_gcd(A, B) == DualForm(tuple(Fraction(str(g.coeff_monomial(y0 ** (deg - i) * y1**i))) for i in range(deg + 1))).normalized()


class TestNormalization:
    @given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-7, 7).filter(bool))
    def test_linear_form_scale_invariant(self, a, b, lam):
        if (a, b) == (0, 0):
            return
        lf = LinearForm(a, b)
        assert LinearForm(lam * a, lam * b) == lf
        assert LinearForm(lf.a, lf.b) == lf
        first = lf.a if lf.a else lf.b
        assert first > 0

    def test_rational_pair(self):
        assert LinearForm(Fraction(1, 2), Fraction(-1, 3)) == LinearForm(3, -2)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            LinearForm(0, 0)

    @given(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False),
           st.complex_numbers(min_magnitude=0.1, max_magnitude=10, allow_nan=False, allow_infinity=False))
    def test_numeric_point_normalization(self, p, q, lam):
        if abs(p) < 1e-3 and abs(q) < 1e-3:
            return
        a = ProjectivePoint(p, q, exact=False)
        b = ProjectivePoint(lam * p, lam * q, exact=False)
        assert abs(a.p - b.p) < 1e-9 and abs(a.q - b.q) < 1e-9
        assert abs(abs(a.p) ** 2 + abs(a.q) ** 2 - 1) < 1e-12
        lead = a.p if a.p != 0 else a.q
        assert lead.imag == 0 and lead.real > 0
        c = ProjectivePoint(a.p, a.q, exact=False)
        assert abs(c.p - a.p) < 1e-15 and abs(c.q - a.q) < 1e-15

    def test_exact_point(self):
        assert ProjectivePoint(-2, 4) == ProjectivePoint(1, -2)
        assert ProjectivePoint(0, -3) == ProjectivePoint(0, 1)

    def test_floats_rejected_in_exact_forms(self):
        with pytest.raises(TypeError):
            BinaryForm((0.5, 1))


def test_str_rendering():
    assert str(F1) == "-x0^5 - 5*x0^4*x1 + 10*x0^3*x1^2 - 10*x0^2*x1^3 + 5*x0*x1^4 + x1^5"
    assert str(DualForm((0, 1, 1, 0))) == "y0^2*y1 + y0*y1^2"
