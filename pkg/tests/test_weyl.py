from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from weylconn import (
    ContextMismatch,
    Polynomial,
    RationalFunction,
    RationalWeylElement,
    WeylContext,
    clear_denominators,
    compare_d,
    compare_r,
    weyl_mul,
)
from weylconn.parsing import parse_expr, parse_rational

from conftest import apply_operator, rational_weyl_elements, weyl_elements

CTX = WeylContext(["x", "y"], [2, 1])
x, y, dx, dy = CTX.x(0), CTX.x(1), CTX.d(0), CTX.d(1)


def rat(s):
    return parse_rational(s, CTX)


class TestMultiplication:
    def test_commutator(self):
        assert dx * x == x * dx + 1

    def test_second_order(self):
        assert dx ** 2 * x == x * dx ** 2 + 2 * dx

    def test_unit(self):
        p = x * dx + y * dy ** 2 - 3
        assert CTX.one() * p == p and p * CTX.one() == p

    def test_other_variables_commute(self):
        assert dy * x == x * dy

    def test_closed_form_high_degree(self):
        # d^3 x^2 = x^2 d^3 + 6 x d^2 + 6 d
        assert dx ** 3 * x ** 2 == x ** 2 * dx ** 3 + 6 * x * dx ** 2 + 6 * dx

    def test_context_mismatch(self):
        other = WeylContext(["x", "y"], [1, 1])
        with pytest.raises(ContextMismatch):
            weyl_mul(dx, other.x(0))

    @settings(max_examples=40, deadline=None)
    @given(weyl_elements(CTX), weyl_elements(CTX), weyl_elements(CTX))
    def test_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @settings(max_examples=40, deadline=None)
    @given(weyl_elements(CTX), weyl_elements(CTX), weyl_elements(CTX))
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r
        assert (q + r) * p == q * p + r * p

    @settings(max_examples=25, deadline=None)
    @given(weyl_elements(CTX, max_deg=2), weyl_elements(CTX, max_deg=2))
    def test_action_is_composition(self, p, q):
        # oracle: (P Q) . f == P . (Q . f) on a generic test function
        sx, sy = sympy.symbols("x y")
        f = sympy.exp(sx * sy + sx) * (sx ** 3 + sy ** 2 + 1)
        lhs = apply_operator(p * q, f)
        rhs = apply_operator(p, apply_operator(q, f))
        assert sympy.cancel((lhs - rhs) / f) == 0

    @settings(max_examples=25, deadline=None)
    @given(rational_weyl_elements(CTX, max_deg=1), rational_weyl_elements(CTX, max_deg=1))
    def test_rational_action_is_composition(self, p, q):
        sx, sy = sympy.symbols("x y")
        f = sympy.exp(sx + sx * sy)
        lhs = apply_operator(p * q, f)
        rhs = apply_operator(p, apply_operator(q, f))
        assert sympy.cancel((lhs - rhs) / f) == 0


class TestOrders:
    def test_lex_breaks_weight_tie(self):
        # x y xi_y^2 vs y^2 xi_y^2, both of weight 2
        assert compare_d(((1, 1), (0, 2)), ((0, 2), (0, 2)), CTX) > 0

    def test_one_is_minimal(self):
        one = ((0, 0), (0, 0))
        for m in [((1, 0), (0, 0)), ((0, 0), (0, 1)), ((0, 3), (0, 0))]:
            assert compare_d(one, m, CTX) < 0

    def test_weights_decide(self):
        assert compare_d(((0, 0), (0, 1)), ((0, 0), (1, 0)), CTX) < 0

    def test_r_order_weights(self):
        assert compare_r((0, 2), (1, 1), CTX) < 0

    def test_r_order_minimal(self):
        assert compare_r((0, 0), (0, 1), CTX) < 0

    def test_r_order_lex_tiebreak(self):
        ctx = WeylContext(["x", "y"], [1, 1])
        assert compare_r((0, 1), (1, 0), ctx) < 0

    monos = st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                      st.tuples(st.integers(0, 3), st.integers(0, 3)))

    @given(monos, monos, monos)
    def test_multiplicative(self, a, b, s):
        def shift(m):
            return tuple(map(sum, zip(m[0], s[0]))), tuple(map(sum, zip(m[1], s[1])))

        if compare_d(a, b, CTX) < 0:
            assert compare_d(shift(a), shift(b), CTX) < 0

    @given(monos, monos)
    def test_d_restricts_to_r(self, a, b):
        za, zb = ((0, 0), a[1]), ((0, 0), b[1])
        assert compare_d(za, zb, CTX) == compare_r(a[1], b[1], CTX)

    @given(monos, monos)
    def test_elimination(self, a, b):
        # d^beta < d^gamma implies x^alpha d^beta < d^gamma
        if compare_r(a[1], b[1], CTX) < 0:
            assert compare_d(a, ((0, 0), b[1]), CTX) < 0

    def test_weights_must_be_positive(self):
        with pytest.raises(ValueError):
            WeylContext(["x", "y"], [1, 0])
        with pytest.raises(ValueError):
            WeylContext(["x"], [-1])

    def test_rational_weights(self):
        ctx = WeylContext(["x", "y"], ["1/2", "1/3"])
        assert compare_r((0, 1), (1, 0), ctx) < 0


class TestLeadingTerms:
    g3 = x * y * dy ** 2 - y ** 2 * dy ** 2 + x * dy - 3 * y * dy - 1

    def test_init_of_g3(self):
        assert self.g3.init_monomial() == ((1, 1), (0, 2))
        assert self.g3.leading_term() == (((1, 1), (0, 2)), 1)

    def test_single_monomial(self):
        m = CTX.monomial((2, 1), (1, 0), 5)
        assert m.leading_term() == (((2, 1), (1, 0)), 5)

    def test_three_terms(self):
        assert (x * dx + y * dy + 1).init_monomial() == ((1, 0), (1, 0))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            CTX.zero().leading_term()
        with pytest.raises(ValueError):
            RationalWeylElement(CTX, {}).leading_term()

    def test_rational_leading_term_of_g3(self):
        beta, c = self.g3.to_rational().leading_term()
        assert beta == (0, 2)
        assert c == rat("(x - y)*y").coefficient((0, 0))

    def test_rational_leading_term_unchanged(self):
        assert dy.to_rational().leading_term() == ((0, 1), 1)

    def test_rational_leading_term_weight_four(self):
        p = x * dx ** 2 - y * dy ** 2 + dx - dy
        beta, c = p.to_rational().leading_term()
        assert beta == (2, 0) and c == RationalFunction.var(CTX.table, "x")

    @settings(max_examples=40, deadline=None)
    @given(weyl_elements(CTX, allow_zero=False), weyl_elements(CTX, allow_zero=False))
    def test_init_is_multiplicative(self, p, q):
        (a1, b1), (a2, b2) = p.init_monomial(), q.init_monomial()
        expect = (tuple(map(sum, zip(a1, a2))), tuple(map(sum, zip(b1, b2))))
        assert (p * q).init_monomial() == expect


class TestClearDenominators:
    def test_negative_example(self):
        p = rat("-y/x*dy - 1/x")
        assert clear_denominators(p) == -(y * dy + 1)

    def test_polynomial_unchanged(self):
        p = x * dx + 3 * dy
        assert clear_denominators(p.to_rational()) == p

    def test_lcm_of_two_denominators(self):
        p = rat("1/(x - y)*dx + 1/y*dy")
        assert clear_denominators(p) == y * dx + (x - y) * dy

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            clear_denominators(RationalWeylElement(CTX, {}))

    @settings(max_examples=40, deadline=None)
    @given(weyl_elements(CTX, allow_zero=False))
    def test_round_trip(self, p):
        q = clear_denominators(p.to_rational())
        # equals c(x) * P for a polynomial c; here c is a positive constant
        (m, c), (m2, c2) = p.leading_term(), q.leading_term()
        assert m == m2
        assert q == p.scale(c2 / c)

    @settings(max_examples=30, deadline=None)
    @given(rational_weyl_elements(CTX))
    def test_clears_to_polynomial(self, p):
        if not p:
            return
        q = clear_denominators(p)
        r = q.to_rational()
        # r = c * p with c a polynomial in x: all ratios of coefficients agree
        ratios = {r.coefficient(b) / p.coefficient(b) for b in p.terms}
        assert len(ratios) == 1
        (c,) = ratios
        assert c.is_polynomial()


def test_param_scalars():
    ctx = WeylContext(["x"], [1], ["eps"])
    eps = ctx.param("eps")
    assert isinstance(parse_expr("(1/eps)*dx", ctx), RationalWeylElement)
    p = parse_rational("eps*x*dx + 1/eps", ctx).to_weyl()
    assert p.terms[((1,), (1,))] == eps
    assert p.terms[((0,), (0,))] == 1 / eps
    with pytest.raises(ValueError):
        ctx.scalar(RationalFunction.var(ctx.table, "x"))
