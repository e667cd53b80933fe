import math
import random

import pytest
from hypothesis import given, settings

from weylconn import (
    InfiniteRank,
    RationalWeylElement,
    ReductionError,
    WeylContext,
    WeylIdeal,
    buchberger,
    holonomic_rank,
    normal_form,
    reduce_step,
    s_pair_d,
    standard_monomials,
)
from weylconn.fixtures import CATALOG, constants, dx_only, example_two_variables
from weylconn.groebner import reduce_d
from weylconn.parsing import parse_expr, parse_list, parse_rational

from conftest import rational_weyl_elements, rationals

CTX = WeylContext(["x", "y"], [2, 1])
x, y, dx, dy = CTX.x(0), CTX.x(1), CTX.d(0), CTX.d(1)
P1 = x * dx ** 2 - y * dy ** 2 + dx - dy
P2 = x * dx + y * dy + 1
I = WeylIdeal(CTX, [P1, P2])


def rat(s):
    return parse_rational(s, CTX)


class TestSPair:
    def test_self_pair(self):
        assert not s_pair_d(P2, P2)

    def test_example_generators(self):
        assert s_pair_d(P1, P2) == -y * dx * dy - dx - y * dy ** 2 - dy

    def test_coprime_derivatives(self):
        assert not s_pair_d(dx, dy)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            s_pair_d(CTX.zero(), dx)


class TestBuchberger:
    def test_example_basis(self):
        gb = buchberger(I)
        expected = [
            x * y * dy ** 2 - y ** 2 * dy ** 2 + x * dy - 3 * y * dy - 1,
            x * dx + y * dy + 1,
            y * dx * dy + dx + y * dy ** 2 + dy,
        ]
        assert set(gb.elements) == set(expected)
        assert sorted(gb.initial_monomials_r()) == [(0, 2), (1, 0), (1, 1)]

    def test_already_a_basis(self):
        gb = buchberger(WeylIdeal(CTX, [dx, dy]))
        assert list(gb.elements) == [dy, dx]

    def test_principal(self):
        gb = buchberger(WeylIdeal(CTX, [2 * P2]))
        assert list(gb.elements) == [P2]

    def test_minimal_and_reduced(self):
        for make in CATALOG.values():
            gb = buchberger(make())
            inits = gb.initial_monomials()
            for i, a in enumerate(inits):
                for j, b in enumerate(inits):
                    if i != j:
                        assert not all(u <= v for u, v in zip(a[0] + a[1], b[0] + b[1]))
            for i, g in enumerate(gb):
                assert g.leading_coefficient() == 1
                others = [h for j, h in enumerate(gb) if j != i]
                assert reduce_d(g, others) == g

    def test_s_pairs_reduce_to_zero(self):
        for make in CATALOG.values():
            gb = buchberger(make())
            for i in range(len(gb)):
                for j in range(i + 1, len(gb)):
                    assert not reduce_d(s_pair_d(gb[i], gb[j]), gb.elements)

    def test_generators_reduce_to_zero(self):
        for make in CATALOG.values():
            ideal = make()
            gb = buchberger(ideal)
            for g in ideal.generators:
                assert not reduce_d(g, gb.elements)
                assert not normal_form(g, gb)

    def test_generator_order_does_not_matter(self):
        assert buchberger(WeylIdeal(CTX, [P2, P1])).elements == buchberger(I).elements

    def test_deterministic(self):
        a = buchberger(example_two_variables((1, 2)))
        b = buchberger(example_two_variables((1, 2)))
        assert a.elements == b.elements


class TestReduceStep:
    def test_single_step(self):
        assert reduce_step(dx.to_rational(), P2) == rat("-y/x*dy - 1/x")

    def test_self(self):
        assert not reduce_step(P2.to_rational(), P2)

    def test_mixed_derivative(self):
        assert reduce_step((dx * dy).to_rational(), P2) == rat("-y/x*dy^2 - 2/x*dy")

    def test_divisibility_precondition(self):
        with pytest.raises(ReductionError):
            reduce_step(dy.to_rational(), P2)

    def test_rational_reducer(self):
        q = rat("dx + y/x*dy + 1/x")
        assert reduce_step(dx.to_rational(), q) == rat("-y/x*dy - 1/x")


class TestNormalForm:
    gb = buchberger(I)

    def test_dx(self):
        assert normal_form(dx, self.gb) == rat("-y/x*dy - 1/x")

    def test_dxdy(self):
        assert normal_form(dx * dy, self.gb) == rat("-(x + y)/(x*(x - y))*dy - 1/(x*(x - y))")

    def test_dy_squared(self):
        assert normal_form(dy ** 2, self.gb) == rat("(3*y - x)/((x - y)*y)*dy + 1/((x - y)*y)")

    def test_dy_is_standard(self):
        assert normal_form(dy, self.gb) == dy.to_rational()

    def test_basis_elements(self):
        for g in self.gb:
            assert not normal_form(g, self.gb)

    def test_list_input(self):
        assert normal_form(dx, [P2]) == rat("-y/x*dy - 1/x")

    @settings(max_examples=30, deadline=None)
    @given(rational_weyl_elements(CTX))
    def test_idempotent(self, p):
        nf = normal_form(p, self.gb)
        assert normal_form(nf, self.gb) == nf

    @settings(max_examples=30, deadline=None)
    @given(rational_weyl_elements(CTX))
    def test_result_is_standard(self, p):
        inits = self.gb.initial_monomials_r()
        for beta in normal_form(p, self.gb).terms:
            assert not any(all(b <= c for b, c in zip(lead, beta)) for lead in inits)

    @settings(max_examples=25, deadline=None)
    @given(rationals(CTX.table), rationals(CTX.table),
           rational_weyl_elements(CTX, max_deg=1), rational_weyl_elements(CTX, max_deg=1))
    def test_linear_over_rational_functions(self, c, d, p, q):
        lhs = normal_form(p.scale(c) + q.scale(d), self.gb)
        rhs = normal_form(p, self.gb).scale(c) + normal_form(q, self.gb).scale(d)
        assert lhs == rhs

    @settings(max_examples=25, deadline=None)
    @given(rationals(CTX.table), rationals(CTX.table), rationals(CTX.table))
    def test_ideal_members_vanish(self, a, b, c):
        g1, g2, g3 = (g.to_rational() for g in self.gb)
        p = g1.scale(a) + (dy.to_rational() * g2).scale(b) + (dx.to_rational() * g3).scale(c)
        assert not normal_form(p, self.gb)


class TestStandardMonomials:
    def test_example(self):
        assert standard_monomials(I) == [(0, 0), (0, 1)]

    def test_other_weight(self):
        assert standard_monomials(example_two_variables((1, 2))) == [(0, 0), (1, 0)]

    def test_infinite(self):
        with pytest.raises(InfiniteRank):
            standard_monomials(dx_only())

    def test_unit_ideal(self):
        assert standard_monomials(WeylIdeal(CTX, [x * y + 1, dx])) == []


class TestRank:
    def test_example(self):
        assert holonomic_rank(I) == 2

    def test_constants(self):
        assert holonomic_rank(constants()) == 1

    def test_infinite(self):
        assert holonomic_rank(dx_only()) == math.inf

    @pytest.mark.parametrize("name", sorted(CATALOG))
    def test_weight_independent(self, name):
        make = CATALOG[name]
        n = make().ctx.n
        ranks = {holonomic_rank(make(w[:n])) for w in [(1, 1), (2, 1), (1, 2)]}
        assert len(ranks) == 1

    def test_weight_independent_infinite(self):
        assert {holonomic_rank(dx_only(w)) for w in [(1, 1), (2, 1), (1, 2)]} == {math.inf}
