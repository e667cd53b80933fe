"""The Weyl algebra D_n and the rational Weyl algebra R_n.

Elements of D_n are stored normally ordered, as ``{(alpha, beta): c}`` for
the monomial ``x^alpha d^beta``.  Scalars ``c`` are Fractions, or, when the
context declares parameters, RationalFunctions in the parameters only.

Elements of R_n are stored in standard form ``{beta: c_beta(x)}`` with
RationalFunction coefficients.

Monomials are ordered by the (0, v)-weight ``v . beta``, ties broken
lexicographically with d_1 > ... > d_n > x_1 > ... > x_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .arith import Polynomial, RationalFunction, VarTable, poly_lcm

Exponent = Tuple[int, ...]
MonomialD = Tuple[Exponent, Exponent]


class ContextMismatch(ValueError):
    """Operands live in different Weyl algebras."""


@dataclass(frozen=True)
class WeylContext:
    """Variable names, parameter names and the positive weight vector ``v``."""

    variables: Tuple[str, ...]
    weights: Tuple[Fraction, ...]
    params: Tuple[str, ...] = ()

    def __init__(self, variables: Sequence[str], weights: Optional[Sequence] = None,
                 params: Sequence[str] = ()):
        variables = tuple(variables)
        if not variables:
            raise ValueError("at least one variable is required")
        if weights is None:
            weights = (1,) * len(variables)
        weights = tuple(Fraction(w) for w in weights)
        if len(weights) != len(variables):
            raise ValueError(f"expected {len(variables)} weights, got {len(weights)}")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be strictly positive")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "params", tuple(params))
        names = set(variables) | set(self.params)
        for dn in self.dnames:
            if dn in names:
                raise ValueError(f"derivative name {dn!r} clashes with a variable or parameter")
        # VarTable validates uniqueness of variables + params
        object.__setattr__(self, "_table", VarTable.build(variables, self.params))

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def dnames(self) -> Tuple[str, ...]:
        return tuple("d" + x for x in self.variables)

    @property
    def table(self) -> VarTable:
        return self._table

    def with_weights(self, weights: Sequence) -> "WeylContext":
        return WeylContext(self.variables, weights, self.params)

    # scalars --------------------------------------------------------------

    def scalar(self, c) -> Union[Fraction, RationalFunction]:
        """Coerce ``c`` into the coefficient field Q or Q(params)."""
        if not self.params:
            if isinstance(c, RationalFunction):
                return c.constant_value()
            return Fraction(c)
        if isinstance(c, RationalFunction):
            if not c.free_of(self.table.base_indices):
                raise ValueError("scalar depends on a base variable")
            return c
        return RationalFunction.const(self.table, c)

    def lift(self, c, alpha: Exponent) -> RationalFunction:
        """``c * x^alpha`` as a RationalFunction in all variables."""
        e = tuple(alpha) + (0,) * len(self.params)
        if isinstance(c, RationalFunction):
            return RationalFunction(c.num * Polynomial.monomial(self.table, e), c.den, reduced=True)
        return RationalFunction(Polynomial.monomial(self.table, e, c), reduced=True)

    def param(self, name: str) -> RationalFunction:
        if name not in self.params:
            raise KeyError(f"unknown parameter {name!r}")
        return RationalFunction.var(self.table, name)

    # generators -----------------------------------------------------------

    def zero(self) -> "WeylElement":
        return WeylElement(self, {})

    def one(self) -> "WeylElement":
        z = (0,) * self.n
        return WeylElement(self, {(z, z): self.scalar(1)})

    def x(self, i: Union[int, str]) -> "WeylElement":
        i = self.variables.index(i) if isinstance(i, str) else i
        z = (0,) * self.n
        return WeylElement(self, {(_unit(self.n, i), z): self.scalar(1)})

    def d(self, i: Union[int, str]) -> "WeylElement":
        i = self.variables.index(i) if isinstance(i, str) else i
        z = (0,) * self.n
        return WeylElement(self, {(z, _unit(self.n, i)): self.scalar(1)})

    def monomial(self, alpha: Sequence[int], beta: Sequence[int], c=1) -> "WeylElement":
        return WeylElement(self, {(tuple(alpha), tuple(beta)): self.scalar(c)})

    def rational(self, c) -> RationalFunction:
        """Coerce a scalar, Polynomial or RationalFunction into C(x) over this context."""
        if isinstance(c, RationalFunction):
            return c
        if isinstance(c, Polynomial):
            return RationalFunction(c, reduced=True)
        return RationalFunction.const(self.table, c)

    # orders ---------------------------------------------------------------

    def weight(self, beta: Exponent) -> Fraction:
        return sum((w * b for w, b in zip(self.weights, beta)), Fraction(0))

    def key_d(self, m: MonomialD) -> tuple:
        alpha, beta = m
        return (self.weight(beta), beta, alpha)

    def key_r(self, beta: Exponent) -> tuple:
        return (self.weight(beta), beta)


def _unit(n: int, i: int) -> Exponent:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def compare_d(m1: MonomialD, m2: MonomialD, ctx: WeylContext) -> int:
    """Three-way comparison of ``x^a1 d^b1`` and ``x^a2 d^b2`` under the (0,v) order."""
    return _cmp(ctx.key_d(m1), ctx.key_d(m2))


def compare_r(beta1: Exponent, beta2: Exponent, ctx: WeylContext) -> int:
    """Three-way comparison of ``d^beta1`` and ``d^beta2`` in R_n."""
    return _cmp(ctx.key_r(beta1), ctx.key_r(beta2))


def _check_ctx(a, b) -> None:
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise ContextMismatch("operands belong to different Weyl algebras")


@lru_cache(maxsize=65536)
def _commute(b: Exponent, c: Exponent) -> Tuple[Tuple[int, Exponent, Exponent], ...]:
    """Normally ordered expansion of ``d^b x^c`` as (coefficient, alpha, beta) triples.

    Per coordinate, d^k x^m = sum_j C(k,j) (m)_j x^(m-j) d^(k-j).
    """
    per_coord = []
    for k, m in zip(b, c):
        opts = []
        falling = 1
        for j in range(min(k, m) + 1):
            if j:
                falling *= m - j + 1
            opts.append((comb(k, j) * falling, m - j, k - j))
        per_coord.append(opts)
    out = []
    for choice in product(*per_coord):
        coef = 1
        for o in choice:
            coef *= o[0]
        out.append((coef, tuple(o[1] for o in choice), tuple(o[2] for o in choice)))
    return tuple(out)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


class WeylElement:
    """Normally ordered element ``sum c x^alpha d^beta`` of D_n."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: WeylContext, terms: Mapping[MonomialD, object]):
        self.ctx = ctx
        self.terms: Dict[MonomialD, object] = {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        p._hash = None
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, WeylElement):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, RationalWeylElement):
            return self.to_rational() == other
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.one() * other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, WeylElement):
            _check_ctx(self, other)
            return other
        if isinstance(other, (int, Fraction)) or (
            isinstance(other, RationalFunction) and self.ctx.params
        ):
            return self.ctx.one().scale(self.ctx.scalar(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return WeylElement._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement._raw(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "WeylElement":
        c = self.ctx.scalar(c)
        if not c:
            return self.ctx.zero()
        return WeylElement._raw(self.ctx, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, RationalWeylElement):
            return self.to_rational() * other
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return weyl_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) or isinstance(other, RationalFunction):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "WeylElement":
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ctx.one()
        for _ in range(k):
            result = result * self
        return result

    def left_mul_monomial(self, alpha: Exponent, beta: Exponent, c=1) -> "WeylElement":
        """``c x^alpha d^beta * self``; the hot path of every reduction."""
        out: Dict[MonomialD, object] = {}
        if not any(beta):
            for (a, b), v in self.terms.items():
                out[(_add(alpha, a), b)] = v * c
            return WeylElement._raw(self.ctx, out)
        for (a, b), v in self.terms.items():
            vc = v * c
            for k, ra, rb in _commute(beta, a):
                m = (_add(alpha, ra), _add(rb, b))
                s = out.get(m)
                s = vc * k if s is None else s + vc * k
                if s:
                    out[m] = s
                else:
                    del out[m]
        return WeylElement._raw(self.ctx, out)

    # order ----------------------------------------------------------------

    def leading_monomial(self) -> MonomialD:
        if not self.terms:
            raise ValueError("zero element has no leading term")
        return max(self.terms, key=self.ctx.key_d)

    def leading_term(self) -> Tuple[MonomialD, object]:
        m = self.leading_monomial()
        return m, self.terms[m]

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def init_monomial(self) -> MonomialD:
        """The commutative initial monomial ``x^alpha xi^beta`` as an exponent pair."""
        return self.leading_monomial()

    def monic(self) -> "WeylElement":
        return self.scale(1 / self.leading_coefficient())

    def sorted_terms(self) -> List[Tuple[MonomialD, object]]:
        """Terms in decreasing order."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=self.ctx.key_d, reverse=True)]

    def to_rational(self) -> "RationalWeylElement":
        """Group by ``d^beta``; the x-parts become polynomial coefficients."""
        ctx = self.ctx
        groups: Dict[Exponent, RationalFunction] = {}
        for (a, b), c in self.terms.items():
            t = ctx.lift(c, a)
            groups[b] = groups[b] + t if b in groups else t
        return RationalWeylElement(ctx, groups)

    def __repr__(self) -> str:
        from .printing import format_element

        return f"WeylElement({format_element(self)!r})"


def weyl_mul(p: WeylElement, q: WeylElement) -> WeylElement:
    """Normally ordered product ``p * q`` in D_n."""
    _check_ctx(p, q)
    out = q.ctx.zero()
    for (a, b), c in p.terms.items():
        out = out + q.left_mul_monomial(a, b, c)
    return out


def leading_term_d(p: WeylElement) -> Tuple[MonomialD, object]:
    return p.leading_term()


def init_monomial_d(p: WeylElement) -> MonomialD:
    return p.init_monomial()


def leibniz_coefficients(beta: Exponent) -> Iterable[Tuple[int, Exponent]]:
    """Pairs (C(beta, gamma), gamma) for all gamma <= beta."""
    for gamma in product(*(range(b + 1) for b in beta)):
        coef = 1
        for b, g in zip(beta, gamma):
            coef *= comb(b, g)
        yield coef, tuple(gamma)


def apply_derivative(c: RationalFunction, gamma: Exponent) -> RationalFunction:
    """``d^gamma . c`` for a rational function of the base variables."""
    for i, k in enumerate(gamma):
        for _ in range(k):
            c = c.derivative(i)
    return c


class RationalWeylElement:
    """Element ``sum_beta c_beta(x) d^beta`` of R_n in standard form."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: WeylContext, terms: Mapping[Exponent, RationalFunction]):
        self.ctx = ctx
        self.terms: Dict[Exponent, RationalFunction] = {
            tuple(b): ctx.rational(c) for b, c in terms.items() if c
        }
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def from_coefficient(cls, ctx: WeylContext, c, beta: Optional[Exponent] = None):
        beta = (0,) * ctx.n if beta is None else tuple(beta)
        return cls(ctx, {beta: ctx.rational(c)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalWeylElement):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, WeylElement):
            return self == other.to_rational()
        if isinstance(other, (int, Fraction, RationalFunction, Polynomial)):
            return self == RationalWeylElement.from_coefficient(self.ctx, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, RationalWeylElement):
            _check_ctx(self, other)
            return other
        if isinstance(other, WeylElement):
            _check_ctx(self, other)
            return other.to_rational()
        if isinstance(other, (int, Fraction, RationalFunction, Polynomial)):
            return RationalWeylElement.from_coefficient(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for b, c in other.terms.items():
            s = out.get(b)
            if s is None:
                out[b] = c
            else:
                s = s + c
                if s:
                    out[b] = s
                else:
                    del out[b]
        return RationalWeylElement._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "RationalWeylElement":
        return RationalWeylElement._raw(self.ctx, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "RationalWeylElement":
        """Left multiplication by a coefficient ``c(x)``."""
        c = self.ctx.rational(c)
        if not c:
            return RationalWeylElement._raw(self.ctx, {})
        return RationalWeylElement._raw(self.ctx, {b: c * v for b, v in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rational_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction, Polynomial)):
            return self.scale(other)
        if isinstance(other, WeylElement):
            return rational_mul(other.to_rational(), self)
        return NotImplemented

    def __pow__(self, k: int) -> "RationalWeylElement":
        if k < 0:
            raise ValueError("negative exponent")
        result = RationalWeylElement.from_coefficient(self.ctx, 1)
        for _ in range(k):
            result = result * self
        return result

    # order ----------------------------------------------------------------

    def leading_monomial(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero element has no leading term")
        return max(self.terms, key=self.ctx.key_r)

    def leading_term(self) -> Tuple[Exponent, RationalFunction]:
        b = self.leading_monomial()
        return b, self.terms[b]

    def sorted_terms(self) -> List[Tuple[Exponent, RationalFunction]]:
        return [(b, self.terms[b]) for b in sorted(self.terms, key=self.ctx.key_r, reverse=True)]

    def coefficient(self, beta: Exponent) -> RationalFunction:
        c = self.terms.get(tuple(beta))
        return c if c is not None else RationalFunction.const(self.ctx.table, 0)

    def is_polynomial(self) -> bool:
        """True when no coefficient has a denominator involving a base variable."""
        base = self.ctx.table.base_indices
        return all(c.den.free_of(base) for c in self.terms.values())

    def to_weyl(self) -> WeylElement:
        """Back to D_n; requires denominators free of the base variables."""
        ctx = self.ctx
        base = ctx.table.base_indices
        n = ctx.n
        out: Dict[MonomialD, object] = {}
        for b, c in self.terms.items():
            if not c.den.free_of(base):
                raise ValueError("coefficient has a denominator in the base variables")
            den = RationalFunction(c.den, reduced=True)
            for e, v in c.num.terms.items():
                alpha = e[:n]
                if ctx.params:
                    rest = (0,) * n + e[n:]
                    s = RationalFunction(Polynomial.monomial(ctx.table, rest, v), reduced=True) / den
                else:
                    s = v / c.den.constant_value()
                key = (alpha, b)
                out[key] = out[key] + s if key in out else s
        return WeylElement(ctx, out)

    def __repr__(self) -> str:
        from .printing import format_element

        return f"RationalWeylElement({format_element(self)!r})"


def rational_mul(p: RationalWeylElement, q: RationalWeylElement) -> RationalWeylElement:
    """Product in R_n: ``d^beta c = sum_gamma C(beta,gamma) (d^gamma . c) d^(beta-gamma)``."""
    _check_ctx(p, q)
    ctx = p.ctx
    out: Dict[Exponent, RationalFunction] = {}
    for b, c in p.terms.items():
        for b2, c2 in q.terms.items():
            for k, gamma in leibniz_coefficients(b):
                dc = apply_derivative(c2, gamma)
                if not dc:
                    continue
                key = _add(_sub(b, gamma), b2)
                t = c * dc * k
                out[key] = out[key] + t if key in out else t
    return RationalWeylElement(ctx, out)


def to_rational_form(p: WeylElement) -> RationalWeylElement:
    return p.to_rational()


def leading_term_r(p: RationalWeylElement) -> Tuple[Exponent, RationalFunction]:
    return p.leading_term()


def clear_denominators(p: RationalWeylElement) -> WeylElement:
    """Multiply on the left by the lcm of the coefficient denominators."""
    if isinstance(p, WeylElement):
        return p
    if not p:
        raise ValueError("cannot clear denominators of the zero element")
    dens = [c.den for c in p.terms.values()]
    m = dens[0]
    for d in dens[1:]:
        m = poly_lcm(m, d)
    return p.scale(RationalFunction(m, reduced=True)).to_weyl()
