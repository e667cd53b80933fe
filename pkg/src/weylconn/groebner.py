"""Gröbner bases of left D_n-ideals and normal forms in R_n.

Bases are computed in D_n under the (0,v) elimination order.  Such a basis
is also a Gröbner basis of the extended ideal in R_n, so normal forms over
C(x) only need the D_n computation.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .weyl import (
    Exponent,
    MonomialD,
    RationalWeylElement,
    WeylContext,
    WeylElement,
    divides,
)


class InfiniteRank(ArithmeticError):
    """The ideal has infinitely many standard monomials."""


class ReductionError(ValueError):
    """A reduction step was requested whose divisibility precondition fails."""


@dataclass(frozen=True)
class WeylIdeal:
    """Left ideal of D_n given by generators."""

    ctx: WeylContext
    generators: Tuple[WeylElement, ...]

    def __init__(self, ctx: WeylContext, generators: Sequence):
        gens = []
        for g in generators:
            if isinstance(g, RationalWeylElement):
                from .weyl import clear_denominators

                g = clear_denominators(g)
            if g.ctx != ctx:
                raise ValueError("generator belongs to a different Weyl algebra")
            gens.append(g)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        if not any(gens):
            raise ValueError("all generators are zero")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "generators", tuple(gens))

    def with_weights(self, weights) -> "WeylIdeal":
        """The same generators in the Weyl algebra with another weight vector."""
        ctx = self.ctx.with_weights(weights)
        return WeylIdeal(ctx, [WeylElement(ctx, g.terms) for g in self.generators])


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis, monic in D_n, sorted by initial monomial."""

    ctx: WeylContext
    elements: Tuple[WeylElement, ...]
    _shifts: Dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i) -> WeylElement:
        return self.elements[i]

    def initial_monomials(self) -> List[MonomialD]:
        return [g.leading_monomial() for g in self.elements]

    def initial_monomials_r(self) -> List[Exponent]:
        """Initial monomials in the R_n view (the xi-parts)."""
        return [g.to_rational().leading_monomial() for g in self.elements]

    def shifted(self, i: int, t: Exponent) -> RationalWeylElement:
        """``d^t * G_i`` computed in D_n, then regrouped into R_n form (cached)."""
        key = (i, t)
        r = self._shifts.get(key)
        if r is None:
            z = (0,) * self.ctx.n
            r = self.elements[i].left_mul_monomial(z, t).to_rational()
            self._shifts[key] = r
        return r


# D_n side -------------------------------------------------------------------


def _lcm(a: MonomialD, b: MonomialD) -> MonomialD:
    return (tuple(map(max, a[0], b[0])), tuple(map(max, a[1], b[1])))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _divides_d(a: MonomialD, b: MonomialD) -> bool:
    return divides(a[0], b[0]) and divides(a[1], b[1])


def s_pair_d(p: WeylElement, q: WeylElement) -> WeylElement:
    """S-pair of two elements with monic leading coefficients."""
    if not p or not q:
        raise ValueError("S-pair of a zero element")
    mp, mq = p.leading_monomial(), q.leading_monomial()
    m = _lcm(mp, mq)
    a = p.left_mul_monomial(_sub(m[0], mp[0]), _sub(m[1], mp[1]), 1 / p.terms[mp])
    b = q.left_mul_monomial(_sub(m[0], mq[0]), _sub(m[1], mq[1]), 1 / q.terms[mq])
    return a - b


def reduce_d(p: WeylElement, basis: Sequence[WeylElement]) -> WeylElement:
    """Full reduction of ``p`` in D_n: no term of the result is divisible by a
    leading monomial of ``basis``."""
    ctx = p.ctx
    leads = [(g.leading_monomial(), g) for g in basis if g]
    rest = p
    done: Dict[MonomialD, object] = {}
    while rest:
        m, c = rest.leading_term()
        for lm, g in leads:
            if _divides_d(lm, m):
                rest = rest - g.left_mul_monomial(_sub(m[0], lm[0]), _sub(m[1], lm[1]), c / g.terms[lm])
                break
        else:
            done[m] = c
            rest = WeylElement._raw(ctx, {k: v for k, v in rest.terms.items() if k != m})
    return WeylElement._raw(ctx, done)


def buchberger(ideal: WeylIdeal) -> GroebnerBasis:
    """Reduced Gröbner basis of a left ideal under the context's (0,v) order.

    Pairs are processed smallest-lcm first; only the chain criterion is used
    to discard pairs.
    """
    return _buchberger_cached(ideal)


@lru_cache(maxsize=256)
def _buchberger_cached(ideal: WeylIdeal) -> GroebnerBasis:
    ctx = ideal.ctx
    key = ctx.key_d
    basis: List[WeylElement] = []
    leads: List[MonomialD] = []
    queue: List[tuple] = []
    pending = set()
    counter = 0

    def add(g: WeylElement) -> None:
        nonlocal counter
        g = g.monic()
        k = len(basis)
        lm = g.leading_monomial()
        basis.append(g)
        leads.append(lm)
        for j in range(k):
            m = _lcm(leads[j], lm)
            heapq.heappush(queue, (key(m), counter, j, k))
            pending.add((j, k))
            counter += 1

    for g in sorted((g for g in ideal.generators if g), key=lambda g: key(g.leading_monomial())):
        r = reduce_d(g, basis)
        if r:
            add(r)

    while queue:
        _, _, i, j = heapq.heappop(queue)
        pending.discard((i, j))
        m = _lcm(leads[i], leads[j])
        if _chain_skip(i, j, m, leads, pending):
            continue
        s = reduce_d(s_pair_d(basis[i], basis[j]), basis)
        if s:
            add(s)

    return GroebnerBasis(ctx, tuple(_reduce_basis(basis, ctx)))


def _chain_skip(i: int, j: int, m: MonomialD, leads: List[MonomialD], pending: set) -> bool:
    for k, lk in enumerate(leads):
        if k in (i, j) or not _divides_d(lk, m):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _reduce_basis(basis: List[WeylElement], ctx: WeylContext) -> List[WeylElement]:
    key = ctx.key_d
    order = sorted(basis, key=lambda g: key(g.leading_monomial()))
    minimal: List[WeylElement] = []
    for g in order:
        lm = g.leading_monomial()
        if any(_divides_d(h.leading_monomial(), lm) for h in minimal):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm = g.leading_monomial()
        tail = WeylElement._raw(ctx, {k: v for k, v in g.terms.items() if k != lm})
        reduced.append((WeylElement._raw(ctx, {lm: g.terms[lm]}) + reduce_d(tail, others)).monic())
    return sorted(reduced, key=lambda g: key(g.leading_monomial()))


# R_n side -------------------------------------------------------------------


def _as_rational(p) -> RationalWeylElement:
    return p.to_rational() if isinstance(p, WeylElement) else p


def reduce_step(p: RationalWeylElement, q: Union[WeylElement, RationalWeylElement]) -> RationalWeylElement:
    """One reduction ``P - (P_beta / Q_b) d^(beta-b) Q``.

    ``d^(beta-b) Q`` is formed in D_n when ``Q`` has polynomial coefficients.
    """
    p = _as_rational(p)
    if not p:
        raise ReductionError("cannot reduce the zero element")
    beta, pc = p.leading_term()
    qr = _as_rational(q)
    b, qc = qr.leading_term()
    if not divides(b, beta):
        raise ReductionError("leading monomial of the reducer does not divide")
    t = _sub(beta, b)
    if isinstance(q, WeylElement):
        shifted = q.left_mul_monomial((0,) * p.ctx.n, t).to_rational()
    elif qr.is_polynomial():
        shifted = qr.to_weyl().left_mul_monomial((0,) * p.ctx.n, t).to_rational()
    else:
        shifted = RationalWeylElement.from_coefficient(p.ctx, 1, t) * qr
    return p - shifted.scale(pc / qc)


def normal_form(p, g: Union[GroebnerBasis, Sequence]) -> RationalWeylElement:
    """Normal form of ``p`` in R_n modulo the basis ``g``.

    Reduce the leading term while some initial monomial divides it, then keep
    it and continue with the remainder.
    """
    p = _as_rational(p)
    if isinstance(g, GroebnerBasis):
        gb = g
    else:
        gb = GroebnerBasis(p.ctx, tuple(x if isinstance(x, WeylElement) else x.to_weyl() for x in g))
    ctx = p.ctx
    leads = [e.to_rational().leading_term() for e in gb.elements]
    result: Dict[Exponent, object] = {}
    while p:
        beta, pc = p.leading_term()
        for i, (b, qc) in enumerate(leads):
            if divides(b, beta):
                p = p - gb.shifted(i, _sub(beta, b)).scale(pc / qc)
                break
        else:
            result[beta] = pc
            p = RationalWeylElement._raw(ctx, {k: v for k, v in p.terms.items() if k != beta})
    return RationalWeylElement._raw(ctx, result)


def _staircase(leads: List[Exponent], dnames: Sequence[str]) -> List[Exponent]:
    n = len(dnames)
    if any(not any(b) for b in leads):
        return []
    bounds = []
    for i in range(n):
        powers = [b[i] for b in leads if b[i] and all(b[k] == 0 for k in range(n) if k != i)]
        if not powers:
            raise InfiniteRank(f"no pure power of {dnames[i]} lies in the initial ideal")
        bounds.append(min(powers))
    return [beta for beta in product(*(range(k) for k in bounds))
            if not any(divides(b, beta) for b in leads)]


def standard_monomials(ideal: Union[WeylIdeal, GroebnerBasis]) -> List[Exponent]:
    """Exponents beta of the standard monomials d^beta of R_n I, ascending."""
    gb = ideal if isinstance(ideal, GroebnerBasis) else buchberger(ideal)
    ctx = gb.ctx
    return sorted(_staircase(gb.initial_monomials_r(), ctx.dnames), key=ctx.key_r)


def holonomic_rank(ideal: Union[WeylIdeal, GroebnerBasis]) -> Union[int, float]:
    """Number of standard monomials, or ``math.inf``."""
    try:
        return len(standard_monomials(ideal))
    except InfiniteRank:
        return math.inf
