"""Exact coefficient arithmetic.

Multivariate polynomials over Q with sparse ``{exponent tuple: Fraction}``
storage, and reduced rational functions built on top of them.  Parameters
such as ``eps`` live in the same polynomial ring as the base variables; the
:class:`VarTable` records which is which.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as igcd, isqrt
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

VAR = "var"
PARAM = "param"


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names with a role tag (base variable or parameter)."""

    names: Tuple[str, ...]
    roles: Tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if len(self.roles) != len(self.names):
            raise ValueError("names and roles must have equal length")
        for r in self.roles:
            if r not in (VAR, PARAM):
                raise ValueError(f"unknown role {r!r}")

    @classmethod
    def build(cls, variables: Sequence[str], params: Sequence[str] = ()) -> "VarTable":
        return cls(tuple(variables) + tuple(params), (VAR,) * len(variables) + (PARAM,) * len(params))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def is_param(self, i: int) -> bool:
        return self.roles[i] == PARAM

    @property
    def base_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r == VAR)

    @property
    def param_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r == PARAM)


def _check_same(a: "Polynomial", b: "Polynomial") -> None:
    if a.ring is not b.ring and a.ring != b.ring:
        raise ValueError(f"mismatched variable tables: {a.ring.names} vs {b.ring.names}")


class Polynomial:
    """Sparse multivariate polynomial with rational coefficients.

    Values are immutable.  Equality is equality of the term maps, so two
    polynomials that compare equal are the same canonical object.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: VarTable, terms: Optional[Mapping[Exponent, Scalar]] = None):
        self.ring = ring
        if terms:
            self.terms: Dict[Exponent, Fraction] = {
                e: Fraction(c) for e, c in terms.items() if c != 0
            }
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, ring: VarTable, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        # terms must already be zero-free Fractions
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ring: VarTable) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def const(cls, ring: VarTable, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return cls._raw(ring, {(0,) * len(ring): c} if c else {})

    @classmethod
    def monomial(cls, ring: VarTable, exp: Exponent, c: Scalar = 1) -> "Polynomial":
        c = Fraction(c)
        return cls._raw(ring, {tuple(exp): c} if c else {})

    @classmethod
    def var(cls, ring: VarTable, name_or_index: Union[str, int]) -> "Polynomial":
        i = ring.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        e = [0] * len(ring)
        e[i] = 1
        return cls._raw(ring, {tuple(e): Fraction(1)})

    # basic queries --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        if not self.terms:
            return True
        if len(self.terms) > 1:
            return False
        (e,) = self.terms
        return not any(e)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises otherwise)."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * len(self.ring)) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in decreasing lexicographic order of exponents."""
        for e in sorted(self.terms, reverse=True):
            yield e, self.terms[e]

    def leading_exponent(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_exponent()]

    def degree(self, i: int) -> int:
        """Degree in variable ``i``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def variables(self) -> Tuple[int, ...]:
        """Indices of variables that occur."""
        seen = [False] * len(self.ring)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    seen[i] = True
        return tuple(i for i, s in enumerate(seen) if s)

    def free_of(self, indices: Iterable[int]) -> bool:
        idx = tuple(indices)
        return all(e[i] == 0 for e in self.terms for i in idx)

    # equality -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # ring operations ------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            _check_same(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

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

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return Polynomial.zero(self.ring)
        if len(other.terms) == 1:
            ((f, d),) = other.terms.items()
            return Polynomial._raw(
                self.ring, {tuple(a + b for a, b in zip(e, f)): c * d for e, c in self.terms.items()}
            )
        if len(self.terms) == 1:
            return other * self
        a, da = _scaled_ints(self.terms)
        b, db = _scaled_ints(other.terms)
        return _from_scaled(self.ring, _z_mul(a, b), da * db)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        if c == 1:
            return self
        return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = k - 1
                out[tuple(f)] = c * k
        return Polynomial._raw(self.ring, out)

    def exact_div(self, d: "Polynomial") -> "Polynomial":
        """Quotient ``self / d``; raises ArithmeticError if ``d`` does not divide."""
        _check_same(self, d)
        if not d.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if len(d.terms) == 1:
            ((f, dc),) = d.terms.items()
            out = {}
            for e, c in self.terms.items():
                g = tuple(a - b for a, b in zip(e, f))
                if min(g, default=0) < 0:
                    raise ArithmeticError("inexact polynomial division")
                out[g] = c / dc
            return Polynomial._raw(self.ring, out)
        # self = a/da and d = cd*dp/dd with dp integer primitive; by Gauss's
        # lemma a/dp is integral whenever dp divides a over Q.
        a, da = _scaled_ints(self.terms)
        dz, dd = _scaled_ints(d.terms)
        cd = abs(reduce(igcd, dz.values()))
        dp = {e: c // cd for e, c in dz.items()}
        q = _z_exact_div(a, dp)
        return _from_scaled(self.ring, {e: c * dd for e, c in q.items()}, da * cd)

    # normalization --------------------------------------------------------

    def content_scalar(self) -> Fraction:
        """Positive rational c with ``self / c`` primitive over Z."""
        if not self.terms:
            return Fraction(1)
        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = reduce(igcd, nums)
        lcm = reduce(lambda a, b: a * b // igcd(a, b), dens)
        return Fraction(abs(g), lcm)

    def normalized(self) -> "Polynomial":
        """Integer primitive associate with positive lex-leading coefficient."""
        if not self.terms:
            return self
        c = self.content_scalar()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    # coefficient views ----------------------------------------------------

    def coefficients_in(self, i: int) -> Dict[int, "Polynomial"]:
        """Split as ``sum_k coeff_k * x_i^k`` with coefficients free of ``x_i``."""
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = 0
                f = tuple(f)
            else:
                f = e
            parts.setdefault(k, {})[f] = c
        return {k: Polynomial._raw(self.ring, t) for k, t in parts.items()}

    def evaluate(self, values: Mapping[int, Scalar]) -> "Polynomial":
        """Substitute rational values for some variables."""
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            f = list(e)
            for i, v in values.items():
                if f[i]:
                    c = c * Fraction(v) ** f[i]
                    f[i] = 0
            f = tuple(f)
            out[f] = out.get(f, 0) + c
        return Polynomial(self.ring, out)

    def __repr__(self) -> str:
        from .printing import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"


# gcd ----------------------------------------------------------------------


# The gcd works on integer-coefficient sparse dicts: inputs are made integer
# primitive first, and every pseudo-remainder is made primitive again, so the
# coefficients stay small and plain ``int`` arithmetic avoids Fraction overhead.

ZPoly = Dict[Exponent, int]


def _scaled_ints(terms: Dict[Exponent, Fraction]) -> Tuple[ZPoly, int]:
    """Integer numerators over a common denominator: terms == z / den."""
    den = 1
    for c in terms.values():
        k = c.denominator
        if k != 1:
            den = den * k // igcd(den, k)
    if den == 1:
        return {e: c.numerator for e, c in terms.items()}, 1
    return {e: c.numerator * (den // c.denominator) for e, c in terms.items()}, den


def _from_scaled(ring: VarTable, z: ZPoly, den: int) -> "Polynomial":
    if den == 1:
        return Polynomial._raw(ring, {e: Fraction(c) for e, c in z.items()})
    return Polynomial._raw(ring, {e: Fraction(c, den) for e, c in z.items()})


def _z_is_const(a: ZPoly) -> bool:
    return all(not any(e) for e in a)


def _z_sub(a: ZPoly, b: ZPoly) -> ZPoly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _z_mul(a: ZPoly, b: ZPoly) -> ZPoly:
    out: ZPoly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _z_primitive(a: ZPoly) -> ZPoly:
    """Divide by the integer content; make the lex-leading coefficient positive."""
    if not a:
        return a
    g = abs(reduce(igcd, a.values()))
    if a[max(a)] < 0:
        g = -g
    if g == 1:
        return a
    return {e: c // g for e, c in a.items()}


def _z_degree(a: ZPoly, i: int) -> int:
    return max(e[i] for e in a)


def _z_coefficients(a: ZPoly, i: int) -> Dict[int, ZPoly]:
    parts: Dict[int, ZPoly] = {}
    for e, c in a.items():
        f = e[:i] + (0,) + e[i + 1:]
        parts.setdefault(e[i], {})[f] = c
    return parts


def _z_exact_div(a: ZPoly, d: ZPoly) -> ZPoly:
    if len(d) == 1:
        ((f, dc),) = d.items()
        if f == (0,) * len(f) and dc == 1:
            return a
    lead_e = max(d)
    lead_c = d[lead_e]
    rem = dict(a)
    quot: ZPoly = {}
    while rem:
        e = max(rem)
        g = tuple(x - y for x, y in zip(e, lead_e))
        q, r = divmod(rem[e], lead_c)
        if r or min(g) < 0:
            raise ArithmeticError("inexact polynomial division")
        quot[g] = q
        for f, c in d.items():
            h = tuple(x + y for x, y in zip(f, g))
            v = rem.get(h, 0) - q * c
            if v:
                rem[h] = v
            else:
                rem.pop(h, None)
    return quot


def _z_prem(a: ZPoly, b: ZPoly, i: int) -> ZPoly:
    """Sparse pseudo-remainder of ``a`` by ``b`` as polynomials in ``x_i``."""
    db = _z_degree(b, i)
    lc = _z_coefficients(b, i)[db]
    r = a
    while r and _z_degree(r, i) >= db:
        dr = _z_degree(r, i)
        shift = dr - db
        rc = _z_coefficients(r, i)[dr]
        t = {e[:i] + (shift,) + e[i + 1:]: c for e, c in rc.items()}
        r = _z_sub(_z_mul(lc, r), _z_mul(t, b))
    return r


def _z_content(a: ZPoly, i: int) -> ZPoly:
    """Primitive gcd of the coefficients of ``a`` with respect to ``x_i``."""
    coeffs = sorted(_z_coefficients(a, i).values(), key=len)
    g = _z_primitive(coeffs[0])
    for c in coeffs[1:]:
        if _z_is_const(g):
            break
        g = _z_gcd(g, c)
    return g


def _z_shift(a: ZPoly, m: Exponent, sign: int) -> ZPoly:
    return {tuple(x + sign * y for x, y in zip(e, m)): c for e, c in a.items()}


def _z_divides(d: ZPoly, a: ZPoly) -> bool:
    """Trial division, skipped when a degree bound already rules it out."""
    n = len(next(iter(a)))
    if any(max(e[k] for e in d) > max(e[k] for e in a) for k in range(n)):
        return False
    try:
        _z_exact_div(a, d)
    except ArithmeticError:
        return False
    return True


def _z_gcd(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a:
        return _z_primitive(b)
    if not b:
        return _z_primitive(a)
    n = len(next(iter(a)))
    if _z_is_const(a) or _z_is_const(b):
        return {(0,) * n: 1}
    a, b = _z_primitive(a), _z_primitive(b)
    # monomial factors first: gcd = gcd of the monomials * gcd of the rest
    ma = tuple(min(e[k] for e in a) for k in range(n))
    mb = tuple(min(e[k] for e in b) for k in range(n))
    if any(ma) or any(mb):
        m = tuple(map(min, ma, mb))
        return _z_shift(_z_gcd(_z_shift(a, ma, -1), _z_shift(b, mb, -1)), m, 1)
    if a == b:
        return a
    va = {k for e in a for k, v in enumerate(e) if v}
    vb = {k for e in b for k, v in enumerate(e) if v}
    # a variable present in only one argument cannot occur in the gcd
    only = sorted(va ^ vb)
    if only:
        i = only[0]
        if i in va:
            return _z_gcd(_z_content(a, i), b)
        return _z_gcd(a, _z_content(b, i))
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    if _z_divides(small, big):
        return small
    try:
        return _z_primitive(_z_heuristic_gcd(a, b)[0])
    except _HeuristicFailed:
        return _z_prs_gcd(a, b, va)


def _z_prs_gcd(a: ZPoly, b: ZPoly, va) -> ZPoly:
    """Primitive PRS in the variable of lowest degree, recursing on contents."""
    n = len(next(iter(a)))
    i = min(va, key=lambda k: (min(_z_degree(a, k), _z_degree(b, k)), k))
    ca, cb = _z_content(a, i), _z_content(b, i)
    content = _z_gcd(ca, cb)
    a, b = _z_exact_div(a, ca), _z_exact_div(b, cb)
    if _z_degree(a, i) < _z_degree(b, i):
        a, b = b, a
    while True:
        r = _z_prem(a, b, i)
        if not r:
            g = b
            break
        if _z_degree(r, i) == 0:
            g = {(0,) * n: 1}
            break
        a, b = b, _z_primitive(_z_exact_div(r, _z_content(r, i)))
    g = _z_exact_div(g, _z_content(g, i))
    return _z_primitive(_z_mul(content, g))


# Heuristic gcd (Char, Geddes, Gonnet): evaluate one variable at a large
# integer, recurse, and lift the image back by symmetric xi-adic expansion.
# A lifted candidate is accepted only after exact trial division.


class _HeuristicFailed(Exception):
    pass


def _z_evaluate(a: ZPoly, v: int, xi: int) -> ZPoly:
    out: ZPoly = {}
    for e, c in a.items():
        f = e[:v] + (0,) + e[v + 1:]
        out[f] = out.get(f, 0) + c * xi ** e[v]
    return {e: c for e, c in out.items() if c}


def _z_interpolate(h: ZPoly, v: int, xi: int) -> ZPoly:
    out: ZPoly = {}
    half = xi // 2
    k = 0
    while h:
        digit = {}
        for e, c in h.items():
            r = c % xi
            if r > half:
                r -= xi
            if r:
                digit[e] = r
                out[e[:v] + (k,) + e[v + 1:]] = r
        h = {e: (c - digit.get(e, 0)) // xi for e, c in h.items() if c != digit.get(e, 0)}
        k += 1
    if out and out[max(out)] < 0:
        out = {e: -c for e, c in out.items()}
    return out


def _z_try_div(a: ZPoly, d: ZPoly) -> Optional[ZPoly]:
    if not d:
        return None
    try:
        return _z_exact_div(a, d)
    except ArithmeticError:
        return None


def _z_heuristic_gcd(f: ZPoly, g: ZPoly) -> Tuple[ZPoly, ZPoly, ZPoly]:
    """``(h, f / h, g / h)`` for nonzero ``f``, ``g``."""
    n = len(next(iter(f)))
    zero = (0,) * n
    occurring = {k for p in (f, g) for e in p for k, x in enumerate(e) if x}
    if not occurring:
        a, b = f[zero], g[zero]
        h = igcd(a, b)
        return {zero: h}, {zero: a // h}, {zero: b // h}
    v = max(occurring)
    c = igcd(reduce(igcd, f.values()), reduce(igcd, g.values()))
    f = {e: x // c for e, x in f.items()}
    g = {e: x // c for e, x in g.items()}
    fn = max(abs(x) for x in f.values())
    gn = max(abs(x) for x in g.values())
    bound = 2 * min(fn, gn) + 29
    xi = max(min(bound, 99 * isqrt(bound)), 2 * min(fn // abs(f[max(f)]), gn // abs(g[max(g)])) + 4)
    for _ in range(6):
        ff, gg = _z_evaluate(f, v, xi), _z_evaluate(g, v, xi)
        if ff and gg:
            h, cff, cfg = _z_heuristic_gcd(ff, gg)
            h = _z_primitive(_z_interpolate(h, v, xi))
            qf = _z_try_div(f, h)
            qg = _z_try_div(g, h) if qf is not None else None
            if qg is not None:
                return {e: x * c for e, x in h.items()}, qf, qg
            cff = _z_interpolate(cff, v, xi)
            h = _z_try_div(f, cff)
            qg = _z_try_div(g, h) if h is not None else None
            if qg is not None:
                return {e: x * c for e, x in h.items()}, cff, qg
            cfg = _z_interpolate(cfg, v, xi)
            h = _z_try_div(g, cfg)
            qf = _z_try_div(f, h) if h is not None else None
            if qf is not None:
                return {e: x * c for e, x in h.items()}, qf, cfg
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    raise _HeuristicFailed


def _to_z(p: Polynomial) -> ZPoly:
    z, _ = _scaled_ints(p.terms)
    g = abs(reduce(igcd, z.values()))
    return z if g == 1 else {e: c // g for e, c in z.items()}


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Greatest common divisor, integer primitive with positive leading coefficient.

    Computed on integer primitive parts: heuristic gcd by evaluation and
    interpolation, with a primitive remainder sequence as fallback.
    """
    _check_same(p, q)
    if not p.terms:
        return q.normalized()
    if not q.terms:
        return p.normalized()
    g = _z_gcd(_to_z(p), _to_z(q))
    return Polynomial._raw(p.ring, {e: Fraction(c) for e, c in g.items()})


def poly_lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    if not p or not q:
        return Polynomial.zero(p.ring)
    return (p * q).exact_div(poly_gcd(p, q)).normalized()


def _reduce_fraction(num: Polynomial, den: Polynomial) -> Tuple[Polynomial, Polynomial]:
    # num = a/da and den = b/db; cancel g = gcd(a, b) over Z (g is primitive,
    # so both quotients stay integral), then make the denominator primitive.
    a, da = _scaled_ints(num.terms)
    b, db = _scaled_ints(den.terms)
    g = _z_gcd(a, b)
    if not _z_is_const(g):
        a = _z_exact_div(a, g)
        b = _z_exact_div(b, g)
    cb = abs(reduce(igcd, b.values()))
    if b[max(b)] < 0:
        cb = -cb
    if cb != 1:
        b = {e: c // cb for e, c in b.items()}
    ring = num.ring
    scale = Fraction(db, da * cb)
    n, d = scale.numerator, scale.denominator
    return (
        _from_scaled(ring, {e: c * n for e, c in a.items()}, d),
        Polynomial._raw(ring, {e: Fraction(c) for e, c in b.items()}),
    )


# rational functions --------------------------------------------------------


class RationalFunction:
    """Reduced fraction ``num / den`` of polynomials.

    The denominator is kept integer-primitive with positive lex-leading
    coefficient, so equal values have identical representations.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Optional[Polynomial] = None, *, reduced: bool = False):
        if den is None:
            den = Polynomial.const(num.ring, 1)
        else:
            _check_same(num, den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self._hash = None
        if not num:
            self.num = num
            self.den = Polynomial.const(num.ring, 1)
            return
        if not reduced:
            if den.is_constant():
                num = num.scale(1 / den.constant_value())
                den = Polynomial.const(num.ring, 1)
            else:
                num, den = _reduce_fraction(num, den)
        self.num = num
        self.den = den

    @property
    def ring(self) -> VarTable:
        return self.num.ring

    @classmethod
    def const(cls, ring: VarTable, c: Scalar) -> "RationalFunction":
        return cls(Polynomial.const(ring, c), reduced=True)

    @classmethod
    def var(cls, ring: VarTable, name_or_index) -> "RationalFunction":
        return cls(Polynomial.var(ring, name_or_index), reduced=True)

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def constant_value(self) -> Fraction:
        if not self.den.is_one():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    def free_of(self, indices: Iterable[int]) -> bool:
        idx = tuple(indices)
        return self.num.free_of(idx) and self.den.free_of(idx)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Polynomial):
            return self.den.is_one() and self.num == other
        if isinstance(other, (int, Fraction)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            _check_same(self.num, other.num)
            return other
        if isinstance(other, Polynomial):
            _check_same(self.num, other)
            return RationalFunction(other, reduced=True)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den.is_one():
                return RationalFunction(self.num + other.num, self.den, reduced=True)
            return RationalFunction(self.num + other.num, self.den)
        if self.den.is_one():
            return RationalFunction(self.num * other.den + other.num, other.den)
        if other.den.is_one():
            return RationalFunction(self.num + other.num * self.den, self.den)
        g = poly_gcd(self.den, other.den)
        a = self.den.exact_div(g)
        b = other.den.exact_div(g)
        return RationalFunction(self.num * b + other.num * a, a * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, reduced=True)

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

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RationalFunction.const(self.ring, 0)
            return RationalFunction(self.num.scale(other), self.den, reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return RationalFunction.const(self.ring, 0)
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num * other.num, self.den, reduced=True)
        # cross-cancel keeps intermediate sizes down
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = self.num.exact_div(g1), other.den.exact_div(g1)
        n2, d1 = other.num.exact_div(g2), self.den.exact_div(g2)
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, reduced=True)

    def derivative(self, i: int) -> "RationalFunction":
        """Partial derivative with respect to variable index ``i`` (quotient rule)."""
        dn = self.num.derivative(i)
        if self.den.is_one():
            return RationalFunction(dn, self.den, reduced=True)
        dd = self.den.derivative(i)
        if not dd:
            return RationalFunction(dn, self.den)
        return RationalFunction(dn * self.den - self.num * dd, self.den * self.den)

    def evaluate(self, values: Mapping[int, Scalar]) -> "RationalFunction":
        return RationalFunction(self.num.evaluate(values), self.den.evaluate(values))

    def __repr__(self) -> str:
        from .printing import format_rational

        return f"RationalFunction({format_rational(self)!r})"


def poly_derivative(p: Polynomial, i: int) -> Polynomial:
    _check_derivation_index(p.ring, i)
    return p.derivative(i)


def rat_derivative(r: RationalFunction, i: int) -> RationalFunction:
    _check_derivation_index(r.ring, i)
    return r.derivative(i)


def _check_derivation_index(ring: VarTable, i: int) -> None:
    if not 0 <= i < len(ring):
        raise IndexError(f"variable index {i} out of range")
    if ring.is_param(i):
        raise ValueError(f"{ring.names[i]!r} is a parameter, not a differentiation variable")
