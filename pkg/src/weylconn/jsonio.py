"""JSON encoding of contexts, operators, matrices and connection systems.

Every rational function is stored as ``{"num": str, "den": str}`` using the
canonical printed form of the two polynomials.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .arith import RationalFunction
from .connection import ConnectionSystem
from .linalg import Matrix
from .parsing import parse_expr, parse_rational, parse_scalar
from .printing import format_element, format_polynomial
from .weyl import WeylContext, WeylElement


def _weight_str(w: Fraction) -> str:
    return str(w)


def context_to_json(ctx: WeylContext) -> Dict[str, Any]:
    return {
        "variables": list(ctx.variables),
        "parameters": list(ctx.params),
        "weights": [_weight_str(w) for w in ctx.weights],
    }


def context_from_json(d: Dict[str, Any]) -> WeylContext:
    return WeylContext(d["variables"], [Fraction(w) for w in d["weights"]], d.get("parameters", []))


def rational_to_json(r: RationalFunction) -> Dict[str, str]:
    return {"num": format_polynomial(r.num), "den": format_polynomial(r.den)}


def rational_from_json(d: Dict[str, str], ctx: WeylContext) -> RationalFunction:
    return parse_scalar(d["num"], ctx) / parse_scalar(d["den"], ctx)


def matrix_to_json(m: Matrix) -> List[List[Dict[str, str]]]:
    return [[rational_to_json(e) for e in row] for row in m.rows]


def matrix_from_json(rows, ctx: WeylContext) -> Matrix:
    return Matrix(ctx.table, [[rational_from_json(e, ctx) for e in row] for row in rows])


def connection_to_json(system: ConnectionSystem, groebner_basis: Sequence[WeylElement] = ()) -> Dict[str, Any]:
    d = context_to_json(system.ctx)
    d["groebner_basis"] = [format_element(g) for g in groebner_basis]
    d["basis"] = [format_element(b) for b in system.basis]
    d["matrices"] = [matrix_to_json(a) for a in system.matrices]
    return d


def connection_from_json(d: Dict[str, Any]) -> Tuple[ConnectionSystem, List[WeylElement]]:
    ctx = context_from_json(d)
    gb = [parse_expr(s, ctx) for s in d.get("groebner_basis", [])]
    basis = tuple(parse_rational(s, ctx) for s in d["basis"])
    mats = tuple(matrix_from_json(m, ctx) for m in d["matrices"])
    return ConnectionSystem(ctx, basis, mats), gb


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
