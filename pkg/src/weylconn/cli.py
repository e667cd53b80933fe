"""Command-line driver.

Exit codes: 0 on success, 1 on a mathematical failure (infinite rank, not a
basis), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import jsonio
from .connection import (
    NotABasis,
    connection_matrices,
    connection_matrices_in_basis,
    gauge_matrix,
    gauge_transform,
    is_epsilon_factorized,
    is_integrable,
    render_one_form,
)
from .groebner import InfiniteRank, WeylIdeal, buchberger, holonomic_rank, normal_form, standard_monomials
from .linalg import Matrix
from .parsing import ParseError, parse_expr, parse_list, parse_matrix
from .printing import format_element, format_matrix
from .weyl import RationalWeylElement, WeylContext

COMMANDS = (
    "gb",
    "rank",
    "standard-monomials",
    "normal-form",
    "connection",
    "connection-in-basis",
    "gauge-matrix",
    "gauge-transform",
    "check-integrable",
    "check-eps-factorized",
)

_HEADER = re.compile(r"^\s*([a-z_]+)\s*:(.*)$")
_LIST_KEYS = {"ideal": ";", "basis": ";", "gauge": ";"}


class InputError(Exception):
    pass


def read_input_file(path: str) -> Dict[str, str]:
    """``key: value`` lines; ``ideal:``, ``basis:`` and ``gauge:`` take the
    following lines (one generator, basis element or matrix row each)."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    out: Dict[str, str] = {}
    current: Optional[str] = None
    for raw in lines:
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m:
            key = m.group(1).replace("_", "-")
            value = m.group(2).strip()
            if key in _LIST_KEYS:
                current = key
                out[key] = value
            else:
                current = None
                out[key] = value
            continue
        if current is None:
            raise InputError(f"{path}: line outside a section: {raw!r}")
        sep = _LIST_KEYS[current]
        out[current] = f"{out[current]}{sep} {line.strip()}" if out[current] else line.strip()
    return out


def _split_names(s: Optional[str]) -> List[str]:
    return [t.strip() for t in s.split(",") if t.strip()] if s else []


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", help="input file with 'key: value' lines")
    common.add_argument("--vars", help="comma-separated variable names, e.g. x,y")
    common.add_argument("--params", help="comma-separated parameter names, e.g. eps")
    common.add_argument("--weights", help="comma-separated positive rationals (default all 1)")
    common.add_argument("--ideal", help="generators separated by ';'")
    common.add_argument("--format", choices=("text", "json"), default=None)

    parser = argparse.ArgumentParser(prog="weylconn", description="Connection matrices of D-ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "normal-form":
            p.add_argument("--element", help="operator to reduce")
        if name in ("connection-in-basis", "gauge-matrix", "check-integrable", "check-eps-factorized"):
            p.add_argument("--basis", help="basis elements separated by ';'")
        if name == "gauge-transform":
            p.add_argument("--gauge", help="matrix rows separated by ';', entries by ','")
        if name in ("gauge-transform", "check-integrable", "check-eps-factorized"):
            p.add_argument("--connection", help="JSON file written by 'connection --format json'")
        if name == "check-eps-factorized":
            p.add_argument("--param", help="parameter name")
        if name == "connection":
            p.add_argument("--one-form", action="store_true", help="display the matrix of one-forms")
    return parser


def _settings(args: argparse.Namespace) -> Dict[str, str]:
    settings: Dict[str, str] = read_input_file(args.file) if args.file else {}
    for key in ("vars", "params", "weights", "ideal", "format", "element", "basis", "gauge", "param", "connection"):
        v = getattr(args, key.replace("-", "_"), None)
        if v is not None:
            settings[key] = v
    return settings


def _context(settings: Dict[str, str]) -> WeylContext:
    variables = _split_names(settings.get("vars"))
    if not variables:
        raise InputError("no variables given (--vars)")
    params = _split_names(settings.get("params"))
    weights = _split_names(settings.get("weights")) or ["1"] * len(variables)
    try:
        weights = [Fraction(w) for w in weights]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"weights must be rationals: {settings.get('weights')!r}") from None
    try:
        return WeylContext(variables, weights, params)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from None


def _ideal(settings: Dict[str, str], ctx: WeylContext) -> WeylIdeal:
    if not settings.get("ideal"):
        raise InputError("no ideal given (--ideal)")
    try:
        return WeylIdeal(ctx, parse_list(settings["ideal"], ctx))
    except ParseError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _basis(settings: Dict[str, str], ctx: WeylContext):
    if not settings.get("basis"):
        raise InputError("no basis given (--basis)")
    return parse_list(settings["basis"], ctx)


def _load_connection(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read connection file {path}: {exc}") from None
    try:
        return jsonio.connection_from_json(data)
    except (KeyError, ValueError, AssertionError) as exc:
        raise InputError(f"malformed connection file {path}: {exc}") from None


def _system_text(system) -> str:
    blocks = []
    for v, a in zip(system.ctx.variables, system.matrices):
        blocks.append(f"A_{v} =\n{format_matrix(a.rows)}")
    return "\n".join(blocks)


def _system_json(system, gb=()) -> dict:
    return jsonio.connection_to_json(system, gb)


def _system_source(settings):
    """Connection system from --connection, or computed from the ideal (and basis)."""
    if settings.get("connection"):
        system, gb = _load_connection(settings["connection"])
        return system, gb
    ctx = _context(settings)
    ideal = _ideal(settings, ctx)
    gb = buchberger(ideal)
    if settings.get("basis"):
        return connection_matrices_in_basis(gb, _basis(settings, ctx)), gb.elements
    return connection_matrices(gb), gb.elements


def run(args: argparse.Namespace) -> str:
    settings = _settings(args)
    fmt = settings.get("format") or "text"
    if fmt not in ("text", "json"):
        raise InputError(f"unknown format {fmt!r}")
    cmd = args.command
    as_json = fmt == "json"

    if cmd in ("gauge-transform", "check-integrable", "check-eps-factorized"):
        system, gb = _system_source(settings)
        ctx = system.ctx
        if cmd == "gauge-transform":
            if not settings.get("gauge"):
                raise InputError("no gauge matrix given (--gauge)")
            g = Matrix(ctx.table, parse_matrix(settings["gauge"], ctx))
            try:
                out = gauge_transform(g, system)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            if as_json:
                d = _system_json(out, gb)
                d["gauge_matrix"] = jsonio.matrix_to_json(g)
                return jsonio.dumps(d)
            return _system_text(out) + "\n"
        if cmd == "check-integrable":
            ok = is_integrable(system)
            if as_json:
                return jsonio.dumps({**jsonio.context_to_json(ctx), "integrable": ok})
            return ("true" if ok else "false") + "\n"
        param = settings.get("param")
        if not param:
            raise InputError("no parameter given (--param)")
        try:
            res = is_epsilon_factorized(system, param)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if as_json:
            return jsonio.dumps({**jsonio.context_to_json(ctx), "parameter": param,
                                 "factorized": res.factorized, "k": res.k})
        return ("true" if res else "false") + (f"\nk = {res.k}" if res else "") + "\n"

    ctx = _context(settings)
    ideal = _ideal(settings, ctx)
    head = jsonio.context_to_json(ctx)

    if cmd == "gb":
        gb = buchberger(ideal)
        if as_json:
            return jsonio.dumps({**head, "groebner_basis": [format_element(g) for g in gb]})
        return "".join(format_element(g) + "\n" for g in gb)

    if cmd == "rank":
        r = holonomic_rank(ideal)
        text = "infinity" if r == math.inf else str(r)
        if as_json:
            return jsonio.dumps({**head, "rank": text if r == math.inf else r})
        return text + "\n"

    if cmd == "standard-monomials":
        betas = standard_monomials(ideal)
        names = [format_element(RationalWeylElement.from_coefficient(ctx, 1, b)) for b in betas]
        if as_json:
            return jsonio.dumps({**head, "standard_monomials": names})
        return "{" + ", ".join(names) + "}\n"

    if cmd == "normal-form":
        if not settings.get("element"):
            raise InputError("no element given (--element)")
        p = parse_expr(settings["element"], ctx)
        gb = buchberger(ideal)
        nf = normal_form(p, gb)
        if as_json:
            terms = [{"monomial": format_element(RationalWeylElement.from_coefficient(ctx, 1, b)),
                      "coefficient": jsonio.rational_to_json(c)} for b, c in nf.sorted_terms()]
            return jsonio.dumps({**head, "groebner_basis": [format_element(g) for g in gb],
                                 "normal_form": format_element(nf), "terms": terms})
        return format_element(nf) + "\n"

    if cmd == "connection":
        gb = buchberger(ideal)
        system = connection_matrices(gb)
        if as_json:
            return jsonio.dumps(_system_json(system, gb.elements))
        if getattr(args, "one_form", False):
            return str(render_one_form(system)) + "\n"
        return _system_text(system) + "\n"

    if cmd == "connection-in-basis":
        gb = buchberger(ideal)
        system = connection_matrices_in_basis(gb, _basis(settings, ctx))
        if as_json:
            return jsonio.dumps(_system_json(system, gb.elements))
        return _system_text(system) + "\n"

    if cmd == "gauge-matrix":
        gb = buchberger(ideal)
        g = gauge_matrix(gb, _basis(settings, ctx))
        if as_json:
            return jsonio.dumps({**head, "groebner_basis": [format_element(e) for e in gb],
                                 "basis": [format_element(b) for b in _basis(settings, ctx)],
                                 "gauge_matrix": jsonio.matrix_to_json(g)})
        return format_matrix(g.rows) + "\n"

    raise InputError(f"unknown command {cmd!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        out = run(args)
    except (InfiniteRank, NotABasis) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
