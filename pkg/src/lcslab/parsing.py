"""Parser for polynomial relations typed on the command line.

Grammar (EBNF)::

    expr    = term { ("+" | "-") term } ;
    term    = factor { "*" factor } ;
    factor  = [ "+" | "-" ] power ;
    power   = atom [ ("^" | "**") integer ] ;
    atom    = integer | variable | "(" expr ")" ;
    variable = "x" digit { digit } | "x" | "y" | "z" ;
    integer = digit { digit } ;

Variables are x1, x2, ... with x, y, z as aliases for x1, x2, x3.  The same
expression is read either in the free algebra (``*`` does not commute) or in
the polynomial ring.  Relations are separated by commas.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from lcslab.errors import PreconditionError, check_degree
from lcslab.ncalg import NcPoly

ALIASES = {"x": 1, "y": 2, "z": 3}
_VAR = re.compile(r"x([1-9][0-9]*)\Z")


def _var_index(name: str) -> int:
    if name in ALIASES:
        return ALIASES[name]
    m = _VAR.match(name)
    if not m:
        raise PreconditionError(f"unknown variable {name!r}; use x1, x2, ... or x, y, z")
    return int(m.group(1))


def _tree(text: str) -> ast.expr:
    if not isinstance(text, str) or not text.strip():
        raise PreconditionError("empty relation")
    if re.search(r"[^0-9a-z+\-*^() \t]", text):
        raise PreconditionError(f"unexpected character in {text!r}")
    try:
        return ast.parse(text.replace("^", "**"), mode="eval").body
    except SyntaxError as exc:
        raise PreconditionError(f"cannot parse {text!r}: {exc.msg}") from None


def _variables(node: ast.expr) -> set[int]:
    return {_var_index(n.id) for n in ast.walk(node) if isinstance(n, ast.Name)}


def _eval(node: ast.expr, n: int) -> NcPoly:
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return NcPoly.one(n).scale(node.value)
    if isinstance(node, ast.Name):
        return NcPoly.gen(_var_index(node.id) - 1, n)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, n)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = node.right
            if not (isinstance(e, ast.Constant) and type(e.value) is int and e.value >= 0):
                raise PreconditionError("exponents must be nonnegative integer literals")
            check_degree(e.value)
            return _eval(node.left, n) ** e.value
        a, b = _eval(node.left, n), _eval(node.right, n)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
    raise PreconditionError(f"unsupported syntax: {ast.unparse(node)!r}")


def split_relations(text: str) -> list[str]:
    return [t for t in (s.strip() for s in text.split(",")) if t]


def _nvars(trees: list[ast.expr], nvars: int | None) -> int:
    used = set().union(*(_variables(t) for t in trees)) if trees else set()
    need = max(used, default=1)
    if nvars is None:
        return need
    if nvars < need:
        raise PreconditionError(f"relation uses x{need} but only {nvars} variables were given")
    return nvars


def parse_nc(text: str, nvars: int | None = None) -> list[NcPoly]:
    """Relations as elements of the free algebra."""
    trees = [_tree(t) for t in split_relations(text)]
    if not trees:
        raise PreconditionError("no relations given")
    n = _nvars(trees, nvars)
    return [_eval(t, n) for t in trees]


def abelianize(p: NcPoly) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = {}
    for w, c in p.items():
        e = tuple(w.count(g) for g in range(p.ngens))
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def parse_commutative(text: str, nvars: int | None = None) -> tuple[int, list[dict]]:
    """Relations as polynomials: (number of variables, [exponent tuple -> coefficient])."""
    polys = parse_nc(text, nvars)
    return polys[0].ngens, [abelianize(p) for p in polys]
