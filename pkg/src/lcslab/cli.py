"""Command-line entry point: ``lcslab <group> <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from lcslab import charmod, derham, fs, lcs, lie, verify
from lcslab.errors import LcsLabError, PreconditionError, degree_ceiling
from lcslab.lcs import AlgebraSpec
from lcslab.ncalg import from_json, to_json_obj
from lcslab.parsing import parse_commutative, parse_nc


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(obj, fmt: str, out) -> None:
    obj = _jsonable(obj)
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
        return
    rows = obj if isinstance(obj, list) else obj.get("rows") if isinstance(obj, dict) and "rows" in obj else [obj]
    if not rows:
        return
    fields = list(rows[0].keys())
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    out.write(buf.getvalue())


def _spec(n: int, nilpotent: tuple[int, ...] | None) -> AlgebraSpec:
    return AlgebraSpec(n, nilpotent) if nilpotent else AlgebraSpec.free(n)


# -- lcs -----------------------------------------------------------------------


def cmd_lcs_dims(a):
    spec = _spec(a.n, a.nilpotent)
    return {
        "n": a.n,
        "k": a.k,
        "deg": list(a.deg),
        "dim_L": lcs.lcs_dim(spec, a.k, a.deg),
        "dim_B": lcs.b_dim(spec, a.k, a.deg),
    }


def cmd_lcs_b2_basis(a):
    basis = lcs.canonical_b2_basis(a.n, a.deg)
    return {
        "n": a.n,
        "deg": list(a.deg),
        "basis": [to_json_obj(b) for b in basis],
        "pretty": [b.pretty() for b in basis],
        "rank_mod_L3": lcs.b2_basis_rank(a.n, a.deg),
    }


def cmd_lcs_table(a):
    spec = _spec(a.n, a.nilpotent)
    names = ["deg_x", "deg_y"] if a.n == 2 else [f"deg_{i + 1}" for i in range(a.n)]
    rows = []
    for k in range(1, a.kmax + 1):
        for total in range(1, a.degmax + 1):
            for d in sorted(lcs.total_degree_multidegrees(a.n, total)):
                row = {"k": k, **dict(zip(names, d)), "dim": lcs.b_dim(spec, k, d)}
                rows.append(row)
    return rows


# -- forms ---------------------------------------------------------------------


def cmd_forms_closed_dim(a):
    return {
        "n": a.n,
        "p": a.p,
        "deg": list(a.deg),
        "closed_dim": derham.closed_dim(a.n, a.p, a.deg),
        "exact_dim": derham.exact_dim(a.n, a.p, a.deg),
    }


def cmd_forms_epsilon(a):
    e = derham.epsilon_matrix(a.n)
    return {
        "n": a.n,
        "rows": [list(p) for p in e.rows],
        "columns": [list(s) for s in e.columns],
        "matrix": [list(r) for r in e.matrix],
        "determinant": e.determinant,
    }


def _quotient(relations: str, nvars: int | None):
    n, polys = parse_commutative(relations, nvars)
    return derham.DGQuotientSpec.from_polynomials(polys, n)


def cmd_forms_ra(a):
    spec = _quotient(a.relations, a.nvars)
    t = derham.quotient_table(spec, a.cutoff)
    label = "parity" if t.by_parity else "p"
    rows = []
    for D in t.reliable:
        for b in t.blocks:
            rows.append(
                {
                    "degree_le": D,
                    label: b,
                    "dim": t.quotient_dim(b, D),
                    "closed": t.closed_dim(b, D),
                    "exact": t.exact_dim(b, D),
                    "cohomology": t.cohomology_dim(b, D),
                }
            )
    return {
        "nvars": spec.nvars,
        "cutoff": a.cutoff,
        "note": f"cumulative in weight; degrees >= {a.cutoff} are not reported",
        "rows": rows,
    }


# -- fs ------------------------------------------------------------------------


def cmd_fs_phi(a):
    p = from_json(a.poly, a.n)
    img = fs.phi(p, a.n)
    terms = [
        {"exps": list(e), "dx": [i + 1 for i in derham.mask_indices(m)], "coeff": c}
        for (e, m), c in img.sorted_terms()
    ]
    return {"n": a.n, "terms": terms, "pretty": img.pretty()}


def cmd_fs_b2(a):
    rels = parse_nc(a.relations, a.nvars)
    spec = fs.relation_spec_from_nc(rels)
    rows = [
        {
            "degree_le": r.degree,
            "exact_even": r.exact_even,
            "odd_cohomology": r.odd_cohomology,
            "b2": r.b2,
            "upper_bound": r.upper_bound,
        }
        for r in fs.pseudosmooth_b2_dims(spec, a.cutoff)
    ]
    return {
        "cutoff": a.cutoff,
        "note": "smoothness is assumed, not checked; with odd cohomology b2 is an upper bound",
        "rows": rows,
    }


def cmd_fs_check(a):
    spec = _spec(a.n, a.nilpotent)
    rows = []
    for total in range(1, a.degmax + 1):
        for d in sorted(lcs.total_degree_multidegrees(a.n, total)):
            if a.which == "tripcom":
                lhs, rhs = fs.triple_quotient_dim(spec, d), fs.even_ra_dim(spec, d)
            elif a.which == "imd":
                lhs, rhs = fs.commutator_image_dim(spec, d), fs.exact_even_ra_dim(spec, d)
            else:
                lhs, rhs = fs.hc1_dim(spec, d), 0
            rows.append({"deg": list(d), "lhs": lhs, "rhs": rhs, "ok": lhs == rhs})
    return {"check": a.which, "all_ok": all(r["ok"] for r in rows), "rows": rows}


# -- char ----------------------------------------------------------------------


def _series_rows(s: charmod.CharSeries):
    return [{"a": a, "b": b, "dim": v} for (a, b), v in sorted(s.coeffs.items())]


def cmd_char_f(a):
    s = charmod.char_F(a.p, a.k, a.trunc)
    return {"diagram": [a.p, a.k], "truncation": a.trunc, "rows": _series_rows(s)}


def cmd_char_b(a):
    s = charmod.char_B(a.k, a.trunc)
    return {"k": a.k, "truncation": a.trunc, "rows": _series_rows(s)}


def cmd_char_decompose(a):
    s = charmod.char_B(a.k, a.trunc)
    try:
        dec = charmod.decompose(s, a.margin)
    except charmod.DecompositionError as exc:
        return {"k": a.k, "truncation": a.trunc, "remainder_zero": False, "error": str(exc), "rows": []}
    return {
        "k": a.k,
        "truncation": a.trunc,
        "remainder_zero": True,
        "certified_p_plus_k_le": dec.certified_up_to,
        "rows": dec.as_list(),
    }


# -- lie -----------------------------------------------------------------------


def cmd_lie_nu(a):
    R = lie.root_system(a.type)
    F = lie.zero_sum_poly(R)
    return {"type": R.name, "nu": F(1), "F": list(F.coeffs)}


def cmd_lie_b2_invariant(a):
    R = lie.root_system(a.type)
    r = lie.b2_invariant(R)
    out = {"type": R.name, "nu": r.nu, "weyl": r.weyl, "dim_b2_invariant": r.dim_b2_invariant}
    if R.name not in ("A1", "A2", "A3"):
        out["note"] = "extrapolation: no published value to compare against"
    return out


def cmd_lie_chi(a):
    return {"d": a.d, "n": a.n, "chi": lie.euler_char(a.d, a.n), "b2": lie.b2_hypersurface(a.d, a.n)}


def cmd_lie_curve(a):
    return {"d": a.d, "b2": lie.b2_plane_curve(a.d)}


def cmd_lie_superelliptic(a):
    return {"m": a.m, "p": list(a.p), "b2": lie.b2_superelliptic(a.m, a.p)}


# -- verify --------------------------------------------------------------------


def cmd_verify(a):
    results = verify.run_suite(a.suite, a.degmax)
    rows = [
        {
            "id": r.check.id,
            "tag": r.check.tag,
            "name": r.check.name,
            "passed": r.passed,
            "detail": r.detail,
        }
        for r in results
    ]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.check.id:2d} {r.check.name} ({r.seconds:.2f}s)", file=sys.stderr)
    return {"suite": a.suite, "all_passed": all(r.passed for r in results), "rows": rows}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = argparse.ArgumentParser(
        prog="lcslab",
        description="Lower central series of free algebras and related computations. "
        f"Total degrees above the ceiling ({degree_ceiling()}, env LCSLAB_DEGREE_CEILING) are refused.",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    def add(sub, name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    g = groups.add_parser("lcs", help="lower central series components").add_subparsers(
        dest="cmd", required=True
    )
    p = add(g, "dims", cmd_lcs_dims, "dim L_k[d] and B_k[d]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--deg", type=_ints, required=True)
    p.add_argument("--nilpotent", type=_ints, help="relations x_i^{m_i} = 0, as m_1,...,m_n")
    p = add(g, "b2-basis", cmd_lcs_b2_basis, "canonical basis brackets of B_2[d]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deg", type=_ints, required=True)
    p = add(g, "table", cmd_lcs_table, "table of dim B_k[d]")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--degmax", type=int, required=True)
    p.add_argument("--nilpotent", type=_ints)

    g = groups.add_parser("forms", help="polynomial differential forms").add_subparsers(
        dest="cmd", required=True
    )
    p = add(g, "closed-dim", cmd_forms_closed_dim, "closed p-forms at a multidegree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--deg", type=_ints, required=True)
    p = add(g, "epsilon", cmd_forms_epsilon, "sign matrix of the canonical brackets")
    p.add_argument("--n", type=int, required=True)
    p = add(g, "rA", cmd_forms_ra, "forms modulo a differential ideal, cumulative in weight")
    p.add_argument("--relations", required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--nvars", type=int)

    g = groups.add_parser("fs", help="the Feigin-Shoikhet map and B_2 of quotients").add_subparsers(
        dest="cmd", required=True
    )
    p = add(g, "phi", cmd_fs_phi, "image of a noncommutative polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", required=True, help='JSON like [{"word": [1, 2], "coeff": "1"}]')
    p = add(g, "b2", cmd_fs_b2, "B_2 of a quotient by noncommutative relations")
    p.add_argument("--relations", required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--nvars", type=int)
    p = add(g, "check", cmd_fs_check, "brute-force checks per multidegree")
    p.add_argument("which", choices=("tripcom", "imd", "hc1"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degmax", type=int, required=True)
    p.add_argument("--nilpotent", type=_ints)

    g = groups.add_parser("char", help="character series").add_subparsers(dest="cmd", required=True)
    p = add(g, "F", cmd_char_f, "character of the module for diagram (p, k)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trunc", type=int, default=8)
    p = add(g, "B", cmd_char_b, "character of B_k of the free algebra on two generators")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trunc", type=int, default=8)
    p = add(g, "decompose", cmd_char_decompose, "decompose the character of B_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trunc", type=int, default=8)
    p.add_argument("--margin", type=int, default=charmod.SAFETY_MARGIN)

    g = groups.add_parser("lie", help="root systems and closed formulas").add_subparsers(
        dest="cmd", required=True
    )
    p = add(g, "nu", cmd_lie_nu, "zero-sum subsets of the roots")
    p.add_argument("--type", required=True)
    p = add(g, "b2-invariant", cmd_lie_b2_invariant, "dimension of G-invariants of B_2")
    p.add_argument("--type", required=True)
    p = add(g, "chi", cmd_lie_chi, "Euler characteristic and B_2 of a hypersurface")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = add(g, "curve", cmd_lie_curve, "B_2 of a smooth plane curve of degree d")
    p.add_argument("--d", type=int, required=True)
    p = add(g, "superelliptic", cmd_lie_superelliptic, "B_2 of y^m = prod (x - a_i)^{p_i}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=_ints, required=True)

    p = groups.add_parser("verify", parents=[common], help="run the acceptance checks")
    p.add_argument("--suite", choices=sorted(verify.SUITES), default="all")
    p.add_argument("--degmax", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (LcsLabError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(result, args.format, sys.stdout)
    if args.func is cmd_verify and not result["all_passed"]:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
