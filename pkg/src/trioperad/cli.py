"""Command line interface.

Subcommands::

    cells        enumerate the basis cells of one polytope family
    tri          simplex-cell algebra: mul, boundary, check-relations,
                 check-dg, check-operad
    dend         tree algebra: mul, power, check-relations
    koszul       certify the relation-span duality
    complex      build a weight-graded chain complex and report on it
    series       print cell-counting series coefficients
    certify-all  run every certification in one pass

Payloads are JSON on stdout (``--format csv|text`` for the cells and
series tables).  Checking commands exit 0 iff the check passes; malformed
input exits 2 with a message citing the grammar.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cells as cells_mod
from . import complexes, dendriform, duality, trialgebra
from . import series as series_mod
from .linear import LinComb
from .series import TPoly, series_identities_report


# =====================================================================
# payload helpers
# =====================================================================


def _terms(lin: LinComb, key: str) -> list[dict]:
    out = [
        {"coeff": str(c), key: b.literal()}
        for b, c in sorted(lin.items(), key=lambda bc: str(bc[0]))
    ]
    return out


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, default=str))


def _cells_for(family: str, arity: int):
    if family == "subset":
        return cells_mod.enumerate_subset_cells(arity)
    if family == "tree":
        return cells_mod.enumerate_planar_trees(arity + 1)
    return cells_mod.enumerate_cube_cells(arity)


# =====================================================================
# subcommand implementations
# =====================================================================


def _cmd_cells(args) -> int:
    items = _cells_for(args.family, args.arity)
    by_degree: dict[int, int] = {}
    for c in items:
        by_degree[c.degree] = by_degree.get(c.degree, 0) + 1
    payload = {
        "family": args.family,
        "arity": args.arity,
        "count": len(items),
        "by_degree": by_degree,
        "cells": [c.literal() for c in items],
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        print("cell,degree")
        for c in items:
            print(f"{c.literal()},{c.degree}")
    else:
        for c in items:
            print(c.literal())
    return 0


def _cmd_tri_mul(args) -> int:
    x = cells_mod.parse_subset_cell(args.x)
    y = cells_mod.parse_subset_cell(args.y)
    result = trialgebra.CELL_OPS[args.op](x, y)
    _emit_json(
        {"op": args.op, "x": x.literal(), "y": y.literal(), "result": result.literal()}
    )
    return 0


def _cmd_tri_boundary(args) -> int:
    x = cells_mod.parse_subset_cell(args.cell)
    _emit_json(
        {"cell": x.literal(), "boundary": _terms(trialgebra.boundary(x), "cell")}
    )
    return 0


def _cmd_tri_check_relations(args) -> int:
    report = trialgebra.check_trialgebra_relations(args.max_arity)
    _emit_json(report)
    return 0 if report["passed"] else 1


def _cmd_tri_check_dg(args) -> int:
    report = trialgebra.check_dg_rules(args.max_arity)
    _emit_json(report)
    return 0 if report["discovery_passed"] else 1


def _cmd_tri_check_operad(args) -> int:
    report = trialgebra.check_operad_axioms(args.max_arity)
    _emit_json(report)
    return 0 if report["passed"] else 1


def _cmd_dend_mul(args) -> int:
    x = cells_mod.parse_tree(args.x)
    y = cells_mod.parse_tree(args.y)
    result = dendriform.DEND_OPS[args.op](x, y)
    _emit_json(
        {
            "op": args.op,
            "x": x.literal(),
            "y": y.literal(),
            "result": _terms(result, "tree"),
        }
    )
    return 0


def _cmd_dend_power(args) -> int:
    result = dendriform.star_power(args.n)
    _emit_json({"n": args.n, "count": len(result), "terms": _terms(result, "tree")})
    return 0


def _cmd_dend_check_relations(args) -> int:
    relations = dendriform.check_dendriform_relations(args.max_leaves)
    assoc = dendriform.star_associativity(args.max_leaves)
    payload = {
        "passed": relations["passed"] and assoc["passed"],
        "relations": relations,
        "star_associativity": assoc,
    }
    _emit_json(payload)
    return 0 if payload["passed"] else 1


def _cmd_koszul_certify(_args) -> int:
    report = duality.certify_duality()
    _emit_json(report)
    return 0 if report["passed"] else 1


def _cmd_complex_build(args) -> int:
    wanted = {p.strip() for p in args.report.split(",") if p.strip()}
    unknown = wanted - {"dims", "d2", "betti"}
    if unknown:
        raise ValueError(f"unknown report sections {sorted(unknown)}; use dims,d2,betti")
    gc = complexes.build_complex(args.family, args.weight)
    payload: dict = {"family": args.family, "weight": args.weight}
    ok = True
    hom = complexes.homology_ranks(gc) if "betti" in wanted else None
    if "dims" in wanted:
        payload["per_n"] = [
            {
                "n": n,
                "dim": len(basis),
                "rank_d": (hom["ranks"].get(n) if hom else None),
            }
            for n, basis in sorted(gc.levels.items())
        ]
    if "d2" in wanted:
        payload["d_squared_zero"] = gc.d_squared_zero
        ok = ok and gc.d_squared_zero
    if "betti" in wanted and hom is not None:
        payload["betti"] = hom["betti"]
    _emit_json(payload)
    return 0 if ok else 1


def _cmd_series(args) -> int:
    maker = {
        "delta": series_mod.f_delta,
        "stasheff": series_mod.f_stasheff,
        "cube": series_mod.f_cube,
    }[args.family]
    fs = maker(args.order)
    if args.t_eval is not None:
        q = Fraction(args.t_eval)
        values = fs.evaluate_t(q)
        rows = [(n, str(values[n])) for n in range(1, args.order + 1)]
        value_key = f"value at t={q}"
    else:
        rows = [(n, str(fs.coeffs[n])) for n in range(1, args.order + 1)]
        value_key = "coefficient"
    if args.format == "json":
        _emit_json(
            {
                "family": args.family,
                "order": args.order,
                "t_eval": args.t_eval,
                "coefficients": [{"n": n, value_key: v} for n, v in rows],
            }
        )
    elif args.format == "csv":
        print(f"n,{value_key}")
        for n, v in rows:
            print(f'{n},"{v}"')
    else:
        width = max(len(v) for _, v in rows)
        for n, v in rows:
            print(f"x^{n:<3} {v:>{width}}")
    return 0


# =====================================================================
# certify-all
# =====================================================================


def _dimensions_report() -> dict:
    """Free-algebra dimension bookkeeping against the closed forms."""
    tri_ok = True
    for n in range(1, 11):
        items = cells_mod.enumerate_subset_cells(n)
        by_degree: dict[int, int] = {}
        for c in items:
            by_degree[c.degree] = by_degree.get(c.degree, 0) + 1
        # ((1+t)^n - 1)/t has t^d coefficient binom(n, d+1)
        expected_poly = (TPoly.one_plus_t_power(n) - TPoly.const(1)).divexact(TPoly.t())
        got_poly = TPoly(
            tuple(by_degree.get(d, 0) for d in range(max(by_degree) + 1))
        )
        if len(items) != 2**n - 1 or got_poly != expected_poly:
            tri_ok = False
    dend_expected = {2: 1, 3: 3, 4: 11, 5: 45, 6: 197}
    dend_ok = all(
        len(cells_mod.enumerate_planar_trees(leaves)) == want
        for leaves, want in dend_expected.items()
    )
    cube_ok = True
    for n in range(1, 7):
        items = cells_mod.enumerate_cube_cells(n)
        by_degree = {}
        for c in items:
            by_degree[c.degree] = by_degree.get(c.degree, 0) + 1
        poly = TPoly(tuple(by_degree.get(d, 0) for d in range(n)))
        expected = TPoly.const(1)
        for _ in range(n - 1):
            expected = expected * TPoly((2, 1))
        if len(items) != 3 ** (n - 1) or poly != expected:
            cube_ok = False
    return {
        "passed": tri_ok and dend_ok and cube_ok,
        "trialgebra_dims_match": tri_ok,
        "dendriform_dims_match": dend_ok,
        "cube_dims_match": cube_ok,
    }


def certify_all(level: str = "quick") -> dict:
    """Every certification in one pass; quick caps complexes at weight 4,
    full at weight 5."""
    max_weight = 4 if level == "quick" else 5
    sections: dict[str, dict] = {}
    sections["operad_axioms"] = trialgebra.check_operad_axioms(6)
    sections["trialgebra_relations"] = trialgebra.check_trialgebra_relations(9)
    sections["dendriform_relations"] = dendriform.check_dendriform_relations(10)
    sections["star_associativity"] = dendriform.star_associativity(10)
    sections["generator_spans"] = dendriform.check_generator_spans(5)
    sections["dimensions"] = _dimensions_report()
    dg = trialgebra.check_dg_rules(6)
    sections["dg_rules"] = dict(
        dg,
        passed=dg["discovery_passed"] and dg["signed_mid_fails_on_generators"],
    )
    sections["duality"] = duality.certify_duality()
    families = {}
    for family in (complexes.SIMPLEX_FAMILY, complexes.TREE_FAMILY):
        per_weight = []
        for w in range(1, max_weight + 1):
            gc = complexes.build_complex(family, w)
            hom = complexes.homology_ranks(gc)
            good = gc.d_squared_zero and hom["betti"] == complexes.expected_betti(w)
            per_weight.append(
                {
                    "weight": w,
                    "dims": hom["dims"],
                    "betti": hom["betti"],
                    "d_squared_zero": gc.d_squared_zero,
                    "passed": good,
                }
            )
        families[family] = {
            "passed": all(e["passed"] for e in per_weight),
            "per_weight": per_weight,
        }
    sections["complexes"] = {
        "passed": all(f["passed"] for f in families.values()),
        **families,
    }
    sections["series"] = series_identities_report(12)
    return {
        "level": level,
        "passed": all(s["passed"] for s in sections.values()),
        "sections": sections,
    }


def _cmd_certify_all(args) -> int:
    report = certify_all(args.level)
    _emit_json(report)
    return 0 if report["passed"] else 1


# =====================================================================
# argument parsing
# =====================================================================


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trioperad",
        description="exact engine for the dual pair of three-product operads",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cells", help="enumerate basis cells")
    p.add_argument("--family", choices=["subset", "tree", "cube"], required=True)
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(fn=_cmd_cells)

    tri = sub.add_parser("tri", help="simplex-cell algebra").add_subparsers(
        dest="subcommand", required=True
    )
    p = tri.add_parser("mul", help="multiply two cells")
    p.add_argument("--op", choices=["left", "right", "mid"], required=True)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=_cmd_tri_mul)
    p = tri.add_parser("boundary", help="simplicial boundary of a cell")
    p.add_argument("cell")
    p.set_defaults(fn=_cmd_tri_boundary)
    p = tri.add_parser("check-relations", help="the eleven product relations")
    p.add_argument("--max-arity", type=int, default=9)
    p.set_defaults(fn=_cmd_tri_check_relations)
    p = tri.add_parser("check-dg", help="boundary/product rule discovery")
    p.add_argument("--max-arity", type=int, default=6)
    p.set_defaults(fn=_cmd_tri_check_dg)
    p = tri.add_parser("check-operad", help="operad associativity and units")
    p.add_argument("--max-arity", type=int, default=6)
    p.set_defaults(fn=_cmd_tri_check_operad)

    dend = sub.add_parser("dend", help="planar-tree algebra").add_subparsers(
        dest="subcommand", required=True
    )
    p = dend.add_parser("mul", help="multiply two trees")
    p.add_argument("--op", choices=["prec", "succ", "mid", "star"], required=True)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=_cmd_dend_mul)
    p = dend.add_parser("power", help="star power of the two-leaf generator")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_dend_power)
    p = dend.add_parser("check-relations", help="the seven relations + star assoc")
    p.add_argument("--max-leaves", type=int, default=10)
    p.set_defaults(fn=_cmd_dend_check_relations)

    koszul = sub.add_parser("koszul", help="relation-span duality").add_subparsers(
        dest="subcommand", required=True
    )
    p = koszul.add_parser("certify", help="full duality certificate")
    p.set_defaults(fn=_cmd_koszul_certify)

    comp = sub.add_parser("complex", help="weight-graded chain complexes").add_subparsers(
        dest="subcommand", required=True
    )
    p = comp.add_parser("build", help="assemble one complex and report")
    p.add_argument("--family", choices=["simplex", "tree"], required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--report", default="dims,d2,betti")
    p.set_defaults(fn=_cmd_complex_build)

    p = sub.add_parser("series", help="cell-counting series")
    p.add_argument("--family", choices=["delta", "stasheff", "cube"], required=True)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--t-eval", default=None)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("certify-all", help="run every certification")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.set_defaults(fn=_cmd_certify_all)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
