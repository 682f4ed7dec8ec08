"""Command line front end.

Exit codes: 0 everything passed, 1 a mathematical check failed or a budget
ran out, 2 the input could not be parsed or had the wrong shape.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .bott import (
    bott_equivalence,
    bott_presentation,
    bott_samelson_presentation,
    involution_check,
    laurent_rank,
)
from .charmap import validate_charmap
from .errors import KtoricError
from .kring import CoefficientSpec, build_presentation, compute_basis
from .polyring import Poly, render_poly
from .polytope import order_vertices, validate_polytope


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _fraction_list(text):
    return tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())


def _scalar(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _text_lines(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return lines


def _emit(report, fmt):
    if fmt == "json":
        sys.stdout.write(jsonio.dumps(report))
    else:
        sys.stdout.write("\n".join(_text_lines(report)) + "\n")


def _default_functional(dim):
    return tuple(Fraction(1 << k) for k in range(dim))


def _projective_check(pres, basis):
    """When exactly one facet misses the base vertex and every dual covector
    takes -1 on its vector, the quotient satisfies one polynomial identity in
    the unit class of that facet; report whether it reduces to zero."""
    p = pres.polytope
    if p.facet_count != p.dim + 1:
        return None
    outside = [f for f in range(p.facet_count)
               if f not in p.vertices[pres.base_vertex]]
    f0 = outside[0]
    v0 = pres.charmap.vectors[f0]
    if any(u(v0) != -1 for u in pres.dual_covectors):
        return None
    d = p.facet_count
    y = 1 - Poly.variable(d, f0)
    rel = Poly.one(d)
    for r in (Fraction(1),) + pres.coeffs.values:
        rel = rel * (1 - r * y)
    return {
        "relation": render_poly(rel, pres.var_names, pres.order),
        "reduces_to_zero": basis.normal_form(rel).is_zero,
    }


def cmd_validate(args):
    p = jsonio.polytope_from_dict(_load_json(args.polytope))
    lam = jsonio.charmap_from_dict(_load_json(args.vectors))
    p_rep = validate_polytope(p)
    l_rep = validate_charmap(p, lam)
    _emit(jsonio.validate_report(p_rep, l_rep), args.format)
    return 0 if (p_rep.ok and l_rep.ok) else 1


def cmd_kring(args):
    p = jsonio.polytope_from_dict(_load_json(args.polytope))
    lam = jsonio.charmap_from_dict(_load_json(args.vectors))
    coeffs = CoefficientSpec.of(_fraction_list(args.r)) if args.r else None
    if args.order_file:
        vo = jsonio.vertex_order_from_dict(_load_json(args.order_file))
    else:
        functional = (_fraction_list(args.functional) if args.functional
                      else _default_functional(p.dim))
        vo = order_vertices(p, functional)
    base = lam.base_vertex if lam.base_vertex is not None else vo.order[0]
    pres = build_presentation(p, lam, coeffs, base)
    basis = compute_basis(pres, vo, budget=args.budget)
    report = jsonio.kring_report(pres, basis, validate_polytope(p),
                                 validate_charmap(p, lam),
                                 _projective_check(pres, basis))
    _emit(report, args.format)
    return 0


def cmd_bott(args):
    c = jsonio.bott_from_dict(_load_json(args.tower))
    pres = bott_presentation(c)
    rank = laurent_rank(pres, budget=args.budget)
    inv_ok = involution_check(pres, budget=args.budget)
    _emit(jsonio.bott_report(pres, rank, inv_ok), args.format)
    return 0 if (inv_ok and rank == 2 ** c.n) else 1


def cmd_bott_samelson(args):
    cw = jsonio.cartan_word_from_dict(_load_json(args.cartan), args.convention)
    pres = bott_samelson_presentation(cw)
    rank = laurent_rank(pres, budget=args.budget)
    inv_ok = involution_check(pres, budget=args.budget)
    _emit(jsonio.samelson_report(cw, pres, rank, inv_ok), args.format)
    return 0 if (inv_ok and rank == 2 ** pres.n) else 1


def cmd_compare(args):
    c = jsonio.bott_from_dict(_load_json(args.tower))
    rep = bott_equivalence(c, budget=args.budget)
    _emit(jsonio.compare_report(c, rep), args.format)
    return 0 if rep.ok else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ktoric",
        description="Exact quotient ring computations for labeled simple polytopes")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(sp, budget=True):
        sp.add_argument("--format", choices=("json", "text"), default="json",
                        help="output format (default json)")
        if budget:
            sp.add_argument("--budget", type=int, default=200000,
                            help="cap on basis-computation work (default 200000)")

    v = sub.add_parser("validate", help="check a polytope and its facet vectors")
    v.add_argument("polytope", help="polytope JSON file")
    v.add_argument("vectors", help="facet vector JSON file")
    add_common(v, budget=False)

    k = sub.add_parser("kring", help="compute the quotient ring and face basis")
    k.add_argument("polytope", help="polytope JSON file")
    k.add_argument("vectors", help="facet vector JSON file")
    k.add_argument("--r", default=None,
                   help="comma separated coefficients, one per base facet (default all 1)")
    k.add_argument("--functional", default=None,
                   help="comma separated height functional (default 1,2,4,...)")
    k.add_argument("--order-file", dest="order_file", default=None,
                   help="JSON file with an explicit vertex order")
    add_common(k)

    b = sub.add_parser("bott", help="relations and rank of a tower")
    b.add_argument("tower", help="tower JSON file")
    add_common(b)

    s = sub.add_parser("bott-samelson", help="tower relations from a word of simple roots")
    s.add_argument("cartan", help="Cartan data JSON file")
    s.add_argument("--convention", choices=("row", "col"), default=None,
                   help="pairing convention, overrides the file")
    add_common(s)

    c = sub.add_parser("compare", help="cross-check the two presentations of a tower")
    c.add_argument("tower", help="tower JSON file")
    add_common(c)
    return ap


_COMMANDS = {
    "validate": cmd_validate,
    "kring": cmd_kring,
    "bott": cmd_bott,
    "bott-samelson": cmd_bott_samelson,
    "compare": cmd_compare,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except KtoricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
