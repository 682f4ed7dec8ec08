"""Input schemas and deterministic report dictionaries.

Key order in every report is fixed at construction so that serializing the
same computation twice gives byte-identical output. Rationals travel as
"p/q" strings, never floats.
"""

import json
from fractions import Fraction

from .bott import BottMatrix, CartanWord, cartan_matrix
from .charmap import CharacteristicMap
from .polyring import render_poly
from .polytope import SimplePolytope, VertexOrder


def format_rational(x):
    return str(Fraction(x))


def parse_rational(s):
    return Fraction(s)


def polytope_from_dict(data):
    vertices = tuple(frozenset(int(f) for f in v) for v in data["vertices"])
    coords = data.get("coords")
    if coords is not None:
        coords = tuple(tuple(parse_rational(x) for x in pt) for pt in coords)
    return SimplePolytope(int(data["dim"]), int(data["facets"]), vertices, coords)


def polytope_to_dict(p):
    out = {
        "dim": p.dim,
        "facets": p.facet_count,
        "vertices": [sorted(v) for v in p.vertices],
    }
    if p.coords is not None:
        out["coords"] = [[format_rational(x) for x in pt] for pt in p.coords]
    return out


def charmap_from_dict(data):
    vectors = tuple(tuple(int(x) for x in row) for row in data["lambda"])
    base = data.get("base_vertex")
    return CharacteristicMap(vectors, None if base is None else int(base))


def charmap_to_dict(lam):
    out = {"lambda": [list(v) for v in lam.vectors]}
    if lam.base_vertex is not None:
        out["base_vertex"] = lam.base_vertex
    return out


def bott_from_dict(data):
    return BottMatrix.from_triples(int(data["n"]), data.get("c", ()))


def bott_to_dict(c):
    return {"n": c.n, "c": [list(t) for t in c.triples()]}


def cartan_word_from_dict(data, convention=None):
    kind = str(data["type"])
    if convention is None:
        convention = data.get("convention", "row")
    word = tuple(int(w) for w in data["word"])
    if kind == "matrix":
        mat = tuple(tuple(int(x) for x in row) for row in data["matrix"])
    else:
        mat = cartan_matrix(kind, int(data["rank"]))
    return CartanWord(mat, word, convention)


def cartan_word_to_dict(cw):
    return {
        "type": "matrix",
        "rank": cw.rank,
        "matrix": [list(row) for row in cw.cartan],
        "word": list(cw.word),
        "convention": cw.convention,
    }


def vertex_order_from_dict(data):
    return VertexOrder.from_sequence(data["order"])


def _check_flags(report):
    return {c.name: bool(c.ok) for c in report.checks}


def _check_details(report):
    return {c.name: {"ok": bool(c.ok), "detail": c.detail} for c in report.checks}


def validate_report(polytope_rep, charmap_rep):
    return {
        "command": "validate",
        "ok": bool(polytope_rep.ok and charmap_rep.ok),
        "polytope": _check_details(polytope_rep),
        "lambda": _check_details(charmap_rep),
    }


def _sparse_structure(structure):
    if structure is None:
        return None
    out = []
    for i, row in enumerate(structure):
        for j, vec in enumerate(row):
            for k, val in enumerate(vec):
                if val:
                    out.append([i, j, k, format_rational(val)])
    return out


def kring_report(pres, basis, polytope_rep, charmap_rep, projective=None):
    report = {
        "command": "kring",
        "polytope": polytope_to_dict(pres.polytope),
        "lambda": charmap_to_dict(pres.charmap),
        "coefficients": [format_rational(v) for v in pres.coeffs.values],
        "base_vertex": pres.base_vertex,
        "variables": list(pres.var_names),
        "relations": [render_poly(g, pres.var_names, pres.order)
                      for g in pres.ideal_gens],
        "vertex_count": basis.m,
        "rank": basis.rank,
        "integral": pres.integral,
        "vertex_order": list(basis.vertex_order.order),
        "basis": [list(fs) for fs in basis.basis_facet_sets],
        "structure_constants": _sparse_structure(basis.structure),
        "change_determinant": (None if basis.change_det is None
                               else format_rational(basis.change_det)),
        "warnings": list(basis.warnings),
    }
    if projective is not None:
        report["projective_check"] = projective
    report["checks"] = {
        "polytope": _check_flags(polytope_rep),
        "lambda": _check_flags(charmap_rep),
    }
    return report


def _rendered_relations(pres):
    return [render_poly(g, pres.var_names, pres.order) for g in pres.ideal_gens]


def bott_report(pres, rank, involution_ok):
    return {
        "command": "bott",
        "input": bott_to_dict(pres.matrix),
        "variables": list(pres.var_names),
        "relations": _rendered_relations(pres),
        "rank": rank,
        "expected_rank": 2 ** pres.n,
        "involution_ok": bool(involution_ok),
    }


def samelson_report(cw, pres, rank, involution_ok):
    return {
        "command": "bott-samelson",
        "input": cartan_word_to_dict(cw),
        "matrix": bott_to_dict(pres.matrix),
        "variables": list(pres.var_names),
        "relations": _rendered_relations(pres),
        "notes": list(pres.notes),
        "rank": rank,
        "expected_rank": 2 ** pres.n,
        "involution_ok": bool(involution_ok),
    }


def compare_report(c, rep):
    return {
        "command": "compare",
        "input": bott_to_dict(c),
        "expected_rank": rep.expected_rank,
        "polytope_rank": rep.polytope_rank,
        "laurent_rank": rep.laurent_rank,
        "relations_zero": bool(rep.iso.relations_zero),
        "failed_relations": list(rep.iso.failed_relations),
        "transition_determinant": (None if rep.iso.change_det is None
                                   else format_rational(rep.iso.change_det)),
        "unimodular": rep.iso.unimodular,
        "isomorphic": bool(rep.ok),
    }


def dumps(report):
    return json.dumps(report, indent=2) + "\n"
