import json

import pytest

from ktoric import (
    BottMatrix,
    CharacteristicMap,
    bott_charmap,
    cube,
    product,
    product_charmap,
    simplex,
    simplex_charmap,
)


@pytest.fixture
def square_cyclic():
    """The square with facet vectors e1, -e1 + a*e2, e2, -e2, parametrized
    by the twist a. Base vertex is the origin corner."""

    def build(a):
        lam = CharacteristicMap(((1, 0), (-1, a), (0, 1), (0, -1)),
                                base_vertex=0)
        return cube(2), lam

    return build


@pytest.fixture
def prism():
    p = product(simplex(1), simplex(2))
    lam = product_charmap(simplex(1), simplex_charmap(1),
                          simplex(2), simplex_charmap(2))
    return p, lam


def write_json(path, data):
    path.write_text(json.dumps(data) + "\n")
    return str(path)


@pytest.fixture
def json_file(tmp_path):
    counter = [0]

    def write(data, name=None):
        counter[0] += 1
        name = name or f"input{counter[0]}.json"
        return write_json(tmp_path / name, data)

    return write


@pytest.fixture
def simplex_files(json_file):
    """Polytope and vector files for the n-simplex with the standard
    assignment, as the CLI would receive them."""

    def build(n, base_vertex=0):
        p = simplex(n)
        pd = {
            "dim": n,
            "facets": n + 1,
            "vertices": [sorted(v) for v in p.vertices],
            "coords": [[str(x) for x in pt] for pt in p.coords],
        }
        lam = simplex_charmap(n)
        ld = {"lambda": [list(v) for v in lam.vectors]}
        if base_vertex is not None:
            ld["base_vertex"] = base_vertex
        return json_file(pd, f"simplex{n}.json"), json_file(ld, f"simplex{n}_lam.json")

    return build


@pytest.fixture
def tower_files(json_file):
    def build(n, triples):
        return json_file({"n": n, "c": [list(t) for t in triples]},
                         f"tower{n}.json")

    return build
