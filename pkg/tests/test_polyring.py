"""Sparse rational polynomials, division, and Buchberger postconditions."""

import random
from fractions import Fraction

import pytest

from ktoric import (
    BudgetExceededError,
    DegRevLex,
    Monomial,
    Poly,
    buchberger,
    build_presentation,
    cube,
    is_groebner,
    reduce,
    render_poly,
    s_polynomial,
    simplex,
    simplex_charmap,
    standard_monomials,
)
from ktoric.bott import BottMatrix, bott_charmap


def variables(n):
    return tuple(Poly.variable(n, i) for i in range(n))


def test_monomial_basics():
    m = Monomial((2, 1))
    assert m.degree == 3
    assert m.exponents == ((0, 2), (1, 1))
    assert m.pure_power() is None
    assert Monomial((3, 0)).pure_power() == (0, 3)
    assert Monomial((1, 1)).divides(m)
    assert m.divide(Monomial((1, 1))) == Monomial((1, 0))
    assert Monomial((0, 2)).lcm(Monomial((1, 1))) == Monomial((1, 2))


def test_poly_arithmetic():
    x, y = variables(2)
    o = DegRevLex.standard(2)
    assert render_poly((1 - x) * (1 + x), ("x", "y"), o) == "-x^2 + 1"
    assert render_poly((1 - x) ** 2, ("x", "y"), o) == "x^2 - 2*x + 1"
    assert ((x + y) - (x + y)).is_zero
    assert (x ** 0).terms == Poly.one(2).terms
    assert (Fraction(1, 2) * x + Fraction(1, 2) * x).terms == x.terms


def test_poly_universe_mismatch():
    with pytest.raises(ValueError):
        Poly.variable(2, 0) + Poly.variable(3, 0)


def test_degrevlex_tiebreak():
    # same degree: the variable later in priority decides, reversed sign
    o = DegRevLex.standard(2)
    x2, y2 = Monomial((1, 0)), Monomial((0, 1))
    assert o.key(x2) > o.key(y2)
    assert o.key(Monomial((0, 2))) < o.key(Monomial((1, 1)))


def test_degrevlex_priority_changes_leader():
    x, y = variables(2)
    p = x + y
    assert p.leading_monomial(DegRevLex((0, 1))) == Monomial((1, 0))
    assert p.leading_monomial(DegRevLex((1, 0))) == Monomial((0, 1))


def test_render_poly_coefficients():
    x, y = variables(2)
    o = DegRevLex.standard(2)
    p = Fraction(1, 2) * x - 3 * y + 1
    assert render_poly(p, ("x", "y"), o) == "1/2*x - 3*y + 1"
    assert render_poly(Poly.zero(2), ("x", "y"), o) == "0"


def test_reduce_examples():
    o = DegRevLex.standard(2)
    x, y = variables(2)
    assert reduce(x * x, [x * x], o).is_zero
    r = reduce(x * y + y, [x * y], o)
    assert r.terms == y.terms


def test_reduce_postcondition_no_divisible_terms():
    rng = random.Random(23)
    o = DegRevLex.standard(3)
    xs = variables(3)
    gens = [xs[0] * xs[1] - 1, xs[1] ** 2 + xs[2]]
    gb = buchberger(gens, o)
    for _ in range(15):
        p = Poly.zero(3)
        for _ in range(4):
            exps = tuple(rng.randint(0, 2) for _ in range(3))
            p = p + rng.randint(-3, 3) * Monomial_poly(exps)
        r = gb.reduce(p)
        for mono in r.terms:
            assert not any(lm.divides(mono) for lm in gb.leading_monomials())


def Monomial_poly(exps):
    out = Poly.one(len(exps))
    for i, e in enumerate(exps):
        out = out * Poly.variable(len(exps), i) ** e
    return out


def test_buchberger_already_groebner():
    o = DegRevLex.standard(2)
    x, y = variables(2)
    gb = buchberger([x * x, x * y], o)
    assert sorted(m.exponents for m in gb.leading_monomials()) == [
        ((0, 1), (1, 1)), ((0, 2),)]
    assert standard_monomials(gb) is None  # y**k never hits a leader


def test_buchberger_hand_example():
    o = DegRevLex.standard(2)
    x, y = variables(2)
    gb = buchberger([x - y, y * y], o)
    assert [render_poly(g, ("x", "y"), o) for g in gb.generators] == ["x - y", "y^2"]
    assert standard_monomials(gb) == (Monomial((0, 0)), Monomial((0, 1)))


def test_buchberger_principal_ideal_made_monic():
    o = DegRevLex.standard(2)
    x, y = variables(2)
    gb = buchberger([3 * x * y + 6], o)
    assert len(gb.generators) == 1
    assert render_poly(gb.generators[0], ("x", "y"), o) == "x*y + 2"


def test_buchberger_membership():
    o = DegRevLex.standard(3)
    xs = variables(3)
    gens = [xs[0] + xs[1] + xs[2], xs[0] * xs[1] - xs[2] ** 2]
    gb = buchberger(gens, o)
    for g in gens:
        assert gb.reduce(g).is_zero
    assert is_groebner(list(gb.generators), o)


def test_buchberger_s_polynomial_postcondition():
    # every pairwise S-polynomial of a finished basis reduces to zero
    o = DegRevLex.standard(3)
    xs = variables(3)
    gb = buchberger([xs[0] ** 2 + xs[1] * xs[2] - 1,
                     xs[0] * xs[1] + xs[2] ** 2,
                     xs[1] ** 2 - xs[0] * xs[2]], o)
    gens = list(gb.generators)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            sp = s_polynomial(gens[i], gens[j], o)
            assert reduce(sp, gens, o).is_zero


def test_buchberger_budget():
    o = DegRevLex.standard(3)
    xs = variables(3)
    gens = [xs[0] ** 2 + xs[1] * xs[2] - 1,
            xs[0] * xs[1] + xs[2] ** 2,
            xs[1] ** 2 - xs[0] * xs[2]]
    with pytest.raises(BudgetExceededError):
        buchberger(gens, o, budget=3)


def test_standard_monomials_unit_ideal():
    o = DegRevLex.standard(2)
    gb = buchberger([Poly.one(2)], o)
    assert standard_monomials(gb) == ()


def test_standard_monomials_cap():
    o = DegRevLex.standard(2)
    x, y = variables(2)
    gb = buchberger([x ** 100, y ** 100], o)
    with pytest.raises(BudgetExceededError):
        standard_monomials(gb, cap=50)


def test_reduce_idempotent_and_multiplicative():
    rng = random.Random(5)
    pres = build_presentation(simplex(2), simplex_charmap(2))
    gb = buchberger(list(pres.ideal_gens), pres.order)
    nvars = pres.nvars
    for _ in range(10):
        p = random_poly(rng, nvars)
        q = random_poly(rng, nvars)
        rp = gb.reduce(p)
        assert gb.reduce(rp).terms == rp.terms
        assert gb.reduce(p * q).terms == gb.reduce(gb.reduce(p) * gb.reduce(q)).terms


def random_poly(rng, nvars):
    p = Poly.zero(nvars)
    for _ in range(5):
        exps = tuple(rng.randint(0, 1) for _ in range(nvars))
        p = p + rng.randint(-2, 2) * Monomial_poly(exps)
    return p


def test_quotient_dimension_priority_independent():
    cases = []
    pres = build_presentation(simplex(2), simplex_charmap(2))
    cases.append((pres.ideal_gens, pres.nvars))
    p, lam = bott_charmap(BottMatrix.from_triples(2, [(1, 2, 1)]))
    pres2 = build_presentation(p, lam)
    cases.append((pres2.ideal_gens, pres2.nvars))
    for gens, nvars in cases:
        sizes = set()
        for priority in (tuple(range(nvars)), tuple(reversed(range(nvars)))):
            gb = buchberger(list(gens), DegRevLex(priority))
            sizes.add(len(standard_monomials(gb)))
        assert len(sizes) == 1
