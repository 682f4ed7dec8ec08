"""The quotient ring attached to a labeled simple polytope.

One generator per facet. The ideal combines the monomials of facet sets with
empty intersection and, for each covector dual to the facet vectors at a
chosen base vertex, a relation between products of the unit classes 1 - x_j.
Classes of the faces ascending from each vertex give a distinguished module
basis; when all the coefficients are 1 it really is a basis over the
integers, and the structure constants come out integral.
"""

from dataclasses import dataclass
from fractions import Fraction

from .charmap import dual_basis, reindex_to_base, validate_charmap
from .errors import (
    InfiniteDimensionError,
    KtoricError,
    NoBaseVertexError,
    NotAUnitError,
    RankDeficientError,
    ValidationFailedError,
)
from .intlinalg import rat_det, rat_inverse, rat_rank, rat_solve
from .polyring import (
    DegRevLex,
    Monomial,
    Poly,
    buchberger,
    standard_monomials,
)
from .polytope import ascending_faces, minimal_nonfaces, validate_polytope


@dataclass(frozen=True)
class CoefficientSpec:
    """One nonzero rational per base facet. All ones is the integral case;
    anything else is a formal specialization and weakens what can be
    promised about ranks."""

    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if not vals:
            raise ValueError("at least one coefficient required")
        if any(v == 0 for v in vals):
            raise ValueError("coefficients must be nonzero")
        object.__setattr__(self, "values", vals)

    @property
    def integral(self):
        return all(v == 1 for v in self.values)

    @classmethod
    def ones(cls, n):
        return cls((Fraction(1),) * n)

    @classmethod
    def of(cls, seq):
        return cls(tuple(Fraction(v) for v in seq))


@dataclass(frozen=True, eq=False)
class SimplePresentation:
    """A bare generators-and-relations description, enough to act as the
    source of a ring map."""

    nvars: int
    ideal_gens: tuple
    order: DegRevLex
    var_names: tuple


def polynomial_presentation(ideal_gens, var_names=None):
    gens = tuple(ideal_gens)
    if not gens:
        raise ValueError("at least one relation required")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ValueError("relations live over different variable sets")
    if var_names is None:
        var_names = tuple(f"t{i}" for i in range(nvars))
    return SimplePresentation(nvars, gens, DegRevLex.standard(nvars),
                              tuple(var_names))


def _square_free(nvars, facets):
    fs = set(facets)
    mono = Monomial(tuple(1 if j in fs else 0 for j in range(nvars)))
    return Poly(nvars, {mono: 1})


def covector_relation(lam, u, coeffs, base_facets):
    """The relation a covector u imposes: the product of (1 - x_j)^{u(v_j)}
    over facets where u is positive equals the matching product where u is
    negative, scaled by the coefficient monomial of u."""
    d = len(lam.vectors)
    pos = Poly.one(d)
    neg = Poly.one(d)
    for j in range(d):
        e = u(lam.vectors[j])
        if e > 0:
            pos = pos * (1 - Poly.variable(d, j)) ** e
        elif e < 0:
            neg = neg * (1 - Poly.variable(d, j)) ** (-e)
    r_u = Fraction(1)
    for k, f in enumerate(base_facets):
        r_u *= coeffs.values[k] ** u(lam.vectors[f])
    return pos - r_u * neg


@dataclass(frozen=True, eq=False)
class KRingPresentation:
    polytope: object
    charmap: object
    coeffs: CoefficientSpec
    base_vertex: int
    base_facets: tuple
    dual_covectors: tuple
    priority: tuple
    order: DegRevLex
    nonface_gens: tuple
    covector_gens: tuple

    @property
    def nvars(self):
        return self.polytope.facet_count

    @property
    def ideal_gens(self):
        return self.nonface_gens + self.covector_gens

    @property
    def var_names(self):
        return tuple(f"x{j}" for j in range(self.polytope.facet_count))

    @property
    def integral(self):
        return self.coeffs.integral


def build_presentation(p, lam, coeffs=None, base_vertex=None):
    """Assemble the ideal for a validated polytope and facet assignment.

    Variables are ordered so the base vertex facets dominate; relations are
    the square-free monomials of the minimal empty-intersection facet sets
    followed by one relation per dual covector of the base vertex.
    """
    report = validate_polytope(p)
    if not report.ok:
        raise ValidationFailedError("polytope failed validation:\n" + str(report))
    report = validate_charmap(p, lam)
    if not report.ok:
        raise ValidationFailedError("facet vectors failed validation:\n" + str(report))
    if base_vertex is None:
        base_vertex = lam.base_vertex
    if base_vertex is None:
        raise NoBaseVertexError(
            "no base vertex on the facet assignment and none supplied")
    if coeffs is None:
        coeffs = CoefficientSpec.ones(p.dim)
    if len(coeffs.values) != p.dim:
        raise ValueError("one coefficient per base facet required")
    lam = reindex_to_base(p, lam, base_vertex)
    base_facets = tuple(sorted(p.vertices[base_vertex]))
    duals = dual_basis(p, lam)
    rest = tuple(j for j in range(p.facet_count) if j not in p.vertices[base_vertex])
    priority = base_facets + rest
    order = DegRevLex(priority)
    d = p.facet_count
    nonface_gens = tuple(_square_free(d, nf) for nf in minimal_nonfaces(p))
    covector_gens = tuple(
        covector_relation(lam, u, coeffs, base_facets) for u in duals)
    return KRingPresentation(p, lam, coeffs, base_vertex, base_facets, duals,
                             priority, order, nonface_gens, covector_gens)


def quotient_basis(pres, budget=200000, cap=100000):
    """Groebner basis of the ideal and the monomials spanning the quotient."""
    gb = buchberger(pres.ideal_gens, pres.order, budget)
    std = standard_monomials(gb, cap)
    if std is None:
        raise InfiniteDimensionError(
            "quotient is not a finite rank module; relations are missing")
    return gb, std


@dataclass(frozen=True, eq=False)
class BasisResult:
    """Everything computed for one presentation and vertex order: the
    quotient data, the face classes, and how the two express each other."""

    presentation: object
    groebner: object
    vertex_order: object
    std_monomials: tuple
    basis_monomials: tuple
    basis_facet_sets: tuple
    change: tuple
    change_inverse: tuple
    change_det: object
    rank: int
    structure: tuple
    warnings: tuple

    @property
    def m(self):
        return len(self.basis_monomials)

    def normal_form(self, p):
        return self.groebner.reduce(p)

    def std_coords(self, p):
        nf = self.groebner.reduce(p)
        index = {mono: i for i, mono in enumerate(self.std_monomials)}
        coords = [Fraction(0)] * len(self.std_monomials)
        for mono, c in nf.terms.items():
            i = index.get(mono)
            if i is None:
                raise KtoricError("normal form left the standard monomial span")
            coords[i] = c
        return tuple(coords)

    def basis_coords(self, p):
        if self.change_inverse is None:
            raise RankDeficientError(
                "face classes are not a basis here, coordinates are undefined")
        v = self.std_coords(p)
        return tuple(sum(row[i] * v[i] for i in range(len(v)))
                     for row in self.change_inverse)


def compute_basis(pres, vertex_order, budget=200000, cap=100000):
    """Quotient data plus the ascending-face module basis.

    The face classes must span; in the integral case they must be a basis,
    so a rank short of the vertex count raises. With other coefficients the
    shortfall is only recorded as a warning.
    """
    p = pres.polytope
    gb, std = quotient_basis(pres, budget, cap)
    m = p.vertex_count
    q = len(std)
    if q > m:
        raise KtoricError(
            f"quotient rank {q} exceeds the vertex count {m}; "
            "face classes cannot span")
    faces = ascending_faces(p, vertex_order)
    d = p.facet_count
    basis_facet_sets = []
    basis_monos = []
    for w in vertex_order.order:
        fs = faces[w].facet_set
        basis_facet_sets.append(tuple(sorted(fs)))
        basis_monos.append(Monomial(tuple(1 if j in fs else 0 for j in range(d))))

    index = {mono: i for i, mono in enumerate(std)}
    cols = []
    for mono in basis_monos:
        nf = gb.reduce(Poly(d, {mono: 1}))
        col = [Fraction(0)] * q
        for mo, c in nf.terms.items():
            col[index[mo]] = c
        cols.append(col)
    change = tuple(tuple(cols[k][i] for k in range(m)) for i in range(q))
    rank = rat_rank([list(row) for row in change])

    warnings = []
    if rank < m:
        if pres.integral:
            raise RankDeficientError(
                f"face classes have rank {rank}, below the vertex count {m}, "
                "with all coefficients 1")
        warnings.append(
            f"face classes have rank {rank} of {m}; no structure constants")

    inv = None
    det = None
    structure = None
    if rank == m:
        mat = [list(row) for row in change]
        det = rat_det(mat)
        inv = tuple(tuple(row) for row in rat_inverse(mat))
        structure = []
        for i in range(m):
            row_out = []
            for j in range(m):
                prod = Poly(d, {basis_monos[i] * basis_monos[j]: 1})
                nf = gb.reduce(prod)
                col = [Fraction(0)] * q
                for mo, c in nf.terms.items():
                    col[index[mo]] = c
                vec = tuple(sum(r[t] * col[t] for t in range(q)) for r in inv)
                if pres.integral and any(x.denominator != 1 for x in vec):
                    raise KtoricError(
                        "non integer structure constant with all coefficients 1; "
                        f"pair ({i},{j}) gave {vec}")
                row_out.append(vec)
            structure.append(tuple(row_out))
        structure = tuple(structure)

    return BasisResult(pres, gb, vertex_order, std, tuple(basis_monos),
                       tuple(basis_facet_sets), change, inv, det, rank,
                       structure, tuple(warnings))


def invert_unit(p, basis):
    """Inverse of the class of p in the quotient, by solving one linear
    system over the standard monomials."""
    gb = basis.groebner
    std = basis.std_monomials
    q = len(std)
    if q == 0:
        raise NotAUnitError("the quotient ring is zero")
    d = gb.nvars
    index = {mono: i for i, mono in enumerate(std)}
    cols = []
    for mono in std:
        nf = gb.reduce(p * Poly(d, {mono: 1}))
        col = [Fraction(0)] * q
        for mo, c in nf.terms.items():
            col[index[mo]] = c
        cols.append(col)
    mat = [[cols[j][i] for j in range(q)] for i in range(q)]
    target = index.get(Monomial.one(d))
    if target is None:
        raise NotAUnitError("1 is not a standard monomial here")
    rhs = [Fraction(1) if i == target else Fraction(0) for i in range(q)]
    sol = rat_solve(mat, rhs)
    if sol is None:
        raise NotAUnitError("element is not invertible in the quotient")
    return Poly(d, {std[j]: sol[j] for j in range(q)})


def evaluate_in_quotient(p, images, gb):
    """Substitute images for the variables of p and reduce. Powers of each
    image are cached and reduced as they grow, which keeps intermediate
    results inside the quotient's monomial span."""
    images = list(images)
    if len(images) != p.nvars:
        raise ValueError("one image per source variable required")
    nd = images[0].nvars if images else gb.nvars
    if any(im.nvars != nd for im in images):
        raise ValueError("images live over different variable sets")
    powers = [[Poly.one(nd), gb.reduce(im)] for im in images]

    def power(i, e):
        col = powers[i]
        while len(col) <= e:
            col.append(gb.reduce(col[-1] * col[1]))
        return col[e]

    total = Poly.zero(nd)
    for mono, coeff in p.terms.items():
        val = Poly.constant(nd, coeff)
        for i, e in mono.exponents:
            val = gb.reduce(val * power(i, e))
        total = total + val
    return gb.reduce(total)


@dataclass(frozen=True, eq=False)
class IsoReport:
    """Outcome of checking that generator images define an isomorphism."""

    relations_zero: bool
    failed_relations: tuple
    src_rank: int
    dst_rank: int
    spans: bool
    change_det: object
    integral: bool
    unimodular: object

    @property
    def ok(self):
        if not (self.relations_zero and self.spans
                and self.src_rank == self.dst_rank):
            return False
        if self.integral:
            return bool(self.unimodular)
        return True


def ring_map_check(src, images, dst_basis, budget=200000, cap=100000,
                   src_basis=None):
    """Does sending the i-th source variable to images[i] give an
    isomorphism onto the quotient behind dst_basis?

    Every source relation must land on zero, and the images of a module
    basis of the source must form a basis on the target side; with all
    coefficients 1 the transition matrix must also be unimodular. The source
    basis defaults to the standard monomials, which span the right lattice
    for monic integer presentations; when they do not (standard monomials of
    a rational basis can sit in a strictly finer lattice), pass the honest
    basis through src_basis.
    """
    images = tuple(images)
    if len(images) != src.nvars:
        raise ValueError("one image per source variable required")
    gb = dst_basis.groebner
    failed = []
    for idx, g in enumerate(src.ideal_gens):
        if not evaluate_in_quotient(g, images, gb).is_zero:
            failed.append(idx)
    src_gb = buchberger(src.ideal_gens, src.order, budget)
    src_std = standard_monomials(src_gb, cap)
    if src_std is None:
        raise InfiniteDimensionError("source quotient is not a finite rank module")
    src_rank = len(src_std)
    if src_basis is None:
        basis_elems = [Poly(src.nvars, {mono: 1}) for mono in src_std]
    else:
        basis_elems = [Poly(src.nvars, {e: 1}) if isinstance(e, Monomial) else e
                       for e in src_basis]
    m = dst_basis.m
    spans = False
    det = None
    unimod = None
    if dst_basis.change_inverse is not None and len(basis_elems) == m:
        cols = []
        for elem in basis_elems:
            img = evaluate_in_quotient(elem, images, gb)
            cols.append(dst_basis.basis_coords(img))
        mat = [[cols[j][i] for j in range(m)] for i in range(m)]
        det = rat_det(mat)
        spans = det != 0
        integer_entries = all(x.denominator == 1 for row in mat for x in row)
        unimod = spans and integer_entries and abs(det) == 1
    integral = dst_basis.presentation.integral
    return IsoReport(not failed, tuple(failed), src_rank, dst_basis.rank,
                     spans, det, integral, unimod)
