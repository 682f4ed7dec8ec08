"""Exact multivariate polynomials, division, and Groebner bases.

Coefficients are rational, monomials are dense exponent tuples over a fixed
number of variables. Everything here is deterministic: ties are broken by the
monomial order and then by generator position, so repeated runs produce
identical bases.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .errors import BudgetExceededError


class Monomial:
    __slots__ = ("exps", "_hash")

    def __init__(self, exps):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_hash", hash(exps))

    def __setattr__(self, name, value):
        raise AttributeError("monomials are immutable")

    @classmethod
    def one(cls, nvars):
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, nvars, index, power=1):
        if not 0 <= index < nvars:
            raise ValueError("variable index out of range")
        return cls(tuple(power if i == index else 0 for i in range(nvars)))

    @property
    def nvars(self):
        return len(self.exps)

    @property
    def degree(self):
        return sum(self.exps)

    @property
    def exponents(self):
        """Sparse view: (index, exponent) for the variables that occur."""
        return tuple((i, e) for i, e in enumerate(self.exps) if e)

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def divide(self, other):
        """self / other, assuming other divides self."""
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other):
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def pure_power(self):
        """(index, exponent) when only one variable occurs, else None."""
        nz = self.exponents
        return nz[0] if len(nz) == 1 else None

    def permute(self, perm):
        """Relabel variables: old index i becomes perm[i]."""
        out = [0] * len(self.exps)
        for i, e in enumerate(self.exps):
            out[perm[i]] = e
        return Monomial(tuple(out))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self.exps})"


class DegRevLex:
    """Degree order refined reverse-lexicographically.

    priority lists variable indices from most to least significant. Two
    orders compare equal exactly when their priorities do; keys are cached
    per exponent tuple since reductions revisit the same monomials often.
    """

    __slots__ = ("priority", "_rev", "_cache")

    def __init__(self, priority):
        priority = tuple(int(i) for i in priority)
        if sorted(priority) != list(range(len(priority))):
            raise ValueError("priority must be a permutation of the variables")
        self.priority = priority
        self._rev = tuple(reversed(priority))
        self._cache = {}

    @classmethod
    def standard(cls, nvars):
        return cls(range(nvars))

    def key(self, mono):
        exps = mono.exps
        k = self._cache.get(exps)
        if k is None:
            k = (sum(exps), tuple(-exps[p] for p in self._rev))
            self._cache[exps] = k
        return k

    def __eq__(self, other):
        return isinstance(other, DegRevLex) and self.priority == other.priority

    def __hash__(self):
        return hash(self.priority)

    def __repr__(self):
        return f"DegRevLex({self.priority})"


class Poly:
    """A polynomial as a monomial-to-coefficient map. Zero coefficients are
    never stored; the zero polynomial has an empty map."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=()):
        self.nvars = int(nvars)
        clean = {}
        for mono, coeff in dict(terms).items():
            if not isinstance(mono, Monomial):
                mono = Monomial(mono)
            if mono.nvars != self.nvars:
                raise ValueError("monomial has the wrong number of variables")
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls._raw(nvars, {Monomial.one(nvars): Fraction(1)})

    @classmethod
    def constant(cls, nvars, c):
        c = Fraction(c)
        return cls._raw(nvars, {Monomial.one(nvars): c} if c else {})

    @classmethod
    def variable(cls, nvars, index):
        return cls._raw(nvars, {Monomial.variable(nvars, index): Fraction(1)})

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, mono):
        return self.terms.get(mono, Fraction(0))

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live over different variable sets")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, Fraction(0)) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._raw(self.nvars, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Poly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return Poly.constant(self.nvars, other).__sub__(self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            if not c:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {m: co * c for m, co in self.terms.items()})
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(self.nvars, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = Poly.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def mul_term(self, mono, coeff):
        coeff = Fraction(coeff)
        if not coeff:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars,
                         {m * mono: c * coeff for m, c in self.terms.items()})

    def permute_vars(self, perm):
        return Poly._raw(self.nvars,
                         {m.permute(perm): c for m, c in self.terms.items()})

    def leading_monomial(self, order):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order):
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return Poly._raw(self.nvars, {m: c / lc for m, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.nvars == other.nvars
                and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        parts = [f"{c}*{m.exps}" for m, c in sorted(
            self.terms.items(), key=lambda t: t[0].exps)]
        return "Poly(" + " + ".join(parts) + ")"


class _Budget:
    """Counts division steps; raises once the allowance is spent."""

    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def spend(self):
        if self.left <= 0:
            raise BudgetExceededError(
                "reduction budget exhausted; raise the budget to continue")
        self.left -= 1


def _reduce(p, gens, order, budget=None):
    nvars = p.nvars
    remainder = {}
    work = dict(p.terms)
    lms = [(g.leading_monomial(order), g) for g in gens]
    while work:
        mono = max(work, key=order.key)
        coeff = work.pop(mono)
        for lm, g in lms:
            if lm.divides(mono):
                if budget is not None:
                    budget.spend()
                factor = mono.divide(lm)
                scale = coeff / g.terms[lm]
                for m2, c2 in g.terms.items():
                    if m2 is lm or m2 == lm:
                        continue
                    m = m2 * factor
                    s = work.get(m, Fraction(0)) - scale * c2
                    if s:
                        work[m] = s
                    else:
                        work.pop(m, None)
                break
        else:
            remainder[mono] = coeff
    return Poly._raw(nvars, remainder)


def reduce(p, gens, order, budget=None):
    """Normal form of p modulo the ordered generator sequence.

    Always cancels the current largest reducible monomial against the first
    generator whose leading monomial divides it, so the result is a function
    of the sequence, not of iteration luck. budget, when given, bounds the
    number of cancellation steps.
    """
    gens = [g for g in gens if not g.is_zero]
    for g in gens:
        if g.nvars != p.nvars:
            raise ValueError("generators live over a different variable set")
    return _reduce(p, gens, order, _Budget(budget) if budget is not None else None)


def s_polynomial(f, g, order):
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    l = lf.lcm(lg)
    return (f.mul_term(l.divide(lf), Fraction(1) / f.terms[lf])
            - g.mul_term(l.divide(lg), Fraction(1) / g.terms[lg]))


def _interreduce(polys, order):
    polys = [p.monic(order) for p in polys if not p.is_zero]
    polys.sort(key=lambda p: order.key(p.leading_monomial(order)))
    kept = []
    for p in polys:
        lm = p.leading_monomial(order)
        if not any(q.leading_monomial(order).divides(lm) for q in kept):
            kept.append(p)
    # tail-reduce until nothing changes; each pass rewrites one basis element
    # against all the others
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:]
            r = _reduce(kept[i], others, order)
            if not r == kept[i]:
                changed = True
                if r.is_zero:
                    kept.pop(i)
                else:
                    kept[i] = r.monic(order)
                break
        kept.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return kept


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """A reduced basis together with the order it was computed for."""

    generators: tuple
    order: DegRevLex

    @property
    def nvars(self):
        return self.generators[0].nvars if self.generators else 0

    def leading_monomials(self):
        return tuple(g.leading_monomial(self.order) for g in self.generators)

    def reduce(self, p):
        return _reduce(p, self.generators, self.order)


def buchberger(gens, order, budget=200000):
    """Groebner basis by critical pairs, normal selection strategy.

    Pairs are processed smallest least-common-multiple first (degree, then
    order key, then generator indices). Pairs with coprime leading monomials
    are dropped, as are pairs subsumed by an already-processed third
    generator. budget caps the total number of cancellation steps across all
    reductions; BudgetExceededError means the cap was hit, not that the
    computation would diverge.
    """
    counter = _Budget(budget)
    basis = [g.monic(order) for g in gens if not g.is_zero]
    if not basis:
        raise ValueError("no nonzero generators")
    nvars = basis[0].nvars
    if any(g.nvars != nvars for g in basis):
        raise ValueError("generators live over different variable sets")

    lms = [g.leading_monomial(order) for g in basis]
    pending = set()
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            pending.add((i, j))

    def pair_sort_key(pair):
        i, j = pair
        l = lms[i].lcm(lms[j])
        return (l.degree, order.key(l), i, j)

    while pending:
        i, j = min(pending, key=pair_sort_key)
        pending.discard((i, j))
        l = lms[i].lcm(lms[j])
        if l.degree == lms[i].degree + lms[j].degree:
            continue  # coprime leading monomials reduce to zero for free
        subsumed = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if lms[k].divides(l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    subsumed = True
                    break
        if subsumed:
            continue
        r = _reduce(s_polynomial(basis[i], basis[j], order), basis, order, counter)
        if r.is_zero:
            continue
        r = r.monic(order)
        new = len(basis)
        basis.append(r)
        lms.append(r.leading_monomial(order))
        for k in range(new):
            pending.add((k, new))

    return GroebnerBasis(tuple(_interreduce(basis, order)), order)


def is_groebner(gens, order):
    """Every pairwise syzygy polynomial must reduce to zero."""
    gens = [g for g in gens if not g.is_zero]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not _reduce(s_polynomial(gens[i], gens[j], order), gens, order).is_zero:
                return False
    return True


def standard_monomials(gb, cap=100000):
    """Monomials outside the leading ideal, sorted small to large.

    Returns () when the ideal is the whole ring, None when the quotient is
    infinite dimensional (some variable has no pure power among the leading
    monomials), and raises BudgetExceededError when the bounding box holds
    more than cap candidates.
    """
    lms = gb.leading_monomials()
    nvars = gb.nvars
    if any(lm.degree == 0 for lm in lms):
        return ()
    bound = [None] * nvars
    for lm in lms:
        pp = lm.pure_power()
        if pp is not None:
            i, e = pp
            if bound[i] is None or e < bound[i]:
                bound[i] = e
    if any(b is None for b in bound):
        return None
    box = 1
    for b in bound:
        box *= b
        if box > cap:
            raise BudgetExceededError(
                f"candidate box holds more than {cap} monomials")
    out = []
    for exps in iter_product(*(range(b) for b in bound)):
        mono = Monomial(exps)
        if not any(lm.divides(mono) for lm in lms):
            out.append(mono)
    out.sort(key=lambda m: (m.degree, gb.order.key(m)))
    return tuple(out)


def _render_monomial(mono, names):
    parts = []
    for i, e in mono.exponents:
        parts.append(names[i] if e == 1 else f"{names[i]}^{e}")
    return "*".join(parts) if parts else "1"


def render_poly(p, names, order):
    """Human-readable form, terms from largest to smallest."""
    if p.is_zero:
        return "0"
    if len(names) != p.nvars:
        raise ValueError("one name per variable required")
    monos = sorted(p.terms, key=order.key, reverse=True)
    pieces = []
    for idx, mono in enumerate(monos):
        coeff = p.terms[mono]
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        body = _render_monomial(mono, names)
        if mag != 1:
            body = str(mag) if body == "1" else f"{mag}*{body}"
        if idx == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)
