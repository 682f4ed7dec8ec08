"""Combinatorics of simple polytopes given by vertex-facet incidence.

A polytope of dimension n with d facets is stored as one facet-index set per
vertex. Coordinates are optional and only ever used to evaluate height
functionals; geometric consistency with the incidence data is not checked.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import OrderPropertyError, TieError
from .validation import CheckResult, ValidationReport


@dataclass(frozen=True)
class SimplePolytope:
    dim: int
    facet_count: int
    vertices: tuple
    coords: tuple = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        if self.facet_count < self.dim:
            raise ValueError("need at least dim facets")
        verts = tuple(frozenset(int(f) for f in v) for v in self.vertices)
        if not verts:
            raise ValueError("at least one vertex required")
        for i, v in enumerate(verts):
            for f in v:
                if not 0 <= f < self.facet_count:
                    raise ValueError(f"vertex {i} uses facet index {f} out of range")
        object.__setattr__(self, "vertices", verts)
        if self.coords is not None:
            pts = tuple(tuple(Fraction(x) for x in pt) for pt in self.coords)
            if len(pts) != len(verts):
                raise ValueError("one coordinate point per vertex required")
            if any(len(pt) != self.dim for pt in pts):
                raise ValueError("coordinate arity must equal the dimension")
            object.__setattr__(self, "coords", pts)

    @property
    def vertex_count(self):
        return len(self.vertices)


@dataclass(frozen=True)
class Face:
    """A face recorded by the facets containing it and the vertices in it."""

    facet_set: frozenset
    vertex_set: frozenset


@dataclass(frozen=True)
class VertexOrder:
    """A linear order on vertices: order lists indices from lowest up,
    heights holds one rational per vertex index."""

    order: tuple
    heights: tuple

    def __post_init__(self):
        order = tuple(int(i) for i in self.order)
        heights = tuple(Fraction(h) for h in self.heights)
        if sorted(order) != list(range(len(order))) or len(heights) != len(order):
            raise ValueError("order must be a permutation with matching heights")
        if len(set(heights)) != len(heights):
            raise ValueError("heights must be distinct")
        for a, b in zip(order, order[1:]):
            if not heights[a] < heights[b]:
                raise ValueError("order is not sorted by height")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "heights", heights)

    @classmethod
    def from_sequence(cls, seq):
        seq = [int(i) for i in seq]
        heights = [Fraction(0)] * len(seq)
        for pos, v in enumerate(seq):
            heights[v] = Fraction(pos)
        return cls(tuple(seq), tuple(heights))

    @property
    def positions(self):
        pos = [0] * len(self.order)
        for k, v in enumerate(self.order):
            pos[v] = k
        return tuple(pos)


def simplex(n):
    """The n-simplex. Facet i >= 1 is opposite the i-th basis point, facet 0
    is opposite the origin; vertex k is the one missing facet k."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    everything = frozenset(range(n + 1))
    verts = []
    coords = []
    for k in range(n + 1):
        verts.append(everything - {k})
        coords.append(tuple(Fraction(1 if i == k else 0) for i in range(1, n + 1)))
    return SimplePolytope(n, n + 1, tuple(verts), tuple(coords))


def cube(n):
    """The n-cube with the facet pair of coordinate i flattened to indices
    2*(i-1) for the lower side and 2*(i-1)+1 for the upper one. Vertex k has
    the binary digits of k as coordinates, so vertex 0 is the origin."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    verts = []
    coords = []
    for k in range(1 << n):
        bits = [(k >> i) & 1 for i in range(n)]
        verts.append(frozenset(2 * i + bits[i] for i in range(n)))
        coords.append(tuple(Fraction(b) for b in bits))
    return SimplePolytope(n, 2 * n, tuple(verts), tuple(coords))


def product(p, q):
    """Cartesian product; facets of p keep their indices, facets of q are
    shifted up by p.facet_count, vertices are enumerated p-major."""
    verts = []
    coords = [] if (p.coords is not None and q.coords is not None) else None
    for i, fv in enumerate(p.vertices):
        for j, fw in enumerate(q.vertices):
            verts.append(frozenset(fv) | frozenset(f + p.facet_count for f in fw))
            if coords is not None:
                coords.append(p.coords[i] + q.coords[j])
    return SimplePolytope(
        p.dim + q.dim,
        p.facet_count + q.facet_count,
        tuple(verts),
        tuple(coords) if coords is not None else None,
    )


def _adjacency(p):
    n = p.dim
    m = p.vertex_count
    adj = [[] for _ in range(m)]
    for i, j in combinations(range(m), 2):
        if len(p.vertices[i] & p.vertices[j]) == n - 1:
            adj[i].append(j)
            adj[j].append(i)
    return adj


def validate_polytope(p):
    """Check the combinatorial invariants of a simple polytope and report
    each one separately."""
    checks = []
    n, m = p.dim, p.vertex_count

    bad = [i for i, v in enumerate(p.vertices) if len(v) != n]
    checks.append(CheckResult(
        "vertex_simplicity", not bad,
        f"vertices with facet count != {n}: {bad}" if bad else ""))

    seen = {}
    dups = []
    for i, v in enumerate(p.vertices):
        if v in seen:
            dups.append((seen[v], i))
        else:
            seen[v] = i
    checks.append(CheckResult(
        "distinct_vertices", not dups,
        f"duplicate vertex pairs: {dups}" if dups else ""))

    used = frozenset().union(*p.vertices)
    missing = sorted(set(range(p.facet_count)) - used)
    checks.append(CheckResult(
        "facet_coverage", not missing,
        f"facets on no vertex: {missing}" if missing else ""))

    adj = _adjacency(p)
    wrong = [i for i in range(m) if len(adj[i]) != n]
    checks.append(CheckResult(
        "edge_count", not wrong,
        f"vertices without exactly {n} neighbors: {wrong}" if wrong else ""))

    seen_v = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for nxt in adj[cur]:
            if nxt not in seen_v:
                seen_v.add(nxt)
                stack.append(nxt)
    checks.append(CheckResult(
        "connected", len(seen_v) == m,
        "" if len(seen_v) == m else f"only {len(seen_v)} of {m} vertices reachable"))

    return ValidationReport(tuple(checks))


def minimal_nonfaces(p):
    """Inclusion-minimal facet sets with empty intersection.

    A facet set is a face exactly when some vertex contains it, so a minimal
    nonface is a set contained in no vertex all of whose proper subsets are.
    Sizes beyond dim+1 cannot occur. Returned sorted by (size, entries).
    """
    verts = p.vertices

    def is_face(s):
        return any(s <= v for v in verts)

    out = []
    for k in range(1, p.dim + 2):
        for combo in combinations(range(p.facet_count), k):
            s = frozenset(combo)
            if is_face(s):
                continue
            if all(is_face(s - {f}) for f in combo):
                out.append(tuple(combo))
    out.sort(key=lambda t: (len(t), t))
    return out


def order_vertices(p, functional):
    """Order vertices by a rational linear functional on their coordinates."""
    if p.coords is None:
        raise ValueError("polytope has no coordinates, supply an explicit vertex order")
    func = [Fraction(x) for x in functional]
    if len(func) != p.dim:
        raise ValueError("functional arity must equal the dimension")
    heights = [sum(a * c for a, c in zip(func, pt)) for pt in p.coords]
    by_height = {}
    for i, h in enumerate(heights):
        if h in by_height:
            raise TieError(f"vertices {by_height[h]} and {i} share height {h}")
        by_height[h] = i
    order = tuple(sorted(range(p.vertex_count), key=lambda i: heights[i]))
    return VertexOrder(order, tuple(heights))


def _ridge_map(p):
    out = {}
    for idx, fs in enumerate(p.vertices):
        for f in fs:
            out.setdefault(fs - {f}, []).append(idx)
    return out


def ascending_faces(p, vertex_order):
    """The face spanned at each vertex by its ascending edges.

    At vertex w, dropping one facet f of w leaves an edge; that edge descends
    when its other endpoint sits below w. The face attached to w is the
    intersection of the facets whose dropped edge descends, so the lowest
    vertex gets the whole polytope and the highest gets itself. Every vertex
    of the face must lie at or above w; if not, the order cannot come from a
    generic height function and OrderPropertyError is raised.

    Returns a dict mapping vertex index to Face.
    """
    pos = vertex_order.positions
    if len(pos) != p.vertex_count:
        raise ValueError("vertex order size does not match the polytope")
    ridges = _ridge_map(p)
    faces = {}
    for w, fs in enumerate(p.vertices):
        descending = []
        for f in sorted(fs):
            pair = ridges.get(fs - {f}, [])
            if len(pair) != 2:
                raise ValueError(
                    f"facets of vertex {w} minus {f} do not span an edge; "
                    "polytope is not a valid simple polytope")
            other = pair[0] if pair[1] == w else pair[1]
            if pos[other] < pos[w]:
                descending.append(f)
        fset = frozenset(descending)
        vset = frozenset(i for i, g in enumerate(p.vertices) if fset <= g)
        below = sorted(v for v in vset if pos[v] < pos[w])
        if below:
            raise OrderPropertyError(
                f"face at vertex {w} contains lower vertices {below}; "
                "the supplied order is not induced by a height function")
        faces[w] = Face(fset, vset)
    return faces
