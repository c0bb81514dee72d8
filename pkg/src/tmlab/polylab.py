"""Exact polyhedral computations over the rationals.

Everything here runs on fractions.Fraction or arbitrary-precision integers;
there is no floating point anywhere.  The conversion between vertex and facet
descriptions uses the double description method on a homogenizing cone, with
rays kept as primitive integer vectors and tightness tracked in bitmasks.

Ambient dimension is capped (default 12) because double description grows
quickly; the cap can be raised explicitly, with a warning.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .graph import Graph
from .ineq import LinearInequality
from .totalmatch import CapExceededError, DEFAULT_ELEMENT_CAP, enumerate_total_matchings, incidence

DEFAULT_DIM_CAP = 12


class _Echelon:
    """Incremental basis in reduced row-echelon form, for rank queries."""

    def __init__(self, width):
        self.width = width
        self.rows = []
        self.pivots = []

    def add(self, vec):
        """Reduce vec against the basis; absorb it if independent.

        Returns True when the vector was independent (rank grew).
        """
        v = [Fraction(c) for c in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                for j in range(self.width):
                    v[j] -= f * row[j]
        pivot = next((j for j in range(self.width) if v[j]), None)
        if pivot is None:
            return False
        inv = v[pivot]
        v = [c / inv for c in v]
        for row in self.rows:
            if row[pivot]:
                f = row[pivot]
                for j in range(self.width):
                    row[j] -= f * v[j]
        self.rows.append(v)
        self.pivots.append(pivot)
        return True

    @property
    def rank(self):
        return len(self.rows)


def matrix_rank(rows):
    if not rows:
        return 0
    ech = _Echelon(len(rows[0]))
    for r in rows:
        ech.add(r)
    return ech.rank


def affine_rank(points):
    """1 + rank of the differences to the first point."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise ValueError("affine rank needs at least one point")
    width = len(pts[0])
    if any(len(p) != width for p in pts):
        raise ValueError("points have mismatched dimensions")
    base = pts[0]
    ech = _Echelon(width)
    for p in pts[1:]:
        ech.add([a - b for a, b in zip(p, base)])
        if ech.rank == width:
            break
    return 1 + ech.rank


def _primitive(vec):
    """Scale a rational vector by a positive factor to coprime integers."""
    fracs = [Fraction(c) for c in vec]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * scale) for f in fracs]
    common = gcd(*ints)
    if common > 1:
        ints = [c // common for c in ints]
    return tuple(ints)


def _invert(rows):
    """Inverse of a square rational matrix (rows known independent)."""
    k = len(rows)
    a = [[Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(k)]
         for i, row in enumerate(rows)]
    for col in range(k):
        piv = next(i for i in range(col, k) if a[i][col])
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [c / inv for c in a[col]]
        for i in range(k):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [c - f * d for c, d in zip(a[i], a[col])]
    return [row[k:] for row in a]


def _extreme_rays(rows, d):
    """Extreme rays of the pointed cone {y in R^d : row . y <= 0 for all rows}.

    rows are integer tuples.  Raises ValueError when the constraint matrix has
    rank below d (the cone then contains a line and has no extreme rays).

    Incremental insertion: start from a basis subcone whose d rays are exact,
    then cut with one constraint at a time.  Ray tightness is tracked as a
    bitmask over the constraints processed so far; a new ray born from an
    adjacent pair (p, q) on the cutting plane is tight exactly where both
    parents were, plus the cutter, so masks stay exact without recomputation.
    Adjacency is the standard combinatorial test: no third ray may be tight
    on all common tight constraints of the pair.
    """
    uniq = sorted(
        {r for r in rows if any(r)},
        key=lambda r: (sum(1 for c in r if c), r),
    )
    ech = _Echelon(d)
    basis_idx = [i for i, row in enumerate(uniq) if ech.add(row)]
    if len(basis_idx) < d:
        raise ValueError("cone is not pointed: constraint rank below dimension")
    basis_idx = basis_idx[:d]
    order = basis_idx + [i for i in range(len(uniq)) if i not in set(basis_idx)]
    processed = [uniq[i] for i in order]

    # Rays of the basis subcone are the negated columns of the inverse basis
    # matrix; ray j is tight at every basis row except row j.
    binv = _invert(processed[:d])
    full = (1 << d) - 1
    rays = [
        (_primitive([-binv[i][j] for i in range(d)]), full ^ (1 << j))
        for j in range(d)
    ]

    for idx in range(d, len(processed)):
        h = processed[idx]
        bit = 1 << idx
        svals = [sum(a * b for a, b in zip(h, vec)) for vec, _ in rays]
        pos = [i for i, s in enumerate(svals) if s > 0]
        if not pos:
            rays = [
                (vec, mask | bit if svals[i] == 0 else mask)
                for i, (vec, mask) in enumerate(rays)
            ]
            continue
        neg = [i for i, s in enumerate(svals) if s < 0]
        zero = [i for i, s in enumerate(svals) if s == 0]
        born = []
        min_tight = d - 2
        for p in pos:
            pvec, pmask = rays[p]
            ps = svals[p]
            for q in neg:
                qvec, qmask = rays[q]
                z = pmask & qmask
                if z.bit_count() < min_tight:
                    continue
                if any(
                    o != p and o != q and (rays[o][1] & z) == z
                    for o in range(len(rays))
                ):
                    continue
                qs = svals[q]
                vec = [ps * b - qs * a for a, b in zip(pvec, qvec)]
                born.append((_primitive(vec), z | bit))
        rays = (
            [rays[i] for i in neg]
            + [(rays[i][0], rays[i][1] | bit) for i in zero]
            + born
        )
    return sorted(vec for vec, _ in rays)


@dataclass(frozen=True)
class PolytopeRep:
    """Both descriptions of a polytope: vertices and facet inequalities."""

    vrep: tuple
    hrep: tuple
    dim_ambient: int


def _resolve_dim_cap(d, dim_cap):
    cap = DEFAULT_DIM_CAP if dim_cap is None else dim_cap
    if d > cap:
        raise CapExceededError(
            f"ambient dimension {d} exceeds the cap of {cap}; "
            "raise the cap explicitly to proceed"
        )
    if d > DEFAULT_DIM_CAP:
        warnings.warn(
            f"ambient dimension {d} is above the default cap {DEFAULT_DIM_CAP}; "
            "double description may take a long time",
            RuntimeWarning,
            stacklevel=3,
        )


def hull(points, dim_cap=None):
    """Irredundant facet description of the convex hull of full-dimensional
    point sets (plus the trivial single-point case).

    Facets are the extreme rays of the cone of valid inequalities
    {(a, c) : a . v <= c for every input point v}, computed by double
    description over the homogenized points (v, 1).
    """
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise ValueError("hull needs at least one point")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points have mismatched dimensions")
    _resolve_dim_cap(d, dim_cap)
    uniq = sorted(set(pts))
    if len(uniq) == 1:
        return PolytopeRep((uniq[0],), (), d)
    if affine_rank(uniq) != d + 1:
        raise ValueError(
            "points do not affinely span the ambient space; the facet list of "
            "a lower-dimensional hull is not unique"
        )
    rows = [_primitive(p + (1,)) for p in uniq]
    facets = []
    for ray in _extreme_rays(rows, d + 1):
        coeffs, c = ray[:-1], ray[-1]
        if any(coeffs):
            facets.append(LinearInequality(coeffs, -c, "Facet"))
    facets.sort(key=LinearInequality.sort_key)
    return PolytopeRep(_extreme_points(uniq, facets, d), tuple(facets), d)


def _extreme_points(uniq, facets, d):
    """Filter the input points down to vertices.

    0/1 points are vertices of any polytope containing them (they are vertices
    of the unit cube), so the common case needs no rank work.
    """
    if all(c == 0 or c == 1 for p in uniq for c in p):
        return tuple(uniq)
    out = []
    for p in uniq:
        tight = [f.coeffs for f in facets if f.tight_at(p)]
        if matrix_rank(tight) == d:
            out.append(p)
    return tuple(out)


def vertices(ineqs, dim_cap=None):
    """Exact vertex list of the bounded polyhedron {z : each ineq holds}.

    Works on the homogenizing cone {(z, t) : coeffs . z - rhs t <= 0, t >= 0}:
    its extreme rays with t > 0 are the vertices, scaled back by t; a ray with
    t = 0 is a recession direction, so the input was unbounded.
    """
    qs = list(ineqs)
    if not qs:
        raise ValueError("vertices needs at least one inequality")
    d = qs[0].dim
    if any(q.dim != d for q in qs):
        raise ValueError("inequalities have mismatched dimensions")
    _resolve_dim_cap(d, dim_cap)
    rows = [_primitive(tuple(q.coeffs) + (-q.rhs,)) for q in qs]
    rows.append(tuple([0] * d + [-1]))
    try:
        rays = _extreme_rays(rows, d + 1)
    except ValueError:
        raise ValueError(
            "unbounded input: the inequalities leave a free direction, "
            "so the polyhedron has no vertex description"
        ) from None
    verts = []
    for ray in rays:
        t = ray[-1]
        if t == 0:
            raise ValueError(
                f"unbounded input: recession direction {ray[:-1]}"
            )
        verts.append(tuple(Fraction(c, t) for c in ray[:-1]))
    verts.sort()
    hrep = tuple(sorted(set(qs), key=LinearInequality.sort_key))
    return PolytopeRep(tuple(verts), hrep, d)


def polytope_dimension(g: Graph, cap: int = DEFAULT_ELEMENT_CAP):
    """Dimension of the total matching polytope; expected n + m always
    (the empty matching and all singletons span)."""
    N = g.num_elements
    ech = _Echelon(N)
    base = None
    for t in enumerate_total_matchings(g, cap):
        vec = [0] * N
        for a in t:
            vec[a] = 1
        if base is None:
            base = vec
            continue
        ech.add([x - y for x, y in zip(vec, base)])
        if ech.rank == N:
            break
    return ech.rank


def face_dimension(g: Graph, ineq: LinearInequality, cap: int = DEFAULT_ELEMENT_CAP):
    """Dimension of the face of the total matching polytope cut out by a valid
    inequality; -1 means no total matching is tight.

    The scan doubles as a validity check and reports a violating matching.
    """
    N = g.num_elements
    if len(ineq.coeffs) != N:
        raise ValueError(
            f"inequality has {len(ineq.coeffs)} coefficients, graph has {N} elements"
        )
    ech = _Echelon(N)
    base = None
    for t in enumerate_total_matchings(g, cap):
        value = ineq.value_of_matching(t)
        if value > ineq.rhs:
            raise ValueError(
                f"inequality is not valid: violated by total matching {list(t)}"
            )
        if value != ineq.rhs:
            continue
        if ech.rank == N:
            continue
        vec = [0] * N
        for a in t:
            vec[a] = 1
        if base is None:
            base = vec
            continue
        ech.add([x - y for x, y in zip(vec, base)])
    if base is None:
        return -1
    return ech.rank


def is_facet(g: Graph, ineq: LinearInequality, cap: int = DEFAULT_ELEMENT_CAP):
    return face_dimension(g, ineq, cap) == polytope_dimension(g, cap) - 1


@dataclass(frozen=True)
class CompletenessReport:
    complete: bool
    missing_facets: tuple
    redundant: tuple
    dimension: int


def check_complete_description(
    g: Graph,
    ineqs,
    cap: int = DEFAULT_ELEMENT_CAP,
    dim_cap=None,
):
    """Compare a proposed inequality list against the true facet list.

    Computes the hull of all incidence vectors exactly, then matches facets by
    normalized form.  missing_facets are hull facets absent from the proposal;
    redundant are proposed inequalities that are valid but not facets.  The
    description is complete exactly when nothing is missing; redundant members
    are reported, not penalized.

    Raises on any invalid proposed inequality, naming a violating matching.
    """
    matchings = list(enumerate_total_matchings(g, cap))
    given = []
    seen = set()
    for q in ineqs:
        if len(q.coeffs) != g.num_elements:
            raise ValueError(
                f"inequality has {len(q.coeffs)} coefficients, "
                f"graph has {g.num_elements} elements"
            )
        if q not in seen:
            seen.add(q)
            given.append(q)
    for q in given:
        for t in matchings:
            if q.value_of_matching(t) > q.rhs:
                raise ValueError(
                    f"proposed inequality '{q.format_line()}' is not valid: "
                    f"violated by total matching {list(t)}"
                )
    rep = hull([incidence(g, t) for t in matchings], dim_cap)
    facet_set = set(rep.hrep)
    missing = tuple(q for q in rep.hrep if q not in seen)
    redundant = tuple(
        sorted((q for q in given if q not in facet_set), key=LinearInequality.sort_key)
    )
    return CompletenessReport(not missing, missing, redundant, rep.dim_ambient)
