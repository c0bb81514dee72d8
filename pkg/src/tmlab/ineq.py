"""Valid inequalities for the total matching polytope.

Three families are generated here: the basic constraints (vertex stars, edges,
nonnegativity), the balanced biclique inequalities, and the lifted biclique
inequalities for induced K_{r,s} with s > r > 1.  A generic sequential-lifting
engine re-derives the lifted family from scratch, and a constructive
counterexample shows why edge coefficients cannot be lifted above 1.

All arithmetic is exact.  An inequality is stored in a normalized coprime
integer form which serves as its identity; orientation is never flipped, so
nonnegativity stays -z_a <= 0.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .graph import Biclique, Graph, enumerate_induced_bicliques
from .totalmatch import DEFAULT_ELEMENT_CAP, enumerate_total_matchings


@dataclass(frozen=True)
class LinearInequality:
    """coeffs . z <= rhs over element space, normalized to coprime integers.

    Normalization multiplies by the lcm of denominators and divides by the gcd
    of all entries; the scale factor is always positive, so the direction of
    the inequality is preserved.  Two inequalities compare equal exactly when
    their normalized forms coincide; the label is descriptive only.
    """

    coeffs: tuple
    rhs: int = 0
    label: str = field(default="Custom", compare=False)

    def __post_init__(self):
        fracs = [Fraction(c) for c in self.coeffs]
        r = Fraction(self.rhs)
        scale = lcm(*(f.denominator for f in fracs), r.denominator)
        ints = [int(f * scale) for f in fracs]
        ri = int(r * scale)
        common = gcd(*ints, ri)
        if common > 1:
            ints = [c // common for c in ints]
            ri //= common
        object.__setattr__(self, "coeffs", tuple(ints))
        object.__setattr__(self, "rhs", ri)

    @property
    def dim(self):
        return len(self.coeffs)

    def evaluate(self, z):
        if len(z) != len(self.coeffs):
            raise ValueError(
                f"point has {len(z)} coordinates, inequality has {len(self.coeffs)}"
            )
        return sum((c * Fraction(v) for c, v in zip(self.coeffs, z)), Fraction(0))

    def violation(self, z):
        """evaluate(z) - rhs; positive means violated."""
        return self.evaluate(z) - self.rhs

    def satisfied_by(self, z):
        return self.violation(z) <= 0

    def tight_at(self, z):
        return self.violation(z) == 0

    def value_of_matching(self, elements):
        """Sum of coefficients over a set of element indices."""
        return sum((Fraction(self.coeffs[a]) for a in elements), Fraction(0))

    def format_line(self):
        return " ".join(str(c) for c in self.coeffs) + f" <= {self.rhs}"

    @classmethod
    def parse_line(cls, line, num_elements=None, label="Custom"):
        tokens = line.split()
        if len(tokens) < 3 or tokens[-2] != "<=":
            raise ValueError(f"expected 'a_0 ... a_k <= b', got {line!r}")
        try:
            coeffs = tuple(Fraction(t) for t in tokens[:-2])
            rhs = Fraction(tokens[-1])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad rational in inequality line {line!r}") from None
        if num_elements is not None and len(coeffs) != num_elements:
            raise ValueError(
                f"inequality has {len(coeffs)} coefficients, expected {num_elements}"
            )
        return cls(coeffs, rhs, label)

    def sort_key(self):
        return (self.coeffs, self.rhs)


def parse_inequalities(text, num_elements=None):
    """Parse an inequality file: one 'a_0 ... <= b' per line, '#' comments."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(LinearInequality.parse_line(line, num_elements))
    return out


def format_inequalities(ineqs):
    return "".join(q.format_line() + "\n" for q in ineqs)


def _side_str(b: Biclique):
    left = ",".join(str(v) for v in b.side_r)
    right = ",".join(str(v) for v in b.side_s)
    return f"{left}|{right}"


def basic_inequalities(g: Graph):
    """The 2n + 2m basic constraints in canonical order: for each vertex
    x_v + sum of incident y_e <= 1, for each edge x_v + x_w + y_e <= 1, then
    one nonnegativity -z_a <= 0 per element."""
    N = g.num_elements
    out = []
    for v in range(g.n):
        coeffs = [0] * N
        coeffs[v] = 1
        for a in g.incident_edge_elements[v]:
            coeffs[a] = 1
        out.append(LinearInequality(tuple(coeffs), 1, f"Basic-Vertex v{v}"))
    for j, (u, w) in enumerate(g.edges):
        coeffs = [0] * N
        coeffs[u] = 1
        coeffs[w] = 1
        coeffs[g.n + j] = 1
        out.append(LinearInequality(tuple(coeffs), 1, f"Basic-Edge e({u},{w})"))
    for a in range(N):
        coeffs = [0] * N
        coeffs[a] = -1
        out.append(LinearInequality(tuple(coeffs), 0, f"NonNeg {g.element_label(a)}"))
    return out


def _validate_biclique(g: Graph, b: Biclique):
    """Re-check a biclique against g: all cross edges present, both sides
    internally edgeless.  Guards against hand-built stale Biclique values."""
    checked = Biclique.in_graph(g, b.side_r, b.side_s)
    if not checked.induced:
        raise ValueError(
            f"biclique {_side_str(b)} is not induced in the graph "
            "(an edge joins two vertices of the same side)"
        )
    return checked


def biclique_support(g: Graph, b: Biclique):
    """Element indices of the biclique's vertices and edges."""
    vertex_elems = b.vertices()
    edge_elems = [g.edge_element(u, w) for u, w in b.edge_pairs()]
    return vertex_elems, edge_elems


def balanced_biclique_inequalities(g: Graph, r: int):
    """For every induced K_{r,r} of g: the sum of its 2r vertex variables and
    r*r edge variables is at most r.  r = 1 reproduces the edge constraints."""
    if r < 1:
        raise ValueError("side size r must be >= 1")
    N = g.num_elements
    out = []
    for b in enumerate_induced_bicliques(g, r):
        if b.r != r or b.s != r:
            continue
        vertex_elems, edge_elems = biclique_support(g, b)
        coeffs = [0] * N
        for a in vertex_elems + edge_elems:
            coeffs[a] = 1
        out.append(
            LinearInequality(tuple(coeffs), r, f"BalancedBiclique {_side_str(b)}")
        )
    return out


def all_ones_biclique_inequality(g: Graph, b: Biclique):
    """All-ones inequality over a biclique with right side s: sum of all its
    vertex and edge variables <= s.  Valid for any biclique, but dominated;
    kept constructible so the dominance is testable."""
    b = _validate_biclique(g, b)
    vertex_elems, edge_elems = biclique_support(g, b)
    coeffs = [0] * g.num_elements
    for a in vertex_elems + edge_elems:
        coeffs[a] = 1
    return LinearInequality(tuple(coeffs), b.s, f"Custom all-ones {_side_str(b)}")


def lifted_biclique_inequalities(g: Graph, b: Biclique):
    """The r lifted inequalities of an induced K_{r,s} with s > r > 1.

    One inequality per distinguished vertex t of the small side: coefficient
    s - r + 1 on x_t, coefficient 1 on every other biclique vertex and on all
    biclique edges, right-hand side s.
    """
    b = _validate_biclique(g, b)
    r, s = b.r, b.s
    if r <= 1 or s <= r:
        raise ValueError(
            f"lifted inequalities need side sizes s > r > 1, got K_{{{r},{s}}}"
        )
    vertex_elems, edge_elems = biclique_support(g, b)
    out = []
    for t in b.side_r:
        coeffs = [0] * g.num_elements
        for a in vertex_elems + edge_elems:
            coeffs[a] = 1
        coeffs[t] = s - r + 1
        out.append(
            LinearInequality(tuple(coeffs), s, f"LiftedBiclique {_side_str(b)} t={t}")
        )
    return out


@dataclass(frozen=True)
class LiftStep:
    """One step of a sequential lifting: the element lifted, the exact optimum
    of the inner maximization, and the coefficient it produced."""

    element: int
    inner_optimum: Fraction
    coefficient: Fraction


def sequential_lift(
    g: Graph,
    base: LinearInequality,
    fixed_zero,
    order,
    cap: int = DEFAULT_ELEMENT_CAP,
    with_steps: bool = False,
):
    """Lift the variables of fixed_zero into base, one at a time along order.

    base must be valid for the total matchings avoiding every element of
    fixed_zero, and must not already use those variables.  At each step the
    new coefficient is rhs minus the exact maximum of the current left-hand
    side over total matchings that contain the element being lifted and avoid
    the elements not yet lifted.  The result is valid for the whole polytope.

    With with_steps=True, returns (inequality, tuple of LiftStep) so the inner
    optima are observable.
    """
    fixed = frozenset(fixed_zero)
    order = tuple(order)
    for a in fixed:
        g._check_element(a)
    if len(order) != len(fixed) or set(order) != set(fixed):
        raise ValueError("order must be a permutation of fixed_zero")
    if len(base.coeffs) != g.num_elements:
        raise ValueError(
            f"base inequality has {len(base.coeffs)} coefficients, "
            f"graph has {g.num_elements} elements"
        )
    if any(base.coeffs[a] != 0 for a in fixed):
        raise ValueError("base inequality already uses a variable scheduled for lifting")

    matchings = [frozenset(t) for t in enumerate_total_matchings(g, cap)]
    coeffs = [Fraction(c) for c in base.coeffs]
    rhs = Fraction(base.rhs)

    def weight(t):
        return sum((coeffs[i] for i in t), Fraction(0))

    for t in matchings:
        if not (t & fixed) and weight(t) > rhs:
            raise ValueError(
                f"base inequality is not valid on its restriction: "
                f"violated by {sorted(t)}"
            )

    steps = []
    waiting = set(order)
    for a in order:
        waiting.remove(a)
        best = None
        for t in matchings:
            if a not in t or (t & waiting):
                continue
            w = weight(t)  # coeffs[a] is still 0 here
            if best is None or w > best:
                best = w
        if best is None:
            raise ValueError(f"no total matching contains element {a}")
        coeffs[a] = rhs - best
        steps.append(LiftStep(a, best, coeffs[a]))

    result = LinearInequality(tuple(coeffs), rhs, "Custom sequentially-lifted")
    return (result, tuple(steps)) if with_steps else result


def is_valid(g: Graph, ineq: LinearInequality, cap: int = DEFAULT_ELEMENT_CAP):
    """Exhaustive validity check over all total matchings.

    Returns (True, None) or (False, certificate) where the certificate is the
    lexicographically first violating total matching.
    """
    if len(ineq.coeffs) != g.num_elements:
        raise ValueError(
            f"inequality has {len(ineq.coeffs)} coefficients, "
            f"graph has {g.num_elements} elements"
        )
    for t in enumerate_total_matchings(g, cap):
        if ineq.value_of_matching(t) > ineq.rhs:
            return False, t
    return True, None


def edge_lift_counterexample(g: Graph, b: Biclique, e: int):
    """A total matching that is tight for the all-ones inequality of the
    biclique and contains the edge e, so any edge coefficient above 1 would
    be violated by it.

    Construction: a balanced sub-biclique K_{r,r} through e, a perfect
    matching of it containing e, plus the s - r vertices of the big side left
    uncovered.  The result has exactly s elements.
    """
    b = _validate_biclique(g, b)
    r, s = b.r, b.s
    if s <= r:
        raise ValueError(f"biclique must be non-balanced, got K_{{{r},{s}}}")
    if not g.is_edge_element(e):
        raise ValueError(f"element {e} is not an edge")
    u, w = g.endpoints(e)
    if u in b.side_r and w in b.side_s:
        end_r, end_s = u, w
    elif w in b.side_r and u in b.side_s:
        end_r, end_s = w, u
    else:
        raise ValueError(f"edge {g.element_label(e)} does not belong to the biclique")
    # Balanced sub-biclique: all of the small side, and r vertices of the big
    # side including e's endpoint.
    sub_s = [end_s] + [v for v in b.side_s if v != end_s][: r - 1]
    other_r = [v for v in b.side_r if v != end_r]
    other_s = sub_s[1:]
    matching = [g.edge_element(end_r, end_s)]
    matching.extend(g.edge_element(u2, w2) for u2, w2 in zip(other_r, other_s))
    uncovered = [v for v in b.side_s if v not in sub_s]
    return tuple(sorted(matching + uncovered))
