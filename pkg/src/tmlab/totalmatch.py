"""Total matchings: sets of pairwise non-adjacent elements (vertices and edges).

Enumeration is exhaustive and therefore capped; the optimization routines use
branch and bound on bitmasks and scale comfortably past the enumeration cap.
"""

from fractions import Fraction
from itertools import combinations

from .graph import Graph, is_tree

DEFAULT_ELEMENT_CAP = 24


class CapExceededError(Exception):
    """Raised when a graph is too large for an exhaustive routine."""


def _check_cap(g, cap):
    if g.num_elements > cap:
        raise CapExceededError(
            f"graph has {g.num_elements} elements (n={g.n}, m={g.m}), "
            f"exceeding the cap of {cap}; pass a larger cap explicitly to override"
        )


def enumerate_total_matchings(g: Graph, cap: int = DEFAULT_ELEMENT_CAP):
    """Yield every total matching of g as a sorted tuple of element indices.

    Output is in lexicographic order of the tuples, starting with the empty
    matching ().  A prefix is always yielded before its extensions.
    """
    _check_cap(g, cap)
    masks = g.element_adjacency_masks
    N = g.num_elements

    def extend(prefix, first, blocked):
        yield prefix
        for a in range(first, N):
            if not (blocked >> a) & 1:
                yield from extend(prefix + (a,), a + 1, blocked | masks[a])

    yield from extend((), 0, 0)


def is_total_matching(g: Graph, elements) -> bool:
    """Check pairwise non-adjacency of a set of element indices.

    A repeated element fails the check, since every element is adjacent
    to itself.
    """
    elems = list(elements)
    if len(set(elems)) != len(elems):
        return False
    masks = g.element_adjacency_masks
    taken = 0
    for a in elems:
        g._check_element(a)
        if masks[a] & taken:
            return False
        taken |= 1 << a
    return True


def incidence(g: Graph, elements):
    """0/1 vector in element space, exact Fractions, as a tuple."""
    if not is_total_matching(g, elements):
        raise ValueError(f"{sorted(elements)!r} is not a total matching")
    chosen = set(elements)
    return tuple(Fraction(1 if a in chosen else 0) for a in range(g.num_elements))


def _max_independent(masks, universe):
    """Largest independent set in the conflict structure given by masks,
    restricted to the elements of the universe bitmask.  Returns (size, set).

    Plain branch and bound: pick the lowest remaining element, branch on
    including or excluding it, prune when the remaining pool cannot beat the
    incumbent.
    """
    best_size = 0
    best_set = ()

    def recurse(pool, chosen, size):
        nonlocal best_size, best_set
        if size + pool.bit_count() <= best_size:
            return
        if pool == 0:
            if size > best_size:
                best_size = size
                best_set = chosen
            return
        a = (pool & -pool).bit_length() - 1
        recurse(pool & ~masks[a], chosen + (a,), size + 1)
        recurse(pool & ~(1 << a), chosen, size)

    recurse(universe, (), 0)
    return best_size, best_set


def nu_T(g: Graph, with_witness: bool = False, cap: int = DEFAULT_ELEMENT_CAP):
    """Maximum size of a total matching.

    Beyond the cap only trees are handled (polynomial dynamic program, no
    witness); everything inside the cap goes through branch and bound.
    """
    if g.num_elements > cap:
        if is_tree(g) and not with_witness:
            return tree_max(g)
        _check_cap(g, cap)
    universe = (1 << g.num_elements) - 1
    size, witness = _max_independent(g.element_adjacency_masks, universe)
    return (size, tuple(sorted(witness))) if with_witness else size


def alpha(g: Graph, with_witness: bool = False, cap: int = DEFAULT_ELEMENT_CAP):
    """Maximum size of an independent vertex set."""
    _check_cap(g, cap)
    universe = (1 << g.n) - 1
    size, witness = _max_independent(g.element_adjacency_masks, universe)
    return (size, tuple(sorted(witness))) if with_witness else size


def nu(g: Graph, with_witness: bool = False, cap: int = DEFAULT_ELEMENT_CAP):
    """Maximum size of a matching."""
    _check_cap(g, cap)
    universe = ((1 << g.num_elements) - 1) ^ ((1 << g.n) - 1)
    size, witness = _max_independent(g.element_adjacency_masks, universe)
    return (size, tuple(sorted(witness))) if with_witness else size


def tree_max(g: Graph) -> int:
    """Maximum total matching size of a tree, by dynamic programming.

    Three states per vertex v of the rooted tree:
      A: v itself is picked (no incident edge may be);
      B: the edge from v to one of its children is picked;
      C: v is free and uncovered (the edge to its parent stays available).
    The parent edge may be picked above v exactly in state C.
    """
    if not is_tree(g):
        raise ValueError("tree_max requires a tree")
    # Iterative post-order from root 0 to keep deep paths off the call stack.
    parent = [-1] * g.n
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in g.neighbor_sets[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
    A = [0] * g.n
    B = [0] * g.n
    C = [0] * g.n
    NEG = -(10**9)
    for v in reversed(order):
        children = [w for w in g.neighbor_sets[v] if parent[w] == v]
        A[v] = 1 + sum(max(B[c], C[c]) for c in children)
        C[v] = sum(max(A[c], B[c], C[c]) for c in children)
        B[v] = NEG
        base = C[v]
        for c in children:
            gain = 1 + C[c] - max(A[c], B[c], C[c])
            B[v] = max(B[v], base + gain)
    return max(A[0], B[0], C[0])


def tau(g: Graph, with_witness: bool = False, cap: int = DEFAULT_ELEMENT_CAP):
    """Minimum size of a total cover: every element equals or is adjacent to
    a chosen element.

    Searches subsets by increasing size, seeded with the elements only they
    themselves can cover (isolated vertices, mainly).
    """
    _check_cap(g, cap)
    N = g.num_elements
    if N == 0:
        return (0, ()) if with_witness else 0
    masks = g.element_adjacency_masks
    full = (1 << N) - 1
    # cover_mask[a] = elements whose choice would cover a
    forced = [a for a in range(N) if masks[a] == (1 << a)]
    forced_mask = 0
    for a in forced:
        forced_mask |= masks[a]
    rest = [a for a in range(N) if a not in forced]
    for k in range(len(forced), N + 1):
        for extra in combinations(rest, k - len(forced)):
            covered = forced_mask
            for a in extra:
                covered |= masks[a]
            if covered == full:
                witness = tuple(sorted(forced + list(extra)))
                return (k, witness) if with_witness else k
    raise AssertionError("the full element set always covers")
