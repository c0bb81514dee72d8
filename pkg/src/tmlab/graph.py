"""Simple undirected graphs with a canonical joint indexing of vertices and edges.

Every vector in this package lives in the (n+m)-dimensional "element space"
of a graph: coordinates 0..n-1 are the vertices, coordinates n..n+m-1 are
the edges in lexicographically sorted endpoint order.  Keeping that order
canonical makes all generated files and reports byte-reproducible.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  Edges are canonicalized (min, max) and sorted."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        seen = set()
        for pair in self.edges:
            u, v = pair
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {pair!r} out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e!r}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self):
        return len(self.edges)

    @property
    def num_elements(self):
        return self.n + len(self.edges)

    @cached_property
    def _edge_pos(self):
        return {e: i for i, e in enumerate(self.edges)}

    def edge_element(self, u, v):
        """Element index of edge {u, v}."""
        e = (u, v) if u < v else (v, u)
        try:
            return self.n + self._edge_pos[e]
        except KeyError:
            raise ValueError(f"no edge {e!r} in graph") from None

    def is_vertex_element(self, a):
        self._check_element(a)
        return a < self.n

    def is_edge_element(self, a):
        return not self.is_vertex_element(a)

    def endpoints(self, a):
        """Endpoint pair of an edge element."""
        self._check_element(a)
        if a < self.n:
            raise ValueError(f"element {a} is a vertex, not an edge")
        return self.edges[a - self.n]

    def element_label(self, a):
        """Human-readable element name: 'v3' or 'e(1,2)'."""
        self._check_element(a)
        if a < self.n:
            return f"v{a}"
        u, v = self.edges[a - self.n]
        return f"e({u},{v})"

    def _check_element(self, a):
        if not (0 <= a < self.num_elements):
            raise ValueError(
                f"element index {a} out of range (graph has {self.num_elements} elements)"
            )

    @cached_property
    def neighbor_sets(self):
        """Per-vertex sets of adjacent vertices."""
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def incident_edge_elements(self):
        """Per-vertex sorted tuples of incident edge element indices."""
        inc = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(self.n + i)
            inc[v].append(self.n + i)
        return tuple(tuple(sorted(l)) for l in inc)

    def degree(self, v):
        return len(self.neighbor_sets[v])

    @cached_property
    def element_adjacency_masks(self):
        """Bitmask per element of all adjacent elements (self bit included)."""
        N = self.num_elements
        masks = [1 << a for a in range(N)]
        for a in range(N):
            for b in range(a + 1, N):
                if adjacent(self, a, b):
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
        return tuple(masks)


def adjacent(g: Graph, a: int, b: int) -> bool:
    """Whether elements a, b are adjacent: adjacent vertices, edges sharing an
    endpoint, or an edge incident to a vertex.  An element is adjacent to itself
    (it can never appear twice in an independent set)."""
    g._check_element(a)
    g._check_element(b)
    if a == b:
        return True
    a_vertex = a < g.n
    b_vertex = b < g.n
    if a_vertex and b_vertex:
        return b in g.neighbor_sets[a]
    if not a_vertex and not b_vertex:
        pa = g.edges[a - g.n]
        pb = g.edges[b - g.n]
        return pa[0] in pb or pa[1] in pb
    if a_vertex:
        return a in g.edges[b - g.n]
    return b in g.edges[a - g.n]


def total_graph(g: Graph) -> Graph:
    """Graph on the n+m elements of g whose edges are the adjacent element pairs.

    Element indexing carries over unchanged, so independent element sets of g
    are exactly the independent vertex sets of the result.
    """
    N = g.num_elements
    edges = [(a, b) for a in range(N) for b in range(a + 1, N) if adjacent(g, a, b)]
    return Graph(N, tuple(edges))


def is_tree(g: Graph) -> bool:
    """Connected with m = n - 1.  The empty graph is not a tree."""
    if g.n == 0 or g.m != g.n - 1:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbor_sets[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def bipartition(g: Graph):
    """2-coloring (A1, A2) as frozensets if g is bipartite, else None.

    Each component root (smallest unvisited vertex) is colored into A1, so the
    smallest vertex overall always lands in A1.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w in g.neighbor_sets[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    a1 = frozenset(v for v in range(g.n) if color[v] == 0)
    a2 = frozenset(v for v in range(g.n) if color[v] == 1)
    return a1, a2


@dataclass(frozen=True)
class Biclique:
    """A complete bipartite subgraph, sides stored sorted with |side_r| <= |side_s|.

    The induced flag records whether the host graph has no edge joining two
    vertices of the same side (i.e. the subgraph induced on the union is
    exactly complete bipartite).
    """

    side_r: tuple
    side_s: tuple
    induced: bool = True

    @property
    def r(self):
        return len(self.side_r)

    @property
    def s(self):
        return len(self.side_s)

    def vertices(self):
        return sorted(self.side_r + self.side_s)

    def edge_pairs(self):
        """All side-to-side vertex pairs, canonical (min, max) sorted order."""
        pairs = [tuple(sorted((u, w))) for u in self.side_r for w in self.side_s]
        return sorted(pairs)

    @classmethod
    def in_graph(cls, g: Graph, side_a, side_b):
        """Build and validate a biclique of g from two vertex sets.

        Raises if the sides overlap or any cross pair is not an edge; the
        induced flag is computed from g.  Sides are normalized so the smaller
        one (ties: lexicographically smaller) comes first.
        """
        a = tuple(sorted(set(side_a)))
        b = tuple(sorted(set(side_b)))
        if not a or not b:
            raise ValueError("biclique sides must be nonempty")
        if set(a) & set(b):
            raise ValueError("biclique sides must be disjoint")
        for v in a + b:
            if not (0 <= v < g.n):
                raise ValueError(f"vertex {v} out of range")
        for u in a:
            for w in b:
                if w not in g.neighbor_sets[u]:
                    raise ValueError(f"missing cross edge {{{u},{w}}}: not a biclique")
        induced = not (_has_internal_edge(g, a) or _has_internal_edge(g, b))
        if (len(a), a) > (len(b), b):
            a, b = b, a
        return cls(a, b, induced)


def _has_internal_edge(g, vertices):
    return any(w in g.neighbor_sets[u] for u, w in combinations(vertices, 2))


def enumerate_induced_bicliques(g: Graph, max_side: int):
    """All induced bicliques (R, S) of g with 1 <= |R| <= |S| <= max_side.

    Each biclique appears once up to swapping sides; output is sorted by
    (|R|, |S|, R, S).  Exhaustive over vertex subsets, so max_side keeps the
    search at desk scale.
    """
    if max_side < 1:
        raise ValueError("max_side must be >= 1")
    found = []
    for r in range(1, max_side + 1):
        for side_r in combinations(range(g.n), r):
            if _has_internal_edge(g, side_r):
                continue
            common = set(range(g.n)) - set(side_r)
            for u in side_r:
                common &= g.neighbor_sets[u]
            candidates = sorted(common)
            for s in range(r, max_side + 1):
                for side_s in combinations(candidates, s):
                    if _has_internal_edge(g, side_s):
                        continue
                    if r == s and side_r > side_s:
                        continue  # the swapped pair is emitted elsewhere
                    found.append(Biclique(side_r, side_s, True))
    found.sort(key=lambda b: (b.r, b.s, b.side_r, b.side_s))
    return found


def parse_graph(text: str) -> Graph:
    """Parse the graph text format: first data line 'n m', then m lines 'u v'.

    Blank lines and '#' comments are ignored; edges may appear in any order
    and are canonicalized by the Graph constructor.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"non-integer header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"header announces {m} edges, file has {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected edge line 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, tuple(edges))


def format_graph(g: Graph) -> str:
    """Serialize in the graph text format, canonical edge order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
