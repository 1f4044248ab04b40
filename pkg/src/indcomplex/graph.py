"""Undirected simple graphs with bitset adjacency.

Vertices are dense 0-based integers.  A vertex set is a plain Python int
used as a bitmask (bit i = vertex i), which keeps all the hot set
operations (union, intersection, complement, popcount) single machine
instructions per word.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_FACE_CAP = 50_000_000


class GraphError(ValueError):
    pass


class EnumerationOverflow(RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"enumeration exceeded cap of {cap} faces")


def bits(mask: int):
    """Iterate over the set bit positions of a mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    adj[v] is the neighbour bitmask of v.  coords, when present, holds one
    rational (x, y) pair per vertex; for lattice quotients y is stored in
    units of sqrt(3) so everything stays rational.
    """

    __slots__ = ("n", "adj", "coords", "source_vertices")

    def __init__(self, n, edges=(), coords=None, source_vertices=None):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        if coords is not None:
            coords = tuple((Fraction(x), Fraction(y)) for x, y in coords)
            if len(coords) != n:
                raise GraphError("coords length must equal vertex count")
        self.coords = coords
        # vertex-id mapping back to a parent graph, for induced subgraphs
        self.source_vertices = source_vertices

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self):
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(m):
                yield (u, v)

    def num_edges(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def degree(self, v) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u, v) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


def check_vertex_set(G: Graph, S: int):
    if S < 0 or S >> G.n:
        raise GraphError(f"vertex set {bin(S)} has bits outside 0..{G.n - 1}")


def induced_subgraph(G: Graph, S: int) -> Graph:
    """Subgraph induced on the vertex mask S, vertices relabelled densely.

    The returned graph records the original ids in source_vertices.
    """
    check_vertex_set(G, S)
    verts = list(bits(S))
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for v in verts:
        for u in bits(G.adj[v] & S):
            if u > v:
                edges.append((index[v], index[u]))
    coords = [G.coords[v] for v in verts] if G.coords is not None else None
    return Graph(len(verts), edges, coords=coords, source_vertices=tuple(verts))


def closed_neighborhood(G: Graph, W: int) -> int:
    """N[W]: W together with every neighbour of W."""
    check_vertex_set(G, W)
    out = W
    for v in bits(W):
        out |= G.adj[v]
    return out


def connected_components(G: Graph):
    """Vertex masks of the connected components, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            grow = 0
            for u in bits(frontier):
                grow |= G.adj[u]
            frontier = grow & ~comp
            comp |= grow
        comps.append(comp)
        seen |= comp
    return comps


def is_forest(G: Graph) -> bool:
    return G.num_edges() == G.n - len(connected_components(G))


def is_connected(G: Graph) -> bool:
    return G.n == 0 or len(connected_components(G)) == 1


def enumerate_independent_sets(G: Graph, cap: int = DEFAULT_FACE_CAP):
    """All independent sets of G as bitmasks, ascending, including 0 (= the
    empty set).

    Processing vertices in id order keeps the output exactly in increasing
    bitmask order: sets whose maximum vertex is v form one contiguous block.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    sets = [0]
    for v in range(G.n):
        non_nbr = ~G.adj[v]
        bit = 1 << v
        block = [s | bit for s in sets if s & non_nbr == s]
        if len(sets) + len(block) > cap:
            raise EnumerationOverflow(cap)
        sets.extend(block)
    return sets


def count_independent_sets(G: Graph, cap: int = DEFAULT_FACE_CAP) -> int:
    return len(enumerate_independent_sets(G, cap))


def is_dominating(G: Graph, S: int) -> bool:
    """True iff N[S] covers every vertex of G."""
    check_vertex_set(G, S)
    return closed_neighborhood(G, S) == G.full_mask


def is_maximal_independent(G: Graph, S: int) -> bool:
    return G.is_independent(S) and is_dominating(G, S)


# ---------------------------------------------------------------------------
# edge-list interchange format:
#   first line "n m", then m lines "u v", then optionally a line "coords"
#   followed by n lines "x y" with rational entries like "3/2".


def write_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    if G.coords is not None:
        lines.append("coords")
        lines.extend(f"{x} {y}" for x, y in G.coords)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty graph file")
    try:
        n, m = map(int, lines[0].split())
    except Exception as exc:
        raise GraphError(f"bad header line {lines[0]!r}") from exc
    if len(lines) < 1 + m:
        raise GraphError("truncated edge list")
    edges = []
    for ln in lines[1 : 1 + m]:
        u, v = map(int, ln.split())
        edges.append((u, v))
    coords = None
    rest = lines[1 + m :]
    if rest:
        if rest[0] != "coords" or len(rest) != 1 + n:
            raise GraphError("malformed coordinate block")
        coords = [tuple(Fraction(t) for t in ln.split()) for ln in rest[1:]]
    return Graph(n, edges, coords=coords)
