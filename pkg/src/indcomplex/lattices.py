"""Periodic lattice quotients and their hexagon tilings.

All lattices live on the triangular point set Z^2, with (p, q) placed at
x = p + q/2, y = q * sqrt(3)/2.  The three line families are rows
(constant q), columns (constant p) and diagonals (constant p+q).  Erasing
every d-th line of each family deletes the points whose three lines are
all erased and the edges along erased lines:

  * kagome (d = 2): points with (p, q) = (even, odd) disappear and the
    survivors are 4-regular;
  * delta lattices (d = 3, 4): points with p = q = 0 (mod d) disappear.

A quotient is the torus obtained by dividing by a finite-index subgroup of
translations; the subgroup must preserve the deleted class, which forces
the mild shear conventions below.

Tilings follow the same blueprint in every case: tiles are metric balls
around a sub-lattice of the deleted points ("hole centres"), the separator
U is everything else, and each U vertex touches a tile through a 2-vertex
"side".  The side tables and their antipodal grouping are derived from the
infinite model at import time rather than hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, bits, mask_of


class LatticeError(ValueError):
    pass


class DegenerateLatticeError(LatticeError):
    """Periods too small: the quotient would have loops or multi-edges."""


class NotTileableError(LatticeError):
    pass


def _q_form(dp, dq):
    """Squared euclidean distance of the displacement (dp, dq)."""
    return dp * dp + dp * dq + dq * dq


class LatticeModel:
    """Edge rules of one infinite lattice family."""

    def __init__(self, name, deleted, row_ok, col_ok, diag_ok, hole0,
                 sigma_basis, tile_radius_sq, tile_size, u_share):
        self.name = name
        self.deleted = deleted        # (p, q) -> bool, point erased
        self.row_ok = row_ok          # q -> bool, row edges present
        self.col_ok = col_ok
        self.diag_ok = diag_ok
        self.hole0 = hole0            # reference hole for tile centres
        self.sigma_basis = sigma_basis  # tile super-lattice basis
        self.tile_radius_sq = tile_radius_sq
        self.tile_size = tile_size
        self.u_share = u_share        # |U| per tile

    def is_vertex(self, p, q):
        return not self.deleted(p, q)

    def neighbors(self, p, q):
        out = []
        if self.row_ok(q):
            out += [(p - 1, q), (p + 1, q)]
        if self.col_ok(p):
            out += [(p, q - 1), (p, q + 1)]
        if self.diag_ok(p + q):
            out += [(p + 1, q - 1), (p - 1, q + 1)]
        return [w for w in out if self.is_vertex(*w)]

    def tile_offsets(self):
        r2 = self.tile_radius_sq
        span = 4
        offs = [
            (dp, dq)
            for dp in range(-span, span + 1)
            for dq in range(-span, span + 1)
            if 0 < _q_form(dp, dq) <= r2
            and self.is_vertex(self.hole0[0] + dp, self.hole0[1] + dq)
        ]
        offs.sort(key=lambda d: (d[1], d[0]))
        if len(offs) != self.tile_size:
            raise AssertionError(
                f"{self.name}: tile has {len(offs)} vertices, expected {self.tile_size}"
            )
        return tuple(offs)


KAGOME = LatticeModel(
    "kagome",
    deleted=lambda p, q: p % 2 == 0 and q % 2 == 1,
    row_ok=lambda q: q % 2 == 0,
    col_ok=lambda p: p % 2 == 1,
    diag_ok=lambda s: s % 2 == 0,
    hole0=(0, 1),
    sigma_basis=((4, 4), (-4, 8)),
    tile_radius_sq=9,
    tile_size=30,
    u_share=6,
)


def _delta_model(d):
    tile_r2, size, share = {3: (1, 6, 2), 4: (9, 36, 9)}[d]
    return LatticeModel(
        f"delta{d}",
        deleted=lambda p, q: p % d == 0 and q % d == 0,
        row_ok=lambda q: q % d != 0,
        col_ok=lambda p: p % d != 0,
        diag_ok=lambda s: s % d != 0,
        hole0=(0, 0),
        sigma_basis=((3, 0), (0, 3)) if d == 3 else ((4, 4), (-4, 8)),
        tile_radius_sq=tile_r2,
        tile_size=size,
        u_share=share,
    )


DELTA3 = _delta_model(3)
DELTA4 = _delta_model(4)

TRIANGULAR = LatticeModel(
    "triangular",
    deleted=lambda p, q: False,
    row_ok=lambda q: True,
    col_ok=lambda p: True,
    diag_ok=lambda s: True,
    hole0=(0, 0),
    sigma_basis=((1, 0), (0, 1)),
    tile_radius_sq=0,
    tile_size=0,
    u_share=0,
)


class _Quotient:
    """Torus quotient by the lattice <(P, 0), (S, Q)>."""

    def __init__(self, model, P, S, Q):
        self.model = model
        self.P, self.S, self.Q = P, S, Q

    def reduce(self, p, q):
        t = q // self.Q
        return ((p - t * self.S) % self.P, q - t * self.Q)

    def build_graph(self):
        model = self.model
        verts = [
            (p, q)
            for q in range(self.Q)
            for p in range(self.P)
            if model.is_vertex(p, q)
        ]
        index = {v: i for i, v in enumerate(verts)}
        sightings = {}
        for v in verts:
            i = index[v]
            for w in model.neighbors(*v):
                j = index[self.reduce(*w)]
                if i == j:
                    raise DegenerateLatticeError(
                        f"{model.name} quotient has a loop at {v}; periods too small"
                    )
                key = (min(i, j), max(i, j))
                sightings[key] = sightings.get(key, 0) + 1
        edges = []
        for key, count in sightings.items():
            if count > 2:
                raise DegenerateLatticeError(
                    f"{model.name} quotient has a multi-edge; periods too small"
                )
            edges.append(key)
        coords = [(Fraction(2 * p + q, 2), Fraction(q, 2)) for p, q in verts]
        G = Graph(len(verts), edges, coords=coords)
        return G, verts, index


def _coords_to_pq(G: Graph):
    """Invert the stored x = p + q/2, y = q/2 coordinates."""
    if G.coords is None:
        raise LatticeError("graph has no coordinates; generate it with `gen`")
    pts = []
    for x, y in G.coords:
        q = 2 * y
        p = x - y
        if q.denominator != 1 or p.denominator != 1:
            raise LatticeError("coordinates are not lattice points")
        pts.append((int(p), int(q)))
    return pts


def _quotient_from_graph(model, G):
    pts = _coords_to_pq(G)
    Q = max(q for _, q in pts) + 1
    P = max(p for p, _ in pts) + 1
    for S in _shear_candidates(model, Q):
        quot = _Quotient(model, P, S, Q)
        try:
            H, verts, index = quot.build_graph()
        except DegenerateLatticeError:
            continue
        if verts == pts and H.adj == G.adj:
            return quot, verts, index
    raise LatticeError(f"graph is not a {model.name} quotient in generator layout")


def _shear_candidates(model, Q):
    if model is KAGOME:
        m = Q // 2
        return [-m if m % 2 == 0 else 1 - m]
    if model is DELTA4:
        m = Q // 4
        return [4 * (m % 3)]
    return [0]


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise LatticeError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_kagome(n: int, m: int) -> Graph:
    """Kagome quotient with 3*n*m vertices, 4-regular.

    Periods are n steps of (2, 0) and m steps of (0, sqrt(3)); the latter
    is only a translation of the lattice combined with an even horizontal
    shift, so odd m uses the nearest class-preserving shear (1, m*sqrt(3)).
    """
    if n < 2 or m < 2:
        raise DegenerateLatticeError("kagome needs n >= 2 and m >= 2")
    s = -m if m % 2 == 0 else 1 - m
    G, verts, _ = _Quotient(KAGOME, 2 * n, s, 2 * m).build_graph()
    assert G.n == 3 * n * m
    return G


def gen_triangular(n: int, m: int) -> Graph:
    if n < 3 or m < 3:
        raise DegenerateLatticeError("triangular quotient needs n, m >= 3")
    G, _, _ = _Quotient(TRIANGULAR, n, 0, m).build_graph()
    return G


def gen_delta(d: int, n: int, m: int) -> Graph:
    """Triangular lattice with every d-th line removed, on an n x m torus
    of d x d cells (8 vertices per cell for d=3, 15 for d=4)."""
    if d not in (3, 4):
        raise LatticeError("d must be 3 or 4")
    if n < 2 or m < 2:
        raise DegenerateLatticeError("delta quotient needs n, m >= 2")
    model = DELTA3 if d == 3 else DELTA4
    S = 0 if d == 3 else 4 * (m % 3)
    G, verts, _ = _Quotient(model, d * n, S, d * m).build_graph()
    return G


# ---------------------------------------------------------------------------
# tilings


@dataclass
class Tiling:
    """Partition of a lattice quotient into tiles plus the separator U.

    sides[t] lists, in side-table order, pairs (u_id, (a_id, b_id)): the
    separator vertex and its two neighbours inside tile t.  side_groups
    are index sets into that table; within each group at least one side
    must be hit by every template transversal placed on any flanking tile
    (see templates.search_tile_templates).
    """

    graph: Graph
    kind: str
    offsets: tuple
    tiles: tuple
    tile_masks: tuple
    separator: int
    sides: tuple
    side_table: tuple
    side_groups: tuple
    local_graph: Graph
    centers: tuple

    @property
    def k(self):
        return len(self.tiles)


def _side_table_and_groups(model):
    """Boundary structure of one ideal tile, from the infinite lattice."""
    c0 = model.hole0
    offs = model.tile_offsets()
    tile = {(c0[0] + dp, c0[1] + dq) for dp, dq in offs}
    u_pairs = {}
    for v in tile:
        for w in model.neighbors(*v):
            if w not in tile:
                u_pairs.setdefault(w, set()).add(v)
    table = []
    for u in sorted(u_pairs, key=lambda w: (w[1], w[0])):
        pair = sorted(u_pairs[u], key=lambda w: (w[1], w[0]))
        if len(pair) != 2:
            raise AssertionError(f"{model.name}: side at {u} has {len(pair)} contacts")
        table.append(
            (
                (u[0] - c0[0], u[1] - c0[1]),
                tuple((a - c0[0], b - c0[1]) for a, b in pair),
            )
        )
    # antipodal grouping: the same separator vertex seen from each tile
    # flanking it; flanking centres are found among nearby Sigma vectors
    (s1p, s1q), (s2p, s2q) = model.sigma_basis
    nearby = [
        (a * s1p + b * s2p, a * s1q + b * s2q)
        for a in range(-2, 3)
        for b in range(-2, 3)
    ]
    index = {u: i for i, (u, _) in enumerate(table)}
    groups = set()
    for u, _ in table:
        members = []
        for cp, cq in nearby:
            rel = (u[0] - cp, u[1] - cq)
            if rel in index:
                members.append(index[rel])
        groups.add(frozenset(members))
    return tuple(table), tuple(sorted(groups, key=sorted))


def _local_tile_graph(model, offs):
    c0 = model.hole0
    pos = {(c0[0] + dp, c0[1] + dq): i for i, (dp, dq) in enumerate(offs)}
    edges = set()
    for v, i in pos.items():
        for w in model.neighbors(*v):
            if w in pos:
                j = pos[w]
                edges.add((min(i, j), max(i, j)))
    return Graph(len(offs), sorted(edges))


def _tiling(model, G: Graph, kind: str) -> Tiling:
    quot, verts, index = _quotient_from_graph(model, G)
    (s1p, s1q), (s2p, s2q) = model.sigma_basis
    det = s1p * s2q - s1q * s2p

    def in_sigma(x, y):
        a = x * s2q - y * s2p
        b = y * s1p - x * s1q
        return a % det == 0 and b % det == 0

    for v in ((quot.P, 0), (quot.S, quot.Q)):
        if not in_sigma(*v):
            raise NotTileableError(
                f"{model.name} quotient of periods {quot.P // _cell(model)}x"
                f"{quot.Q // _cell(model)} does not admit the hexagon tiling"
            )
    # centres: the reference hole orbit under Sigma, reduced to the torus
    seen = {quot.reduce(*model.hole0)}
    frontier = list(seen)
    while frontier:
        cp, cq = frontier.pop()
        for dp, dq in ((s1p, s1q), (s2p, s2q), (-s1p, -s1q), (-s2p, -s2q)):
            c = quot.reduce(cp + dp, cq + dq)
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    centers = sorted(seen, key=lambda c: (c[1], c[0]))
    offs = model.tile_offsets()
    table, groups = _side_table_and_groups(model)

    tiles = []
    masks = []
    used = 0
    for cp, cq in centers:
        ids = tuple(index[quot.reduce(cp + dp, cq + dq)] for dp, dq in offs)
        mask = mask_of(ids)
        if mask.bit_count() != len(offs) or mask & used:
            raise NotTileableError(f"{model.name} tiles overlap; periods too small")
        used |= mask
        tiles.append(ids)
        masks.append(mask)
    separator = G.full_mask & ~used
    sides = []
    for cp, cq in centers:
        row = []
        for (up, uq), ((ap, aq), (bp, bq)) in table:
            u = index[quot.reduce(cp + up, cq + uq)]
            a = index[quot.reduce(cp + ap, cq + aq)]
            b = index[quot.reduce(cp + bp, cq + bq)]
            row.append((u, (a, b)))
        sides.append(tuple(row))

    tiling = Tiling(
        graph=G,
        kind=kind,
        offsets=offs,
        tiles=tuple(tiles),
        tile_masks=tuple(masks),
        separator=separator,
        sides=tuple(sides),
        side_table=table,
        side_groups=groups,
        local_graph=_local_tile_graph(model, offs),
        centers=tuple(centers),
    )
    _validate_tiling(model, tiling)
    return tiling


def _cell(model):
    return {"kagome": 2, "delta3": 3, "delta4": 4}.get(model.name, 1)


def _validate_tiling(model, T: Tiling):
    G = T.graph
    k = T.k
    if T.separator.bit_count() != model.u_share * k:
        raise AssertionError("separator size is off")
    if sum(m.bit_count() for m in T.tile_masks) + T.separator.bit_count() != G.n:
        raise AssertionError("tiles and separator do not partition the vertices")
    for i, mi in enumerate(T.tile_masks):
        reach = 0
        for v in bits(mi):
            reach |= G.adj[v]
        for j, mj in enumerate(T.tile_masks):
            if i != j and reach & mj:
                raise AssertionError("edges between distinct tiles")
    for t, row in enumerate(T.sides):
        mask = T.tile_masks[t]
        for u, (a, b) in row:
            if not T.separator >> u & 1:
                raise AssertionError("side vertex not in separator")
            if not (mask >> a & 1 and mask >> b & 1):
                raise AssertionError("side pair not inside its tile")
            if not (G.has_edge(u, a) and G.has_edge(u, b)):
                raise AssertionError("side pair not adjacent to its separator vertex")
    for u in bits(T.separator):
        if G.adj[u] & T.separator:
            raise AssertionError("separator is not independent")
    # every tile is the same local graph
    local = T.local_graph
    for ids in T.tiles:
        back = {v: i for i, v in enumerate(ids)}
        for i, v in enumerate(ids):
            nbr = {back[w] for w in bits(G.adj[v]) if w in back}
            if nbr != set(bits(local.adj[i])):
                raise AssertionError("tile does not match the ideal tile graph")


def hexagon_tiling(H: Graph) -> Tiling:
    """Tiling of a kagome quotient into 30-vertex hexagons; requires 6|n
    and 4|m.  Each tile has |U|-share 6 and twelve boundary sides."""
    return _tiling(KAGOME, H, "kagome")


def delta_tiling(G: Graph, d: int) -> Tiling:
    if d == 3:
        return _tiling(DELTA3, G, "delta3")
    if d == 4:
        return _tiling(DELTA4, G, "delta4")
    raise LatticeError("d must be 3 or 4")
