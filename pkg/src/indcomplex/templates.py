"""Search for the two per-tile matching templates that generate the
exponential family of cross-cycle classes.

A template pair (A, B) consists of matchings M_A = {(s_i, x_i)} and
M_B = {(s_i, z_i)} anchored on one set of spine vertices s_i, with
transversals sigma_A = {s_i} and sigma_B obtained from sigma_A by swapping
a non-empty subset of spines for their z partners.  This shape delivers
every property the pairing-matrix argument needs:

  * sigma_A is a transversal of both matchings, so any word pairing
    without a (B over A) coordinate evaluates to +-1;
  * sigma_B contains a vertex outside V(M_A), so those pairings vanish,
    giving the triangular matrix of full rank 2^k;
  * x_i and z_i are private neighbours of s_i, which makes both matchings
    induced and keeps every mixed placement induced as well (tiles are
    never adjacent).

Separator coverage: a separator vertex is adjacent to one 2-vertex side of
each flanking tile.  Under arbitrary words it stays dominated exactly when
some side of its group is hit by BOTH transversals, which is the joint
condition enforced here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, mask_of
from .crosscycles import MatchingWithTransversal
from .lattices import Tiling


class TemplateSearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class TileTemplate:
    """Matching edges and transversal in tile-local vertex ids."""

    label: str
    edges: tuple          # ((s_i, partner_i), ...)
    transversal: tuple    # sorted local ids

    @property
    def size(self):
        return len(self.edges)


def _maximal_independent_sets(G: Graph, limit=2_000_000):
    """Every maximal independent set of G, as a sorted list of masks.

    Branches on the least undominated vertex; trying its dominators in
    ascending order while forbidding earlier ones makes each set appear
    exactly once.
    """
    full = G.full_mask
    out = []

    def rec(chosen, dominated, forbidden):
        if dominated == full:
            out.append(chosen)
            if len(out) > limit:
                raise TemplateSearchError("too many maximal independent sets")
            return
        v = (~dominated & full).bit_length()
        v = (~dominated & full & -(~dominated & full)).bit_length() - 1
        options = (G.adj[v] | 1 << v) & ~forbidden & ~dominated
        blocked = 0
        for u in bits(options):
            rec(
                chosen | 1 << u,
                dominated | G.adj[u] | 1 << u,
                forbidden | blocked | G.adj[u],
            )
            blocked |= 1 << u
    rec(0, 0, 0)
    return out


def _private_neighbors(G: Graph, sigma_mask, s):
    """Neighbours of s adjacent to no other sigma vertex."""
    rest = sigma_mask & ~(1 << s)
    out = []
    for w in bits(G.adj[s]):
        if not (G.adj[w] & rest):
            out.append(w)
    return out


def _side_hits(sides_local, mask):
    return [i for i, (a, b) in enumerate(sides_local) if mask >> a & 1 or mask >> b & 1]


def search_tile_templates(tiling: Tiling, matching_sizes=None):
    """Deterministic search for a valid (A, B) template pair on the ideal
    tile of `tiling`; returns the first pair in search order."""
    local = tiling.local_graph
    offsets = tiling.offsets
    pos = {d: i for i, d in enumerate(offsets)}
    sides_local = [
        (pos[a], pos[b]) for _, (a, b) in tiling.side_table
    ]
    groups = [sorted(g) for g in tiling.side_groups]
    if matching_sizes is None:
        matching_sizes = {
            "kagome": (8,),
            "delta3": (2,),
            "delta4": tuple(range(6, 15)),
        }[tiling.kind]

    mis = _maximal_independent_sets(local)
    by_size = {}
    for mask in mis:
        by_size.setdefault(mask.bit_count(), []).append(mask)
    for size in by_size:
        by_size[size].sort(key=lambda m: tuple(bits(m)))
    fails = {"group-coverage": 0, "private-neighbours": 0,
             "partner-assignment": 0, "second-transversal": 0}

    for size in matching_sizes:
        for sigma_mask in by_size.get(size, ()):
            hit = set(_side_hits(sides_local, sigma_mask))
            if any(not (hit & set(g)) for g in groups):
                fails["group-coverage"] += 1
                continue
            spine = tuple(bits(sigma_mask))
            privates = [_private_neighbors(local, sigma_mask, s) for s in spine]
            if any(len(p) < 2 for p in privates):
                fails["private-neighbours"] += 1
                continue
            found = _assign_partners(
                local, sides_local, groups, spine, privates, hit, by_size, fails
            )
            if found:
                return found
    raise TemplateSearchError(
        "no tile template pair found; rejection counts: "
        + ", ".join(f"{k}={v}" for k, v in fails.items())
    )


def _assign_partners(local, sides_local, groups, spine, privates, hit_a,
                     by_size, fails):
    k = len(spine)
    sigma_mask = mask_of(spine)
    xs = [None] * k
    zs = [None] * k

    def rec(i, xmask, zmask):
        if i == k:
            return finish(xmask, zmask)
        for x in privates[i]:
            if local.adj[x] & xmask or xmask >> x & 1:
                continue
            for z in privates[i]:
                if z == x or local.adj[z] & zmask or zmask >> z & 1:
                    continue
                xs[i], zs[i] = x, z
                got = rec(i + 1, xmask | 1 << x, zmask | 1 << z)
                if got:
                    return got
        return None

    def finish(xmask, zmask):
        # choose the least non-empty spine subset to swap for z partners
        # such that the second transversal still dominates the tile and
        # every side group keeps one side hit by both transversals
        maximal = set(by_size.get(k, ()))
        for swap in range(1, 1 << k):
            sigma_b = sigma_mask
            for i in bits(swap):
                sigma_b = (sigma_b & ~(1 << spine[i])) | 1 << zs[i]
            if sigma_b not in maximal:
                continue
            hit_b = set(_side_hits(sides_local, sigma_b))
            if any(not (hit_a & hit_b & set(g)) for g in groups):
                continue
            a = TileTemplate(
                "A",
                tuple((spine[i], xs[i]) for i in range(k)),
                spine,
            )
            b = TileTemplate(
                "B",
                tuple((spine[i], zs[i]) for i in range(k)),
                tuple(bits(sigma_b)),
            )
            return a, b
        fails["second-transversal"] += 1
        return None

    got = rec(0, 0, 0)
    if got is None:
        fails["partner-assignment"] += 1
    return got


def family_from_assignment(tiling: Tiling, templates, word) -> MatchingWithTransversal:
    """Glue per-tile templates along an {A,B} word into one global
    matching with transversal."""
    a, b = templates
    if len(word) != tiling.k:
        raise ValueError(f"word length {len(word)} != number of tiles {tiling.k}")
    edges = []
    transversal = 0
    for t, letter in enumerate(word):
        tpl = a if letter == "A" else b
        ids = tiling.tiles[t]
        edges.extend((ids[i], ids[j]) for i, j in tpl.edges)
        transversal |= mask_of(ids[i] for i in tpl.transversal)
    return MatchingWithTransversal(tuple(edges), transversal)


def all_words(k):
    """The 2^k words over {A, B} in lexicographic order (A < B)."""
    out = []
    for bitsword in range(1 << k):
        out.append("".join("B" if bitsword >> (k - 1 - i) & 1 else "A" for i in range(k)))
    return out
