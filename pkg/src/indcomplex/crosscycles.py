"""Cross-cycle certificates: induced matchings with dominating transversals,
their homology classes, the evaluation pairing, and pairing-matrix ranks.

A matching M = ((v_1,w_1),...,(v_k,w_k)) carries the cycle

    ([v_1]-[w_1]) ^ ... ^ ([v_k]-[w_k])

in degree k-1; a maximal independent set sigma of size k carries the
cocycle assigning +-1 to the orientations of sigma.  Simplices are oriented
by sorted vertex order, so a term of the expansion picks up (-1) for every
w chosen times the parity of the permutation sorting the chosen vertices.
The edge pairs keep their given (v, w) order; flipping one flips the sign
of the whole class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactrank import rank_dense
from .graph import Graph, bits, closed_neighborhood, is_dominating, mask_of


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class MatchingWithTransversal:
    """An ordered list of vertex pairs plus a chosen transversal mask."""

    edges: tuple
    transversal: int

    @classmethod
    def make(cls, edges, transversal):
        edges = tuple((int(v), int(w)) for v, w in edges)
        if not isinstance(transversal, int):
            transversal = mask_of(transversal)
        return cls(edges, transversal)

    @property
    def k(self):
        return len(self.edges)

    def vertex_mask(self) -> int:
        m = 0
        for v, w in self.edges:
            m |= (1 << v) | (1 << w)
        return m

    def transversal_vertices(self):
        return tuple(bits(self.transversal))


def is_induced_matching(G: Graph, edges) -> bool:
    """True iff the pairs are pairwise disjoint edges of G with no other
    edges among their endpoints."""
    seen = 0
    for v, w in edges:
        if not G.has_edge(v, w):
            raise CertificateError(f"({v},{w}) is not an edge of the graph")
        pair = (1 << v) | (1 << w)
        if seen & pair:
            return False
        seen |= pair
    for v, w in edges:
        others = seen & ~((1 << v) | (1 << w))
        if (G.adj[v] | G.adj[w]) & others:
            return False
    return True


@dataclass(frozen=True)
class PairValidation:
    induced: bool
    hits_each_edge_once: bool
    dominating: bool

    @property
    def ok(self):
        return self.induced and self.hits_each_edge_once and self.dominating


def validate_pair(G: Graph, M: MatchingWithTransversal) -> PairValidation:
    induced = is_induced_matching(G, M.edges)
    t = M.transversal
    hits = all((t >> v & 1) + (t >> w & 1) == 1 for v, w in M.edges)
    hits = hits and t & ~M.vertex_mask() == 0
    return PairValidation(induced, hits, is_dominating(G, t))


def cross_cycle_chain(G: Graph, M: MatchingWithTransversal) -> dict:
    """Expansion of the matching cycle: sorted-simplex -> coefficient.

    Every term must be an independent set of G (guaranteed for an induced
    matching); the boundary of the result is zero.
    """
    if not is_induced_matching(G, M.edges):
        raise CertificateError("matching is not induced")
    chain = {}
    for picks in range(1 << M.k):
        verts = []
        sign = 1
        for i, (v, w) in enumerate(M.edges):
            if picks >> i & 1:
                verts.append(w)
                sign = -sign
            else:
                verts.append(v)
        sign *= _sort_parity(verts)
        chain[tuple(sorted(verts))] = Fraction(sign)
    return chain


def _sort_parity(seq) -> int:
    """Sign of the permutation sorting seq (distinct entries)."""
    inv = 0
    for i, j in combinations(range(len(seq)), 2):
        if seq[i] > seq[j]:
            inv += 1
    return -1 if inv % 2 else 1


def chain_boundary(chain: dict) -> dict:
    out = {}
    for face, coeff in chain.items():
        for i in range(len(face)):
            sub = face[:i] + face[i + 1 :]
            s = coeff if i % 2 == 0 else -coeff
            out[sub] = out.get(sub, 0) + s
    return {f: c for f, c in out.items() if c}


def transversal_cocycle(G: Graph, sigma: int) -> dict:
    """Indicator cochain of sigma with +1 on the sorted orientation."""
    if not G.is_independent(sigma):
        raise CertificateError("transversal is not independent")
    return {tuple(bits(sigma)): Fraction(1)}


def is_cocycle(G: Graph, sigma: int) -> bool:
    """The indicator cochain is a cocycle iff sigma is a maximal face,
    i.e. no vertex outside closed_neighborhood(sigma) extends it."""
    return closed_neighborhood(G, sigma) == G.full_mask


def evaluate(cochain: dict, chain: dict) -> Fraction:
    return sum((cochain.get(f, 0) * c for f, c in chain.items()), Fraction(0))


def pairing_value(G: Graph, sigma: int, M: MatchingWithTransversal):
    """<sigma_cocycle, cycle of M> by the combinatorial shortcut.

    Returns (value, degree_mismatch): 0 unless sigma picks exactly one
    endpoint of every edge; otherwise the sign of that term.  Degree
    mismatches are flagged, not raised.
    """
    size = sigma.bit_count()
    if size != M.k:
        return 0, True
    if sigma & ~M.vertex_mask():
        return 0, False
    verts = []
    sign = 1
    for v, w in M.edges:
        hit_v = sigma >> v & 1
        hit_w = sigma >> w & 1
        if hit_v + hit_w != 1:
            return 0, False
        if hit_w:
            verts.append(w)
            sign = -sign
        else:
            verts.append(v)
    return sign * _sort_parity(verts), False


@dataclass
class PairingMatrix:
    """Rows indexed by matchings, columns by transversals, entries in
    {-1,0,1}; row/column labels kept for reports."""

    entries: list
    row_labels: list
    col_labels: list

    def rank(self) -> int:
        return rank_dense(self.entries)

    def as_lists(self):
        return [list(r) for r in self.entries]


def pairing_matrix(G: Graph, family) -> PairingMatrix:
    """Pairing of every family transversal against every family matching."""
    ent = []
    for s, Ms in enumerate(family):
        row = []
        for t, Mt in enumerate(family):
            val, _ = pairing_value(G, Mt.transversal, Ms)
            row.append(val)
        ent.append(row)
    labels = list(range(len(family)))
    return PairingMatrix(ent, labels, labels)


def rank_lower_bound(P: PairingMatrix) -> int:
    """Exact rank; a certified lower bound for the Betti number in the
    degree of the classes."""
    return P.rank()


def express_in_basis(G: Graph, target: MatchingWithTransversal, basis):
    """Coefficients a_j with cycle(target) = sum a_j cycle(basis_j), solved
    from the pairings against the basis transversals."""
    k = len(basis)
    A = [[Fraction(pairing_value(G, Mi.transversal, Mj)[0]) for Mj in basis]
         for Mi in basis]
    b = [Fraction(pairing_value(G, Mi.transversal, target)[0]) for Mi in basis]
    # fraction Gaussian elimination
    for col in range(k):
        piv = next((r for r in range(col, k) if A[r][col]), None)
        if piv is None:
            raise CertificateError("basis pairing matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        b[col], b[piv] = b[piv], b[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        b[col] *= inv
        for r in range(k):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                b[r] -= f * b[col]
    return b
