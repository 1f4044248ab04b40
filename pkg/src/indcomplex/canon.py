"""Canonical forms for graph isomorphism deduplication.

Colour refinement plus individualisation on the smallest non-singleton
colour class, taking the lexicographically least adjacency bit-string over
all leaves of the search tree.  Exponential in the worst case, but the
graphs handled here have at most a few dozen vertices and refinement is
almost always discrete after one individualisation.
"""

from __future__ import annotations

from .graph import Graph, bits


def _refine(adj, colors):
    """Iterate colour refinement until stable.  Colour ids are assigned by
    sorting signatures, so they are independent of the input labelling."""
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[u] for u in bits(adj[v]))
            sigs.append((colors[v], tuple(nbr)))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = tuple(order[s] for s in sigs)
        if new == colors:
            return colors
        colors = new


def _code_from_order(adj, order):
    """Adjacency bit-string of the graph relabelled by `order`."""
    n = len(adj)
    pos = {v: i for i, v in enumerate(order)}
    out = bytearray()
    acc = 0
    nbits = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            acc = (acc << 1) | (row >> order[j] & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


def _search(adj, colors, best):
    n = len(adj)
    colors = _refine(adj, colors)
    # group vertices by colour
    classes = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    target = None
    for c in sorted(classes):
        if len(classes[c]) > 1:
            target = classes[c]
            break
    if target is None:
        order = sorted(range(n), key=lambda v: colors[v])
        code = _code_from_order(adj, order)
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    fresh = max(colors) + 1
    for v in target:
        child = tuple(fresh if u == v else colors[u] for u in range(n))
        _search(adj, child, best)


def canonical_code(G: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    n = G.n
    header = n.to_bytes(4, "big")
    if n == 0:
        return header
    best = [None]
    _search(G.adj, tuple(G.degree(v) for v in range(n)), best)
    return header + best[0]
