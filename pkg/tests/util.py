"""Shared helpers for the test suite: tiny independent oracles and graph
constructors.  The oracles deliberately avoid the library's own enumeration
and homology code paths."""

import itertools
import random

from indcomplex.graph import Graph


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(rng: random.Random, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_forest(rng: random.Random, n):
    """Random forest: each non-root vertex attaches to an earlier vertex or
    stays isolated."""
    edges = []
    for v in range(1, n):
        if rng.random() < 0.8:
            edges.append((rng.randrange(v), v))
    return Graph(n, edges)


def brute_independent_sets(G):
    """All independent sets by testing every subset (oracle)."""
    out = []
    for r in range(G.n + 1):
        for comb in itertools.combinations(range(G.n), r):
            if all(not G.has_edge(u, v) for u, v in itertools.combinations(comb, 2)):
                out.append(frozenset(comb))
    return out


def relabel(G, perm):
    """Graph with vertex v renamed perm[v]."""
    return Graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
