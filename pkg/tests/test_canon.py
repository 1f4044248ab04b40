import random

from indcomplex.canon import canonical_code
from indcomplex.graph import Graph

from util import cycle_graph, path_graph, random_graph, relabel


def test_relabeling_invariance_c6():
    rng = random.Random(0)
    G = cycle_graph(6)
    base = canonical_code(G)
    for _ in range(10):
        perm = list(range(6))
        rng.shuffle(perm)
        assert canonical_code(relabel(G, perm)) == base


def test_c6_vs_path():
    assert canonical_code(cycle_graph(6)) != canonical_code(path_graph(6))


def test_regular_non_isomorphic_pair():
    # C6 and two triangles are both 2-regular on 6 vertices; colour
    # refinement alone cannot split them, the search must
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_code(cycle_graph(6)) != canonical_code(two_triangles)


def test_invariance_random_graphs():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.randrange(1, 15)
        G = random_graph(rng, n, rng.uniform(0.1, 0.9))
        base = canonical_code(G)
        for _ in range(10):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_code(relabel(G, perm)) == base


def test_degree_sequence_separation():
    rng = random.Random(9)
    found = 0
    while found < 20:
        n = rng.randrange(2, 12)
        G = random_graph(rng, n, 0.4)
        H = random_graph(rng, n, 0.4)
        dg = sorted(G.degree(v) for v in range(n))
        dh = sorted(H.degree(v) for v in range(n))
        if dg != dh:
            assert canonical_code(G) != canonical_code(H)
            found += 1


def test_isolated_vertices_matter():
    G = Graph(3, [(0, 1)])
    H = Graph(2, [(0, 1)])
    assert canonical_code(G) != canonical_code(H)
