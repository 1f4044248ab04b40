import itertools
import random

from indcomplex.complexes import (
    SimplicialComplex,
    f_polynomial,
    independence_complex,
    reduced_euler_characteristic,
    witten_index,
)
from indcomplex.graph import Graph
from indcomplex.homology import (
    betti_numbers,
    betti_numbers_mod_p,
    boundary_matrix,
    check_euler_poincare,
    euler_from_betti,
    join_betti,
    total_betti,
)

from util import cycle_graph, random_graph

EDGE = Graph(2, [(0, 1)])
MATCHING2 = Graph(4, [(0, 1), (2, 3)])


def test_independence_complex_shapes():
    K = independence_complex(EDGE)
    assert K.f_vector() == [1, 2]  # S^0
    K2 = independence_complex(MATCHING2)
    assert K2.num_faces() == 9  # boundary of the square
    assert K2.f_vector() == [1, 4, 4]
    K0 = independence_complex(Graph(0))
    assert K0.faces == {-1: [()]}


def test_betti_of_spheres_and_c6():
    assert betti_numbers(independence_complex(EDGE)) == {0: 1}
    assert betti_numbers(independence_complex(MATCHING2)) == {1: 1}
    k3 = Graph(6, [(0, 1), (2, 3), (4, 5)])
    assert betti_numbers(independence_complex(k3)) == {2: 1}
    assert betti_numbers(independence_complex(cycle_graph(6))) == {1: 2}


def test_betti_empty_complex_and_cone():
    assert betti_numbers(independence_complex(Graph(0))) == {-1: 1}
    # a graph with an isolated vertex gives a cone, so everything vanishes
    cone = Graph(4, [(0, 1), (1, 2)])
    assert betti_numbers(independence_complex(cone)) == {}
    assert total_betti(independence_complex(cone)) == 0


def test_total_betti():
    assert total_betti(independence_complex(cycle_graph(6))) == 2
    assert total_betti(independence_complex(Graph(0))) == 1


def test_witten_index():
    assert witten_index(EDGE) == -1
    assert witten_index(cycle_graph(6)) == 2
    assert witten_index(Graph(1)) == 0


def test_f_polynomial():
    assert f_polynomial(independence_complex(EDGE)) == [1, 2]
    assert f_polynomial(independence_complex(cycle_graph(6))) == [1, 6, 9, 2]
    assert f_polynomial(independence_complex(Graph(0))) == [1]


def test_boundary_squared_is_zero():
    rng = random.Random(1)
    for _ in range(10):
        G = random_graph(rng, rng.randrange(3, 9), 0.4)
        K = independence_complex(G)
        for d in range(1, K.dim + 1):
            hi, nmid = boundary_matrix(K, d)
            lo, nlow = boundary_matrix(K, d - 1)
            for row in hi:  # row of d_d composed with d_{d-1}
                acc = {}
                for mid, s in row.items():
                    for lowc, s2 in lo[mid].items():
                        acc[lowc] = acc.get(lowc, 0) + s * s2
                assert all(v == 0 for v in acc.values())


def test_join_betti_basics():
    s0 = {0: 1}
    assert join_betti(s0, s0) == {1: 1}
    unit = {-1: 1}
    b = {0: 2, 3: 5}
    assert join_betti(b, unit) == b
    c6 = betti_numbers(independence_complex(cycle_graph(6)))
    assert join_betti(c6, c6) == {3: 4}


def test_join_betti_against_disjoint_union():
    # I(G (+) H) = I(G) * I(H): degreewise equality on random pairs
    rng = random.Random(2)
    for _ in range(30):
        n1, n2 = rng.randrange(1, 8), rng.randrange(1, 8)
        G = random_graph(rng, n1, 0.4)
        H = random_graph(rng, n2, 0.4)
        union = Graph(
            n1 + n2,
            list(G.edges()) + [(u + n1, v + n1) for u, v in H.edges()],
        )
        direct = betti_numbers(independence_complex(union))
        joined = join_betti(
            betti_numbers(independence_complex(G)),
            betti_numbers(independence_complex(H)),
        )
        assert direct == joined
    # specific value promised for two hexagons
    two_c6 = Graph(12, [(i, (i + 1) % 6) for i in range(6)]
                   + [(6 + i, 6 + (i + 1) % 6) for i in range(6)])
    assert betti_numbers(independence_complex(two_c6)) == {3: 4}


def test_euler_poincare_and_witten_agreement():
    rng = random.Random(4)
    for _ in range(25):
        G = random_graph(rng, rng.randrange(1, 11), rng.uniform(0.2, 0.7))
        K = independence_complex(G)
        b = betti_numbers(K)
        assert check_euler_poincare(K, b)
        assert witten_index(G) == -euler_from_betti(b)


def test_rank_crosscheck_mod_random_prime():
    from sympy import randprime  # test-only oracle dependency

    rng = random.Random(6)
    p = randprime(1 << 29, 1 << 30)
    for _ in range(15):
        G = random_graph(rng, rng.randrange(2, 10), 0.4)
        K = independence_complex(G)
        assert betti_numbers(K) == betti_numbers_mod_p(K, p)


def test_absolute_bound():
    # total Betti of an independence complex never beats 2^(2v/5)
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randrange(1, 13)
        G = random_graph(rng, n, rng.uniform(0.1, 0.8))
        assert total_betti(independence_complex(G)) ** 5 <= 2 ** (2 * n)


def test_from_faces_validation():
    K = SimplicialComplex.from_faces([(0, 1), (1, 2), (0,), (1,), (2,)])
    assert K.f_vector() == [1, 3, 2]
    assert reduced_euler_characteristic(K) == -1 + 3 - 2
    try:
        SimplicialComplex.from_faces([(0, 1)])  # missing vertices
    except ValueError:
        pass
    else:
        raise AssertionError("expected downward-closure failure")
