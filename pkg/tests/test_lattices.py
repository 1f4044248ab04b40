import random

import pytest

from indcomplex.canon import canonical_code
from indcomplex.graph import Graph, bits, is_connected, parse_edge_list, write_edge_list
from indcomplex.lattices import (
    DegenerateLatticeError,
    NotTileableError,
    delta_tiling,
    gen_cycle,
    gen_delta,
    gen_kagome,
    gen_triangular,
    hexagon_tiling,
)

from util import relabel


def test_gen_cycle():
    C3 = gen_cycle(3)
    assert C3.n == 3 and C3.num_edges() == 3
    C4 = gen_cycle(4)
    assert C4.n == 4 and C4.num_edges() == 4
    with pytest.raises(Exception):
        gen_cycle(2)


def test_kagome_counts_and_regularity():
    H = gen_kagome(6, 4)
    assert H.n == 72
    assert H.num_edges() == 144
    assert all(H.degree(v) == 4 for v in range(H.n))
    assert is_connected(H)

    H22 = gen_kagome(2, 2)
    assert H22.n == 12
    assert all(H22.degree(v) == 4 for v in range(H22.n))

    H33 = gen_kagome(3, 3)  # odd m uses the sheared period
    assert H33.n == 27
    assert all(H33.degree(v) == 4 for v in range(H33.n))


def test_kagome_too_small():
    with pytest.raises(DegenerateLatticeError):
        gen_kagome(1, 4)


def test_kagome_translation_automorphism():
    # translating by one fundamental cell permutes vertices; the canonical
    # code cannot change
    H = gen_kagome(2, 2)
    pts = [(int(x - y), int(2 * y)) for x, y in H.coords]
    index = {v: i for i, v in enumerate(pts)}

    def shift(dp, dq):
        perm = [0] * H.n
        for i, (p, q) in enumerate(pts):
            t = (q + dq) // 4
            perm[i] = index[((p + dp + 2 * t) % 4, (q + dq) % 4)]
        return perm

    base = canonical_code(H)
    assert canonical_code(relabel(H, shift(2, 0))) == base
    assert canonical_code(relabel(H, shift(0, 2))) == base


def test_triangular_quotient():
    T = gen_triangular(4, 4)
    assert T.n == 16
    assert all(T.degree(v) == 6 for v in range(T.n))


def test_delta3_counts():
    D = gen_delta(3, 2, 2)
    assert D.n == 32  # 8 per 3x3 cell
    assert D.n % 8 == 0
    assert is_connected(D)
    degs = sorted(D.degree(v) for v in range(D.n))
    assert set(degs) == {4, 6}


def test_delta4_counts():
    D = gen_delta(4, 3, 2)
    assert D.n == 90  # 15 per 4x4 cell
    assert D.n % 45 == 0
    assert is_connected(D)


def test_hexagon_tiling_h64():
    H = gen_kagome(6, 4)
    T = hexagon_tiling(H)
    assert T.k == 2
    assert all(len(t) == 30 for t in T.tiles)
    assert T.separator.bit_count() == 12
    assert len(T.side_table) == 12
    assert all(len(row) == 12 for row in T.sides)
    assert len(T.side_groups) == 6
    assert all(len(g) == 2 for g in T.side_groups)


def test_hexagon_tiling_h124():
    H = gen_kagome(12, 4)
    T = hexagon_tiling(H)
    assert T.k == 4
    assert T.separator.bit_count() == 24


def test_hexagon_tiling_distinct_boundary_h128():
    # for m = 8 no wrap identifications occur: 12 distinct separator
    # vertices around each tile
    T = hexagon_tiling(gen_kagome(12, 8))
    assert T.k == 8
    for row in T.sides:
        assert len({u for u, _ in row}) == 12


def test_hexagon_tiling_rejects_bad_dims():
    with pytest.raises(NotTileableError):
        hexagon_tiling(gen_kagome(5, 4))
    with pytest.raises(NotTileableError):
        hexagon_tiling(gen_kagome(6, 6))


def test_tiling_roundtrip_through_file():
    H = gen_kagome(6, 4)
    H2 = parse_edge_list(write_edge_list(H))
    T = hexagon_tiling(H2)
    assert T.k == 2


def test_delta3_tiling():
    D = gen_delta(3, 2, 2)
    T = delta_tiling(D, 3)
    assert T.k == 4  # v/8
    assert all(len(t) == 6 for t in T.tiles)
    assert T.separator.bit_count() == 8
    assert len(T.side_table) == 6
    assert len(T.side_groups) == 2
    assert all(len(g) == 3 for g in T.side_groups)
    # the 6-vertex tile is a hexagon
    assert all(T.local_graph.degree(v) == 2 for v in range(6))


def test_delta4_tiling():
    D = gen_delta(4, 3, 2)
    T = delta_tiling(D, 4)
    assert T.k == 2  # v/45
    assert all(len(t) == 36 for t in T.tiles)
    assert T.separator.bit_count() == 18
    assert len(T.side_table) == 18
    assert len(T.side_groups) == 9


def test_delta4_tiling_needs_3_divides_n():
    with pytest.raises(NotTileableError):
        delta_tiling(gen_delta(4, 2, 2), 4)


def test_kagome_tile_is_connected_30_vertex_graph():
    T = hexagon_tiling(gen_kagome(6, 4))
    local = T.local_graph
    assert local.n == 30
    assert local.num_edges() == 48
    assert is_connected(local)
    degs = sorted(local.degree(v) for v in range(30))
    assert degs.count(2) == 6 and degs.count(3) == 12 and degs.count(4) == 12
