"""Reduced rational homology of simplicial complexes.

Betti numbers come from ranks of the augmented boundary matrices:

    betti[i] = f_i - rank(d_i) - rank(d_{i+1})

where d_0 sends every vertex to the empty face.  Coefficients are rational
and ranks are computed exactly.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, reduced_euler_characteristic
from .exactrank import rank_exact, rank_mod_p


class HomologyResourceError(RuntimeError):
    pass


def boundary_matrix(K: SimplicialComplex, d: int):
    """Sparse rows (dicts col -> +-1) of d_d : C_d -> C_{d-1}.

    Rows are indexed by d-faces, columns by (d-1)-faces; sign of the i-th
    vertex removal is (-1)^i under the sorted-vertex orientation.
    """
    faces_d = K.faces.get(d, ())
    faces_lo = K.faces.get(d - 1, ())
    index = {f: i for i, f in enumerate(faces_lo)}
    rows = []
    for f in faces_d:
        row = {}
        for i in range(len(f)):
            sub = f[:i] + f[i + 1 :]
            row[index[sub]] = 1 if i % 2 == 0 else -1
        rows.append(row)
    return rows, len(faces_lo)


def boundary_ranks(K: SimplicialComplex, max_cells=None):
    """rank(d_d) for every d from 0 to dim+1 (the latter is zero)."""
    if max_cells is not None and K.num_faces() > max_cells:
        raise HomologyResourceError(
            f"complex has {K.num_faces()} faces, above the limit {max_cells}"
        )
    ranks = {}
    for d in range(0, K.dim + 1):
        rows, ncols = boundary_matrix(K, d)
        ranks[d] = rank_exact(rows, ncols) if rows else 0
    ranks[K.dim + 1] = 0
    return ranks


def betti_numbers(K: SimplicialComplex, max_cells=None) -> dict:
    """Reduced rational Betti numbers, zero entries omitted."""
    ranks = boundary_ranks(K, max_cells)
    out = {}
    for d in range(-1, K.dim + 1):
        b = len(K.faces.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def betti_numbers_mod_p(K: SimplicialComplex, p: int) -> dict:
    """Betti numbers over GF(p); used only to cross-check the exact path."""
    ranks = {}
    for d in range(0, K.dim + 1):
        rows, _ = boundary_matrix(K, d)
        ranks[d] = rank_mod_p(rows, p) if rows else 0
    ranks[K.dim + 1] = 0
    out = {}
    for d in range(-1, K.dim + 1):
        b = len(K.faces.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def total_betti(K: SimplicialComplex, max_cells=None) -> int:
    return sum(betti_numbers(K, max_cells).values())


def join_betti(b1: dict, b2: dict) -> dict:
    """Betti numbers of a join from those of the factors.

    H_k(X * Y) = sum over i + j = k - 1 of H_i(X) (x) H_j(Y), so this is a
    degree-shifted convolution; totals multiply.
    """
    out = {}
    for i, x in b1.items():
        for j, y in b2.items():
            k = i + j + 1
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


def euler_from_betti(b: dict) -> int:
    return sum((-1) ** d * v for d, v in b.items())


def check_euler_poincare(K: SimplicialComplex, b: dict) -> bool:
    return euler_from_betti(b) == reduced_euler_characteristic(K)
