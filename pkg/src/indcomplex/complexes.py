"""Simplicial complexes built from independent sets.

Faces are stored per dimension as sorted vertex tuples in lexicographic
order; the empty face lives at dimension -1.  Everything downstream works
with the augmented chain complex, so reduced homology is the only mode.
"""

from __future__ import annotations

from .graph import (
    DEFAULT_FACE_CAP,
    EnumerationOverflow,
    Graph,
    bits,
    enumerate_independent_sets,
)


class SimplicialComplex:
    """Faces by dimension; dimension -1 is the empty face, always present."""

    __slots__ = ("faces", "vertex_order")

    def __init__(self, faces_by_dim, vertex_order=None):
        self.faces = dict(faces_by_dim)
        if -1 not in self.faces:
            self.faces[-1] = [()]
        self.vertex_order = vertex_order

    @classmethod
    def from_faces(cls, faces):
        """Build a complex from an explicit face list (checked downward
        closed; empty face added if missing)."""
        face_set = {tuple(sorted(f)) for f in faces}
        face_set.add(())
        for f in face_set:
            if len(set(f)) != len(f):
                raise ValueError(f"face {f} repeats a vertex")
            for i in range(len(f)):
                sub = f[:i] + f[i + 1 :]
                if sub not in face_set:
                    raise ValueError(f"not downward closed: {f} without {sub}")
        by_dim = {}
        for f in face_set:
            by_dim.setdefault(len(f) - 1, []).append(f)
        for d in by_dim:
            by_dim[d].sort()
        return cls(by_dim)

    @property
    def dim(self) -> int:
        return max(self.faces)

    def f_vector(self):
        """Face counts from dimension -1 upward: [1, f_0, f_1, ...]."""
        return [len(self.faces.get(d, ())) for d in range(-1, self.dim + 1)]

    def num_faces(self) -> int:
        return sum(len(v) for v in self.faces.values())

    def has_face(self, face) -> bool:
        face = tuple(sorted(face))
        return face in set(self.faces.get(len(face) - 1, ()))


def independence_complex(G: Graph, cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """The complex whose faces are the independent sets of G."""
    by_dim = {-1: [()]}
    for mask in enumerate_independent_sets(G, cap):
        if mask == 0:
            continue
        face = tuple(bits(mask))
        by_dim.setdefault(len(face) - 1, []).append(face)
    for d in by_dim:
        by_dim[d].sort()
    return SimplicialComplex(by_dim, vertex_order=tuple(range(G.n)))


def f_polynomial(K: SimplicialComplex):
    """Coefficient list of the face-counting polynomial: coefficient of
    t^(i+1) is the number of i-faces, constant term 1 for the empty face."""
    return K.f_vector()


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** d * len(fs) for d, fs in K.faces.items())


def witten_index(G: Graph, cap: int = DEFAULT_FACE_CAP) -> int:
    """Minus the reduced Euler characteristic of I(G), from face counts."""
    total = 0
    try:
        for mask in enumerate_independent_sets(G, cap):
            total += (-1) ** (mask.bit_count() - 1)
    except EnumerationOverflow:
        raise
    return -total
