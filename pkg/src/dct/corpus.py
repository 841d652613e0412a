"""Bundled example complexes.

Every complex here is small enough for exhaustive exact computation.
"""

from __future__ import annotations

from functools import cache

from .simplicial import SimplicialComplex


@cache
def point() -> SimplicialComplex:
    return SimplicialComplex([[0]], name="pt")


@cache
def circle3() -> SimplicialComplex:
    """The 3-vertex circle S¹₃."""
    return SimplicialComplex([[0, 1], [1, 2], [0, 2]], name="S1_3")


@cache
def sphere_tetra() -> SimplicialComplex:
    """∂Δ³, the boundary of the tetrahedron."""
    return SimplicialComplex([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], name="dDelta3")


@cache
def rp2_6() -> SimplicialComplex:
    """The 6-vertex real projective plane (half of the icosahedron)."""
    facets = [
        (1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
        (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6),
    ]
    return SimplicialComplex([[v - 1 for v in f] for f in facets], name="RP2_6")


@cache
def torus7() -> SimplicialComplex:
    """The 7-vertex (Möbius–Császár) torus."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(facets, name="T2_7")


@cache
def two_circles() -> SimplicialComplex:
    """Disjoint union of two 3-vertex circles."""
    return SimplicialComplex([[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]], name="S1_3+S1_3")


COMPLEXES = {
    "pt": point,
    "S1_3": circle3,
    "dDelta3": sphere_tetra,
    "RP2_6": rp2_6,
    "T2_7": torus7,
    "S1_3+S1_3": two_circles,
}

# the four complexes every randomized acceptance check runs on
STANDARD = ("S1_3", "dDelta3", "RP2_6", "T2_7")


def get_complex(name: str) -> SimplicialComplex:
    try:
        return COMPLEXES[name]()
    except KeyError:
        raise KeyError(f"unknown complex {name!r}; known: {', '.join(sorted(COMPLEXES))}") from None
