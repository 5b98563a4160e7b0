"""Named test complexes.

===========================  ==========================================  =========
name                         complex                                     parameter
===========================  ==========================================  =========
``boundary_simplex``         ∂Δⁿ on vertices 1..n+1                      n ≥ 1
``cross_polytope_boundary``  boundary of the n-dim cross-polytope         n ≥ 1
                             (vertices 2a-1, 2a are antipodal)
``barycentric_boundary``     barycentric subdivision of ∂Δⁿ              n ≥ 1
``octahedron``               cross_polytope_boundary(3)                   --
``torus7``                   Möbius' 7-vertex torus                      --
``rp2_6``                    6-vertex real projective plane              --
===========================  ==========================================  =========

All labels start at 1.
"""

from __future__ import annotations

from itertools import combinations, product

from .complex import SimplicialComplex, barycentric_subdivision, from_facets
from .errors import UnknownName


def boundary_simplex(n: int) -> SimplicialComplex:
    return from_facets(combinations(range(1, n + 2), n))


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    return from_facets(
        [2 * a + 1 + side for a, side in enumerate(sides)] for sides in product((0, 1), repeat=n)
    )


def torus7() -> SimplicialComplex:
    facets = []
    for i in range(7):
        facets.append([i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1])
        facets.append([i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1])
    return from_facets(facets)


def rp2_6() -> SimplicialComplex:
    return from_facets([
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
    ])


_PARAMETRIZED = {
    "boundary_simplex": boundary_simplex,
    "cross_polytope_boundary": cross_polytope_boundary,
    "barycentric_boundary": lambda n: barycentric_subdivision(boundary_simplex(n)),
}
_FIXED = {
    "octahedron": lambda: cross_polytope_boundary(3),
    "torus7": torus7,
    "rp2_6": rp2_6,
}

NAMES = tuple(_PARAMETRIZED) + tuple(_FIXED)


def builtin_complex(name: str, n: int | None = None) -> SimplicialComplex:
    if name in _FIXED:
        return _FIXED[name]()
    if name in _PARAMETRIZED:
        if n is None or n < 1:
            raise ValueError(f"{name} needs a dimension parameter n >= 1")
        return _PARAMETRIZED[name](n)
    raise UnknownName(f"unknown complex {name!r}; choose from {', '.join(NAMES)}")
