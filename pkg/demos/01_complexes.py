"""Building complexes and reading off their combinatorics.

Run: python3 demos/01_complexes.py
"""

from pachner import builtin_complex, from_facets, is_isomorphic, join, link, star
from pachner.complex import relabel
from pachner.formats import format_facet_list

# A complex is its set of facets. Every face is implied.
tetra = from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
print("boundary of a tetrahedron:", tetra.f_vector, "chi =", tetra.euler_characteristic)

# The 7-vertex torus: every pair of vertices spans an edge.
torus = builtin_complex("torus7")
print("torus7:", torus.f_vector, "chi =", torus.euler_characteristic)
print("link of vertex 1 is a hexagon:", sorted(link(torus, [1]).facets))
print("star of vertex 1 has", len(star(torus, [1]).facets), "triangles")

# Cone over a hexagon = star of a vertex in the torus, up to relabelling.
hexagon = from_facets([(i, i % 6 + 1) for i in range(1, 7)])
disk = join(from_facets([[0]]), hexagon)
print("cone over a hexagon:", disk.f_vector)
print("isomorphic to the star of 1?", is_isomorphic(disk, star(torus, [1])) is not None)

# Isomorphism search returns an explicit vertex map.
shuffled = relabel(torus, {v: 10 * v for v in torus.vertices})
print("torus vs relabelled torus:", is_isomorphic(torus, shuffled))

# Facet lists are written sorted, so writing is deterministic.
print(format_facet_list(builtin_complex("rp2_6"), "six-vertex projective plane"))
