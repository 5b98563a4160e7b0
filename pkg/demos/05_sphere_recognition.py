"""Certifying spheres by flipping down to a simplex boundary.

Run: python3 demos/05_sphere_recognition.py
"""

from pachner import WalkConfig, builtin_complex, random_walk, sphere_recognize, verify_closed_manifold
from pachner.complex import barycentric_subdivision

for name, c in [
    ("subdivided tetrahedron boundary", builtin_complex("barycentric_boundary", 3)),
    ("subdivided 4-simplex boundary", barycentric_subdivision(builtin_complex("boundary_simplex", 4))),
    ("random 3-sphere", random_walk(builtin_complex("boundary_simplex", 4), WalkConfig(120, seed=5))[0]),
]:
    cert = sphere_recognize(c, budget=10_000, seed=0)
    print(f"{name} {c.f_vector}:", f"{len(cert.log)} moves to {cert.end.f_vector}, replays: {cert.check()}")

# The torus never reaches a simplex boundary; the search gives up.
print("torus7:", sphere_recognize(builtin_complex("torus7"), budget=2_000, seed=0))

# Manifold checks recurse through vertex links.
for name in ("torus7", "rp2_6"):
    print(name, verify_closed_manifold(builtin_complex(name)).verdict.value)
print("cross polytope 4-sphere:", verify_closed_manifold(builtin_complex("cross_polytope_boundary", 5)).verdict.value)
