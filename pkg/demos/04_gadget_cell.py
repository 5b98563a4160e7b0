"""A gadget cell: a triangulated triangle whose designated moves only touch its base.

Implanting it into a facet changes one vertex link by a fixed vector while
keeping the manifold.

Run: python3 demos/04_gadget_cell.py
"""

from pachner import a_vector, apply_move, builtin_complex, gadget_2, link, verify_closed_manifold, verify_gadget
from pachner.gadget import implant_gadget_placed

k = gadget_2()
print("cell f-vector:", k.cell.f_vector, "base:", k.base, "boundary:", k.boundary_vertices)
report = verify_gadget(k)
print("verified:", report.passed, report.reasons)
print("a-vector:", a_vector(k))

host = builtin_complex("boundary_simplex", 3)
out, placed = implant_gadget_placed(host, (1, 2, 3), 1, k)
print("link of 1 before/after:", link(host, [1]).f_vector, link(out, [1]).f_vector)
print("still a 2-sphere:", verify_closed_manifold(out).verdict.value)

for mv in placed.designated_moves:
    moved = apply_move(out, mv)
    print(f"designated {mv.i}-move: link of 1 becomes {link(moved, [1]).f_vector}")
