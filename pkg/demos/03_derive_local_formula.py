"""Deriving the vertex-local formula that bistellar moves cannot change.

A local formula assigns psi(f(lk v)) to each vertex; the sum over vertices is a
global number. Requiring every move to leave that sum alone pins psi down:
it is a multiple of the local Euler characteristic in even dimension and
zero in odd dimension.

Run: python3 demos/03_derive_local_formula.py
"""

from pachner import (
    WalkConfig,
    builtin_complex,
    derive_psi,
    ds_complete,
    ds_relations,
    euler_psi,
    evaluate_invariant,
    find_witness,
    h_values,
    proportionality,
    random_walk,
)
from pachner.fvector import move_count_forms
from pachner.harness import formula_from_spec

n = 4  # vertex links are 3-spheres with f-vectors of length 4

print("sphere f-vectors are fixed by their first half:", ds_complete(n, (5, 10)))
print("relations:", [str(r) for r in ds_relations(n)])

spectrum = h_values(n)
print("jumps H_-1..H_4:", [str(spectrum[i]) for i in range(-1, n + 1)])
for i, form in enumerate(move_count_forms(n)):
    print(f"m{i} - m{n - 1 - i} =", form)

psi = derive_psi(n)
print("derived psi:", psi)
print("Euler psi (reduced):", euler_psi(n, reduced=True))
print("ratio:", proportionality(n).lam)

for k in range(2, 9):
    p = proportionality(k)
    print(f"n={k}:", "both zero" if p.both_zero else f"lambda = {p.lam}")

# The invariant survives long walks ...
m = builtin_complex("boundary_simplex", 5)
end, _ = random_walk(m, WalkConfig(150, seed=9))
print("4-sphere, start and end:", evaluate_invariant(m, psi), evaluate_invariant(end, psi))

# ... while a formula that is not a multiple of Euler breaks at once.
mv, delta = find_witness(m, formula_from_spec(n, "f0"))
print("f0 changes by", delta, "under", mv)
