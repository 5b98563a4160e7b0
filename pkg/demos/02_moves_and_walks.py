"""Bistellar moves, their f-vector effect, and seeded random walks.

Run: python3 demos/02_moves_and_walks.py
"""

from collections import Counter

from pachner import (
    MoveLog,
    WalkConfig,
    apply_move,
    builtin_complex,
    enumerate_moves,
    inverse_move,
    r_column,
    random_walk,
    replay,
)

sphere = builtin_complex("boundary_simplex", 4)  # a 3-sphere with 5 vertices
print("start:", sphere.f_vector)

# A 0-move stars a facet; the complex hands out the new label itself.
mv = enumerate_moves(sphere, 0)[0]
after = apply_move(sphere, mv)
print(mv, "->", after.f_vector)

# Each index changes the f-vector by a fixed column, whatever the complex.
for i in range(after.dim + 1):
    moves = enumerate_moves(after, i)
    print(f"{len(moves)} valid {i}-moves, each shifting f by {r_column(4, i)}")

# Inverse moves undo.
back = apply_move(after, inverse_move(mv))
print("undo the 0-move:", back.f_vector)

# A walk is reproducible from its seed, and its log replays exactly.
end, log = random_walk(builtin_complex("torus7"), WalkConfig(steps=200, seed=42))
print("torus after 200 moves:", end.f_vector, "chi =", end.euler_characteristic)
print("moves by index:", dict(sorted(Counter(m.i for m in log.moves).items())))
text = log.to_jsonl()
print("replayed from JSON lines:", replay(builtin_complex("torus7"), MoveLog.from_jsonl(text).moves) == end)

# Temperature biases the walk toward moves that shrink the complex.
cold, _ = random_walk(end, WalkConfig(200, seed=1, temperature=0.3))
print("after a cold walk:", cold.f_vector)
