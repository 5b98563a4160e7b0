"""Bistellar (Pachner) moves.

An n-dimensional bistellar i-move ``T(sigma, tau)`` needs an (n-i)-simplex
``sigma`` whose link is ``∂tau`` for an i-simplex ``tau`` that is not yet a
face. It replaces ``sigma * ∂tau`` by ``∂sigma * tau``. A 0-move subdivides a
facet with a fresh vertex ``tau``; an n-move deletes the vertex ``sigma``.
"""

from __future__ import annotations

import json
import math
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .complex import Simplex, SimplicialComplex, simplex
from .errors import IndexOutOfRange, InvalidMove, NoValidMoves


@dataclass(frozen=True, order=True)
class BistellarMove:
    sigma: Simplex
    tau: Simplex
    i: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "sigma", simplex(self.sigma))
        object.__setattr__(self, "tau", simplex(self.tau))
        if not 0 <= self.i <= self.n:
            raise IndexOutOfRange(f"move index {self.i} outside 0..{self.n}")
        if len(self.sigma) != self.n - self.i + 1 or len(self.tau) != self.i + 1:
            raise InvalidMove(f"|sigma|={len(self.sigma)}, |tau|={len(self.tau)} do not fit an "
                              f"{self.n}-dimensional {self.i}-move")
        if set(self.sigma) & set(self.tau):
            raise InvalidMove("sigma and tau share a vertex")

    @property
    def removed(self) -> list[Simplex]:
        """Facets of ``sigma * ∂tau``."""
        return sorted(simplex(self.sigma + tuple(t for t in self.tau if t != x)) for x in self.tau)

    @property
    def added(self) -> list[Simplex]:
        """Facets of ``∂sigma * tau``."""
        return sorted(simplex(tuple(s for s in self.sigma if s != x) + self.tau) for x in self.sigma)

    @property
    def new_vertex(self) -> int | None:
        return self.tau[0] if self.i == 0 else None

    def to_dict(self) -> dict:
        d = {"i": self.i, "n": self.n, "sigma": list(self.sigma), "tau": list(self.tau)}
        if self.i == 0:
            d["new_vertex"] = self.tau[0]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> BistellarMove:
        return cls(tuple(d["sigma"]), tuple(d["tau"]), d["i"], d["n"])

    def __str__(self) -> str:
        return f"T^{{{self.n},{self.i}}}(sigma={list(self.sigma)}, tau={list(self.tau)})"


def _faces_with_cofacets(m: SimplicialComplex, size: int) -> dict[Simplex, list[Simplex]]:
    cache = m.__dict__.setdefault("_cofacet_cache", {})
    if size not in cache:
        table: dict[Simplex, list[Simplex]] = {}
        for f in m.sorted_facets:
            for s in combinations(f, size):
                table.setdefault(s, []).append(f)
        cache[size] = table
    return cache[size]


def _check_index(m: SimplicialComplex, i: int) -> None:
    if m.dim < 0:
        raise IndexOutOfRange("the empty complex admits no moves")
    if not 0 <= i <= m.dim:
        raise IndexOutOfRange(f"move index {i} outside 0..{m.dim}")


def enumerate_moves(m: SimplicialComplex, i: int) -> list[BistellarMove]:
    """All valid i-moves of ``m`` in sigma-lexicographic order.

    For i = 0 every facet qualifies and tau is the complex's next fresh label.
    """
    _check_index(m, i)
    n = m.dim
    if i == 0:
        fresh = (m.next_label,)
        return [BistellarMove(f, fresh, 0, n) for f in m.sorted_facets]
    moves = []
    table = _faces_with_cofacets(m, n - i + 1)
    for sigma in sorted(table):
        around = table[sigma]
        if len(around) != i + 1:
            continue
        tau = {v for f in around for v in f} - set(sigma)
        if len(tau) != i + 1:
            continue
        tau = tuple(sorted(tau))
        if not m.has_face(tau):
            moves.append(BistellarMove(sigma, tau, i, n))
    return moves


def enumerate_all_moves(m: SimplicialComplex) -> list[BistellarMove]:
    """Every valid move, ascending index first."""
    return [mv for i in range(m.dim + 1) for mv in enumerate_moves(m, i)]


def check_move(m: SimplicialComplex, mv: BistellarMove, *, strict_labels: bool = True) -> None:
    """Raise :class:`InvalidMove` unless ``mv`` can be applied to ``m``.

    With ``strict_labels=False`` a 0-move only needs a label absent from ``m``,
    which is what a move induced on a link looks like (its new vertex already
    lives in the ambient complex).
    """
    if mv.n != m.dim:
        raise InvalidMove(f"{mv.n}-dimensional move on a {m.dim}-dimensional complex")
    if mv.i == 0:
        if mv.sigma not in m.facets:
            raise InvalidMove(f"{mv.sigma} is not a facet")
        v = mv.tau[0]
        if v in m.vertex_facets or (strict_labels and v < m.next_label):
            raise InvalidMove(f"label {v} is not fresh (next fresh label is {m.next_label})")
        return
    around = set(m.facets_containing(mv.sigma))
    if not around:
        raise InvalidMove(f"{mv.sigma} is not a face")
    if around != set(mv.removed):
        raise InvalidMove(f"link of {mv.sigma} is not the boundary of {mv.tau}")
    if m.has_face(mv.tau):
        raise InvalidMove(f"{mv.tau} is already a face")


def apply_move(m: SimplicialComplex, mv: BistellarMove, *, strict_labels: bool = True) -> SimplicialComplex:
    check_move(m, mv, strict_labels=strict_labels)
    facets = (m.facets - set(mv.removed)) | set(mv.added)
    return SimplicialComplex(facets, m.dim, max(m.next_label, mv.tau[-1] + 1))


def inverse_move(mv: BistellarMove) -> BistellarMove:
    return BistellarMove(mv.tau, mv.sigma, mv.n - mv.i, mv.n)


def induced_link_moves(m: SimplicialComplex, mv: BistellarMove) -> dict[int, BistellarMove]:
    """The (n-1)-dimensional moves induced on vertex links.

    A vertex v of sigma sees ``T(sigma - v, tau)`` of the same index; a vertex
    u of tau sees ``T(sigma, tau - u)`` of index i-1. The vertex created by a
    0-move and the vertex deleted by an n-move have no before/after link pair
    and are left out.
    """
    check_move(m, mv)
    out = {}
    if len(mv.sigma) > 1:
        for v in mv.sigma:
            out[v] = BistellarMove(tuple(s for s in mv.sigma if s != v), mv.tau, mv.i, mv.n - 1)
    if len(mv.tau) > 1:
        for u in mv.tau:
            out[u] = BistellarMove(mv.sigma, tuple(t for t in mv.tau if t != u), mv.i - 1, mv.n - 1)
    return out


@dataclass(frozen=True)
class WalkConfig:
    """Parameters of a seeded random walk.

    ``weights[i]`` is the relative preference for i-moves. With a
    ``temperature`` each index is further scaled by ``exp(-dF/T)`` where dF is
    the change in facet count, and T is multiplied by ``cooling`` every step.
    """

    steps: int
    seed: int
    weights: tuple[float, ...] | None = None
    temperature: float | None = None
    cooling: float = 1.0

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError("steps must be nonnegative")
        if self.weights is not None:
            if any(w < 0 for w in self.weights) or not any(w > 0 for w in self.weights):
                raise ValueError("weights must be nonnegative and not all zero")
        if self.temperature is not None and self.temperature <= 0:
            raise ValueError("temperature must be positive")


@dataclass
class MoveLog:
    seed: int | None
    moves: list[BistellarMove] = field(default_factory=list)
    f_vectors: list[tuple[int, ...]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.moves)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(mv.to_dict(), sort_keys=True) + "\n" for mv in self.moves)

    @classmethod
    def from_jsonl(cls, text: str, seed: int | None = None) -> MoveLog:
        moves = [BistellarMove.from_dict(json.loads(line)) for line in text.splitlines() if line.strip()]
        return cls(seed, moves)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "moves": [mv.to_dict() for mv in self.moves],
            "f_vectors": [list(f) for f in self.f_vectors],
        }


def replay(start: SimplicialComplex, moves: Iterable[BistellarMove]) -> SimplicialComplex:
    c = start
    for mv in moves:
        c = apply_move(c, mv)
    return c


def choose_move(m: SimplicialComplex, weights: Sequence[float], rng: random.Random) -> BistellarMove:
    live = [i for i, w in enumerate(weights) if w > 0]
    while live:
        i = rng.choices(live, weights=[weights[j] for j in live])[0]
        moves = enumerate_moves(m, i)
        if moves:
            return rng.choice(moves)
        live.remove(i)
    raise NoValidMoves("no index with positive weight admits a move")


def random_walk(m: SimplicialComplex, cfg: WalkConfig) -> tuple[SimplicialComplex, MoveLog]:
    n = m.dim
    base = cfg.weights or (1.0,) * (n + 1)
    if len(base) != n + 1:
        raise ValueError(f"need {n + 1} weights for a {n}-dimensional complex, got {len(base)}")
    rng = random.Random(cfg.seed)
    log = MoveLog(cfg.seed, [], [m.f_vector])
    temp = cfg.temperature
    for _ in range(cfg.steps):
        weights = base
        if temp is not None:
            weights = [w * math.exp(max(-700.0, min(700.0, -(n - 2 * i) / temp))) for i, w in enumerate(base)]
            temp *= cfg.cooling
        mv = choose_move(m, weights, rng)
        m = apply_move(m, mv)
        log.moves.append(mv)
        log.f_vectors.append(m.f_vector)
    return m, log
