"""PL sphere recognition and closed-manifold verification.

Spheres of dimension at most 2 are certified exactly (two points, a single
cycle, a connected closed surface with Euler characteristic 2). From dimension
3 on there is no cheap exact test, so :func:`sphere_recognize` runs an
annealed flip search towards the boundary of a simplex and reports ``None``
(unknown) when its budget runs out.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass

from .complex import SimplicialComplex, is_boundary_simplex, is_connected, link
from .moves import BistellarMove, MoveLog, apply_move, enumerate_moves, replay


class Verdict(enum.Enum):
    VERIFIED = "verified"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ManifoldCheck:
    verdict: Verdict
    witness: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict is Verdict.VERIFIED


@dataclass
class SphereCertificate:
    """A move sequence taking ``start`` to the boundary of a simplex."""

    start: SimplicialComplex
    log: MoveLog
    end: SimplicialComplex
    attempts: int

    def check(self) -> bool:
        return replay(self.start, self.log.moves) == self.end and is_boundary_simplex(self.end)


def _energy(c: SimplicialComplex) -> tuple[int, int]:
    return len(c.vertices), len(c.facets)


def _reducing_move(c: SimplicialComplex, rng: random.Random) -> BistellarMove | None:
    d = c.dim
    for i in range(d, d // 2, -1):
        moves = enumerate_moves(c, i)
        if moves:
            return rng.choice(moves)
    return None


def _heating_move(c: SimplicialComplex, rng: random.Random, temperature: float) -> BistellarMove | None:
    # Boltzmann weights on the energy increase: one vertex costs d + 2 facets.
    d = c.dim
    weights = {}
    for i in range(d // 2 + 1):
        cost = (d - 2 * i) + (d + 2 if i == 0 else 0)
        weights[i] = math.exp(-cost / temperature)
    while weights:
        i = rng.choices(list(weights), weights=list(weights.values()))[0]
        moves = enumerate_moves(c, i)
        if moves:
            return rng.choice(moves)
        del weights[i]
    return None


def sphere_recognize(
    sphere: SimplicialComplex,
    budget: int = 10_000,
    seed: int = 0,
    temperature: float = 1.0,
    max_heat: int = 16,
) -> SphereCertificate | None:
    """Search for bistellar moves reducing ``sphere`` to a simplex boundary.

    Reducing moves (index above half the dimension) are taken greedily. When
    none exists the complex is heated with a burst of random neutral or
    increasing moves whose length grows while the best (f_0, f_d) stays put.
    ``budget`` counts applied moves.
    """
    rng = random.Random(seed)
    c = sphere
    log = MoveLog(seed, [], [c.f_vector])
    if c.dim < 1:
        return SphereCertificate(sphere, log, c, 0) if is_boundary_simplex(c) else None
    attempts = 0
    best = _energy(c)
    heat = 1

    def step(mv: BistellarMove) -> None:
        nonlocal c, attempts
        c = apply_move(c, mv)
        attempts += 1
        log.moves.append(mv)
        log.f_vectors.append(c.f_vector)

    while True:
        if is_boundary_simplex(c):
            return SphereCertificate(sphere, log, c, attempts)
        if attempts >= budget:
            return None
        mv = _reducing_move(c, rng)
        if mv is not None:
            step(mv)
            continue
        energy = _energy(c)
        if energy < best:
            best, heat = energy, 1
        else:
            heat = min(heat + 1, max_heat)
        for _ in range(heat):
            if attempts >= budget:
                break
            mv = _heating_move(c, rng, temperature)
            if mv is None:
                return None
            step(mv)


def _sphere_status(c: SimplicialComplex, budget: int, seed: int) -> ManifoldCheck:
    d = c.dim
    if d < 0:
        return ManifoldCheck(Verdict.VERIFIED)
    if d == 0:
        if len(c.vertices) == 2:
            return ManifoldCheck(Verdict.VERIFIED)
        return ManifoldCheck(Verdict.NO, reason=f"0-dimensional link with {len(c.vertices)} points")
    inner = verify_closed_manifold(c, budget, seed)
    if inner.verdict is Verdict.NO:
        return ManifoldCheck(Verdict.NO, reason=f"not a closed manifold ({inner.reason})")
    if not is_connected(c):
        return ManifoldCheck(Verdict.NO, reason="disconnected")
    if c.euler_characteristic != 1 + (-1) ** d:
        return ManifoldCheck(Verdict.NO, reason=f"Euler characteristic {c.euler_characteristic}")
    if d <= 2:
        return inner
    if inner.verdict is Verdict.UNKNOWN:
        return inner
    if sphere_recognize(c, budget, seed) is not None:
        return ManifoldCheck(Verdict.VERIFIED)
    return ManifoldCheck(Verdict.UNKNOWN, reason=f"flip search exhausted {budget} moves")


def is_sphere(c: SimplicialComplex, budget: int = 10_000, seed: int = 0) -> ManifoldCheck:
    return _sphere_status(c, budget, seed)


def verify_closed_manifold(c: SimplicialComplex, budget: int = 10_000, seed: int = 0) -> ManifoldCheck:
    """Check that every vertex link is a PL sphere of one dimension less.

    Returns NO with the offending vertex as witness, UNKNOWN when some link
    could not be certified within ``budget`` flips, VERIFIED otherwise.
    """
    unknown = None
    for v in c.vertices:
        status = _sphere_status(link(c, (v,)), budget, seed)
        if status.verdict is Verdict.NO:
            return ManifoldCheck(Verdict.NO, (v,), f"link of {v}: {status.reason}")
        if status.verdict is Verdict.UNKNOWN and unknown is None:
            unknown = ManifoldCheck(Verdict.UNKNOWN, (v,), f"link of {v}: {status.reason}")
    return unknown or ManifoldCheck(Verdict.VERIFIED)
