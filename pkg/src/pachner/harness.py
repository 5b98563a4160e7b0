"""Evaluating local formulas on manifolds and testing their move invariance."""

from __future__ import annotations

import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .complex import SimplicialComplex, link
from .errors import DimensionMismatch
from .fvector import LocalFormula, beta, derive_psi, euler_psi, f_delta
from .moves import (
    BistellarMove,
    WalkConfig,
    apply_move,
    check_move,
    choose_move,
    enumerate_moves,
)

FormulaLike = Callable[[Sequence[int]], object]


def _link_f(m: SimplicialComplex, v: int) -> tuple[int, ...]:
    return link(m, (v,)).f_vector


def _check_dim(m: SimplicialComplex, psi: FormulaLike) -> None:
    n = getattr(psi, "n", None)
    if n is not None and n != m.dim:
        raise DimensionMismatch(f"formula for n={n} on a {m.dim}-dimensional complex")


def evaluate_invariant(m: SimplicialComplex, psi: FormulaLike) -> Fraction:
    """Sum of ``psi(f(lk v))`` over the vertices of ``m``."""
    _check_dim(m, psi)
    return sum((Fraction(psi(_link_f(m, v))) for v in m.vertices), Fraction(0))


def balance_check(m: SimplicialComplex, mv: BistellarMove, psi: FormulaLike) -> Fraction:
    """Left-hand side of the balance equation of ``mv`` under ``psi``.

    Old links are read off ``m``; their post-move f-vectors come from the
    f-vector calculus (an i-move on the links of sigma's vertices, an (i-1)-move
    on those of tau's), plus ``psi(f_delta)`` for a created vertex or minus it
    for a deleted one. For a valid move this equals the change of the
    evaluated invariant. Works for any callable ``psi``, not only affine ones.
    """
    check_move(m, mv)
    _check_dim(m, psi)
    n = mv.n
    total = Fraction(0)
    if mv.i == n:
        total -= Fraction(psi(f_delta(n)))
    else:
        for v in mv.sigma:
            f = _link_f(m, v)
            total += Fraction(psi(beta(n, f, mv.i))) - Fraction(psi(f))
    if mv.i == 0:
        total += Fraction(psi(f_delta(n)))
    else:
        for u in mv.tau:
            f = _link_f(m, u)
            total += Fraction(psi(beta(n, f, mv.i - 1))) - Fraction(psi(f))
    return total


def invariant_delta(m: SimplicialComplex, mv: BistellarMove, psi: FormulaLike) -> Fraction:
    """Change of the invariant across ``mv``, touching only vertices in sigma and tau."""
    after = apply_move(m, mv)
    total = Fraction(0)
    for v in set(mv.sigma) | set(mv.tau):
        if v in after.vertex_facets:
            total += Fraction(psi(_link_f(after, v)))
        if v in m.vertex_facets:
            total -= Fraction(psi(_link_f(m, v)))
    return total


@dataclass(frozen=True)
class Witness:
    move: BistellarMove
    step: int
    before: Fraction
    after: Fraction


@dataclass
class InvarianceReport:
    start_value: Fraction
    witness: Witness | None
    seed: int | None
    steps: int
    values: list[Fraction] = field(default_factory=list, repr=False)

    @property
    def invariant(self) -> bool:
        return self.witness is None

    def to_dict(self) -> dict:
        d = {
            "schema": 1,
            "verdict": "invariant" if self.invariant else "witness",
            "start_value": str(self.start_value),
            "seed": self.seed,
            "steps": self.steps,
        }
        if self.witness is not None:
            w = self.witness
            d["witness"] = {
                "step": w.step,
                "move": w.move.to_dict(),
                "before": str(w.before),
                "after": str(w.after),
            }
        return d


def invariance_report(m: SimplicialComplex, psi: FormulaLike, cfg: WalkConfig) -> InvarianceReport:
    """Walk ``cfg.steps`` random moves and stop at the first change of the invariant."""
    rng = random.Random(cfg.seed)
    weights = cfg.weights or (1.0,) * (m.dim + 1)
    value = evaluate_invariant(m, psi)
    report = InvarianceReport(value, None, cfg.seed, cfg.steps, [value])
    for step in range(cfg.steps):
        mv = choose_move(m, weights, rng)
        m = apply_move(m, mv)
        new = evaluate_invariant(m, psi)
        report.values.append(new)
        if new != value:
            report.witness = Witness(mv, step, value, new)
            report.steps = step + 1
            break
    return report


def find_witness(
    m: SimplicialComplex, psi: FormulaLike, limit: int = 200
) -> tuple[BistellarMove, Fraction] | None:
    """First of the first ``limit`` enumerated moves with nonzero balance.

    0-moves are tried first (every vertex admits one), then ascending index.
    """
    seen = 0
    for i in range(m.dim + 1):
        for mv in enumerate_moves(m, i):
            if seen >= limit:
                return None
            seen += 1
            delta = balance_check(m, mv, psi)
            if delta:
                return mv, delta
    return None


def formula_from_spec(n: int, text: str) -> LocalFormula:
    """Parse ``euler``, ``euler-reduced``, ``derived``, ``f<k>`` or a comma list of
    coefficients ``b_{-1},b_0,...`` (rationals as ``p/q``)."""
    key = text.strip().lower()
    if key == "euler":
        return euler_psi(n)
    if key == "euler-reduced":
        return euler_psi(n, reduced=True)
    if key == "derived":
        return derive_psi(n)
    if key.startswith("f") and key[1:].isdigit():
        k = int(key[1:])
        if k >= n:
            raise ValueError(f"f{k} is not an entry of an f-vector of length {n}")
        coeffs = [0] * (n + 1)
        coeffs[k + 1] = 1
        return LocalFormula(n, coeffs)
    try:
        return LocalFormula(n, [Fraction(tok) for tok in key.split(",")])
    except ValueError as exc:
        raise ValueError(f"cannot read formula {text!r}: {exc}") from None
