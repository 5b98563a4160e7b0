"""Exact f-vector calculus of bistellar moves and local formulas.

Everything here is exact rational arithmetic with :class:`fractions.Fraction`.
Throughout, ``n`` is the dimension of the ambient manifold, so vertex links
are (n-1)-spheres with f-vectors ``(f_0, ..., f_{n-1})`` and the implicit
``f_{-1} = 1``. ``s = n // 2`` is the number of free f-entries of a sphere.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import (
    IndexOutOfRange,
    InconsistentPrefix,
    NotASphereFVector,
    NotProportional,
)

def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _check_ki(n: int, *idx: int) -> None:
    for j in idx:
        if not 0 <= j <= n - 1:
            raise IndexOutOfRange(f"index {j} outside 0..{n - 1}")


def r_coeff(n: int, k: int, i: int) -> int:
    """Change of f_k under an (n-1)-dimensional i-move."""
    _check_ki(n, k, i)
    return binom(n - i, k - i) - binom(i + 1, n - k)


def r_column(n: int, i: int) -> tuple[int, ...]:
    _check_ki(n, i)
    return tuple(r_coeff(n, k, i) for k in range(n))


def beta(n: int, f: Sequence[int], i: int) -> tuple[int, ...]:
    """f-vector after an i-move on an (n-1)-sphere with f-vector ``f``."""
    if len(f) != n:
        raise ValueError(f"expected an f-vector of length {n}, got {len(f)}")
    return tuple(a + b for a, b in zip(f, r_column(n, i)))


def f_delta(n: int) -> tuple[int, ...]:
    """f-vector of the boundary of an n-simplex."""
    return tuple(binom(n + 1, k + 1) for k in range(n))


# --- Dehn-Sommerville ---------------------------------------------------------

@lru_cache(maxsize=None)
def _completion(n: int) -> tuple[tuple[int, ...], ...]:
    # Row k expresses f_k of an (n-1)-sphere through (f_{-1}, f_0, ..., f_{s-1}),
    # via h_j = sum_i (-1)^(j-i) C(n-i, j-i) f_{i-1} and h_j = h_{n-j}.
    s = n // 2
    h = []
    for j in range(s + 1):
        h.append([(-1) ** (j - i) * binom(n - i, j - i) for i in range(j + 1)] + [0] * (s - j))
    for j in range(s + 1, n + 1):
        h.append(h[n - j])
    rows = []
    for j in range(1, n + 1):
        row = [0] * (s + 1)
        for i in range(j + 1):
            c = binom(n - i, j - i)
            for t in range(s + 1):
                row[t] += c * h[i][t]
        rows.append(tuple(row))
    return tuple(rows)


def ds_complete(n: int, prefix: Sequence[int]) -> tuple[int, ...]:
    """Complete ``(f_0, ..., f_{s-1})`` to the f-vector of an (n-1)-sphere."""
    s = n // 2
    if len(prefix) != s:
        raise ValueError(f"need {s} leading entries for n={n}, got {len(prefix)}")
    x = (1, *prefix)
    out = tuple(sum(a * b for a, b in zip(row, x)) for row in _completion(n))
    if tuple(out[:s]) != tuple(prefix) or any(v < 0 for v in out):
        raise InconsistentPrefix(f"{tuple(prefix)} has no sphere completion (got {out})")
    return out


def ds_relations(n: int) -> list[LocalFormula]:
    """Affine forms vanishing on every (n-1)-sphere f-vector, one per f_k, k >= s."""
    s = n // 2
    rels = []
    for k, row in enumerate(_completion(n)):
        if k < s:
            continue
        coeffs = [Fraction(-c) for c in row] + [Fraction(0)] * (n - s)
        coeffs[k + 1] += 1
        rels.append(LocalFormula(n, coeffs))
    return rels


def satisfies_ds(n: int, f: Sequence[int]) -> bool:
    return len(f) == n and all(rel(f) == 0 for rel in ds_relations(n))


# --- local formulas -----------------------------------------------------------

@dataclass(frozen=True)
class LocalFormula:
    """Affine form ``psi(f) = b_{-1} + sum_k b_k f_k`` on (n-1)-sphere f-vectors.

    ``coeffs[0]`` is the constant b_{-1}; ``coeffs[k + 1]`` multiplies f_k.
    """

    n: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, n: int, coeffs: Sequence):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > n + 1:
            raise ValueError(f"at most {n + 1} coefficients for n={n}")
        coeffs += [Fraction(0)] * (n + 1 - len(coeffs))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def zero(cls, n: int) -> LocalFormula:
        return cls(n, [])

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0]

    def b(self, k: int) -> Fraction:
        """Coefficient b_k, with k = -1 for the constant."""
        return self.coeffs[k + 1]

    def __call__(self, f: Sequence[int]) -> Fraction:
        if len(f) != self.n:
            raise ValueError(f"formula for n={self.n} applied to f-vector of length {len(f)}")
        return self.coeffs[0] + sum((c * x for c, x in zip(self.coeffs[1:], f)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same_n(self, other: LocalFormula) -> None:
        if other.n != self.n:
            raise ValueError(f"formulas for n={self.n} and n={other.n}")

    def __add__(self, other: LocalFormula) -> LocalFormula:
        self._same_n(other)
        return LocalFormula(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: LocalFormula) -> LocalFormula:
        return self + (-1) * other

    def __mul__(self, k) -> LocalFormula:
        return LocalFormula(self.n, [Fraction(k) * c for c in self.coeffs])

    __rmul__ = __mul__

    def reduce(self) -> LocalFormula:
        """Rewrite modulo the Dehn-Sommerville relations into f_{-1}..f_{s-1}."""
        s = self.n // 2
        out = list(self.coeffs[: s + 1]) + [Fraction(0)] * (self.n - s)
        for k, row in enumerate(_completion(self.n)):
            if k >= s and self.coeffs[k + 1]:
                for t, c in enumerate(row):
                    out[t] += self.coeffs[k + 1] * c
        return LocalFormula(self.n, out)

    def equivalent(self, other: LocalFormula) -> bool:
        """Equal as functions on sphere f-vectors."""
        return (self - other).reduce().is_zero()

    def gradient_dot(self, column: Sequence[int]) -> Fraction:
        return sum((c * r for c, r in zip(self.coeffs[1:], column)), Fraction(0))

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            var = "" if j == 0 else f"f{j - 1}"
            body = str(mag) if not var else (var if mag == 1 else f"{mag}*{var}")
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def euler_psi(n: int, reduced: bool = False) -> LocalFormula:
    """Vertex-local Euler characteristic: 1 + sum_k (-1)^(k+1) f_k / (k+2)."""
    psi = LocalFormula(n, [Fraction(1)] + [Fraction((-1) ** (k + 1), k + 2) for k in range(n)])
    return psi.reduce() if reduced else psi


# --- exact linear algebra -------------------------------------------------------

def _nullspace(rows: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0} by exact Gauss-Jordan elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    for col in range(width):
        p = next((j for j in range(r, len(m)) if m[j][col] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][col]
        m[r] = [x / piv for x in m[r]]
        for j in range(len(m)):
            if j != r and m[j][col] != 0:
                factor = m[j][col]
                m[j] = [a - factor * b for a, b in zip(m[j], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * width
        x[fc] = Fraction(1)
        for row, pc in zip(m, pivots):
            x[pc] = -row[fc]
        basis.append(x)
    return basis


def _forward_substitute(lower: list[list[int]], rhs: Sequence) -> list:
    """Solve a unit lower triangular system exactly."""
    x: list = []
    for k, row in enumerate(lower):
        if row[k] != 1 or any(row[j] for j in range(k + 1, len(row))):
            raise ArithmeticError("matrix is not unit lower triangular")
        x.append(rhs[k] - sum(row[j] * x[j] for j in range(k)))
    return x


# --- the H spectrum -----------------------------------------------------------

@dataclass(frozen=True)
class HSpectrum:
    """Jumps ``H_{-1}, ..., H_n`` of a local formula, scaled so psi(f_delta) = 1."""

    n: int
    values: tuple[Fraction, ...]
    degenerate: bool

    def __getitem__(self, i: int) -> Fraction:
        if not -1 <= i <= self.n:
            raise IndexOutOfRange(f"H index {i} outside -1..{self.n}")
        return self.values[i + 1]


def h_constraints(n: int) -> list[list[Fraction]]:
    """Linear constraints on ``(H_{-1}, ..., H_n)``.

    The jump relation (n-i+1) H_i + (i+1) H_{i-1} = 0, the end condition
    H_n = -H_{-1}, antisymmetry H_i = -H_{n-1-i} and vanishing of the middle
    jump for odd n.
    """
    width = n + 2

    def row(*entries: tuple[int, int]) -> list[Fraction]:
        # entries are (H index, coefficient)
        r = [Fraction(0)] * width
        for idx, val in entries:
            r[idx + 1] += val
        return r

    rows = [row((i, n - i + 1), (i - 1, i + 1)) for i in range(n + 1)]
    rows.append(row((n, 1), (-1, 1)))
    rows += [row((i, 1), (n - 1 - i, 1)) for i in range(n)]
    if n % 2 == 1:
        rows.append(row(((n - 1) // 2, 1)))
    return rows


def h_values(n: int) -> HSpectrum:
    if n < 2:
        raise ValueError("n must be at least 2")
    basis = _nullspace(h_constraints(n), n + 2)
    usable = [v for v in basis if v[0] != 0]
    if not usable:
        return HSpectrum(n, tuple(Fraction(0) for _ in range(n + 2)), True)
    if len(basis) != 1:
        raise ArithmeticError(f"jump constraints for n={n} leave {len(basis)} free parameters")
    v = usable[0]
    return HSpectrum(n, tuple(x / v[0] for x in v), False)


# --- move counts ----------------------------------------------------------------

def r_submatrix(n: int) -> list[list[int]]:
    """``(r_{k,i})`` for ``0 <= k, i < n // 2``; unit lower triangular."""
    s = n // 2
    return [[r_coeff(n, k, i) for i in range(s)] for k in range(s)]


def c_matrix(n: int) -> list[list[int]]:
    """Integer inverse ``c[i][k]`` of :func:`r_submatrix`."""
    r = r_submatrix(n)
    s = len(r)
    cols = [_forward_substitute(r, [int(j == k) for j in range(s)]) for k in range(s)]
    return [[cols[k][i] for k in range(s)] for i in range(s)]


def move_counts(n: int, f: Sequence[int]) -> tuple[int, ...]:
    """``m_i - m_{n-1-i}`` for ``0 <= i < n // 2``, from a sphere f-vector."""
    if not satisfies_ds(n, f):
        raise NotASphereFVector(f"{tuple(f)} violates the Dehn-Sommerville relations for n={n}")
    s = n // 2
    fd = f_delta(n)
    return tuple(_forward_substitute(r_submatrix(n), [f[k] - fd[k] for k in range(s)]))


def move_count_forms(n: int) -> list[LocalFormula]:
    """``m_i - m_{n-1-i}`` as affine forms in the f-vector."""
    s = n // 2
    c = c_matrix(n)
    fd = f_delta(n)
    forms = []
    for i in range(s):
        coeffs = [Fraction(-sum(c[i][k] * fd[k] for k in range(s)))] + [Fraction(c[i][k]) for k in range(s)]
        forms.append(LocalFormula(n, coeffs))
    return forms


# --- derivation -----------------------------------------------------------------

def derive_psi(n: int) -> LocalFormula:
    """The f-vector local formula forced by bistellar invariance, psi(f_delta) = 1.

    psi(f) = 1 + sum_i H_i (m_i - m_{n-1-i})(f). For odd n the jump
    constraints force psi(f_delta) = 0 and the zero form is returned.
    """
    spectrum = h_values(n)
    if spectrum.degenerate:
        return LocalFormula.zero(n)
    psi = LocalFormula(n, [1])
    for i, form in enumerate(move_count_forms(n)):
        psi = psi + spectrum[i] * form
    return psi


@dataclass(frozen=True)
class Proportionality:
    n: int
    lam: Fraction | None

    @property
    def both_zero(self) -> bool:
        return self.lam is None


def proportionality(n: int) -> Proportionality:
    derived = derive_psi(n).reduce()
    euler = euler_psi(n, reduced=True)
    if derived.is_zero() and euler.is_zero():
        return Proportionality(n, None)
    j = next((j for j, c in enumerate(euler.coeffs) if c), None)
    if j is None:
        raise NotProportional(f"n={n}: Euler form vanishes but derived form is {derived}")
    lam = derived.coeffs[j] / euler.coeffs[j]
    if derived != lam * euler:
        raise NotProportional(f"n={n}: {derived} is not a multiple of {euler}")
    return Proportionality(n, lam)


def globalize(n: int, psi: LocalFormula) -> tuple[Fraction, ...]:
    """Coefficients of f_0(M), ..., f_n(M) in the sum of ``psi`` over vertex links."""
    if psi.n != n:
        raise ValueError(f"formula is for n={psi.n}, not {n}")
    return tuple(psi.b(k) * (k + 2) for k in range(-1, n))


def evaluate_global(coeffs: Sequence[Fraction], f: Sequence[int]) -> Fraction:
    return sum((Fraction(c) * x for c, x in zip(coeffs, f, strict=True)), Fraction(0))
