"""Gadget cells: PL balls with a simplex boundary and anchored interior moves.

A gadget n-cell ``K`` has ``∂K ≅ ∂Δⁿ`` and, for each index 0 <= i <= n-1, a
designated i-move inside ``K`` whose sigma contains the base vertex and which
leaves the star of every other boundary vertex alone. Implanting ``K`` into a
facet at a vertex ``v`` shifts the f-vector of ``lk(v)`` by a fixed vector,
independent of the surrounding manifold.

Only the 2-dimensional cell is constructed; :func:`verify_gadget` works in any
dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .complex import (
    Simplex,
    SimplicialComplex,
    boundary,
    cone,
    from_facets,
    is_isomorphic,
    link,
    relabel,
    simplex,
    simplex_boundary,
    star,
)
from .errors import BaseNotInFacet, InvalidMove, LabelClash, NotAFacet
from .moves import BistellarMove, apply_move, check_move
from .recognition import Verdict, is_sphere

# K^2 on labels 0..11. Outer triangle 0,1,2 with base 0; inner triangle 0,3,4
# meets the outer boundary only in 0. Inside it sit J_0 = {0,5,6} and
# J_1 = {0,7,8},{0,7,9} (an edge 0-7 whose link is the non-edge 8,9), the rest
# filled by a cone from 11. The base link is the path 1-3-5-6-8-7-9-4-2.
GADGET_2_FACETS = (
    (0, 1, 3), (0, 3, 5), (0, 5, 6), (0, 6, 8), (0, 7, 8), (0, 7, 9), (0, 4, 9), (0, 2, 4),
    (7, 8, 10), (7, 9, 10),
    (3, 5, 11), (5, 6, 11), (6, 8, 11), (8, 10, 11), (9, 10, 11), (4, 9, 11), (3, 4, 11),
    (1, 3, 4), (1, 2, 4),
)


@dataclass(frozen=True)
class GadgetCell:
    cell: SimplicialComplex
    base: int
    boundary_vertices: Simplex
    designated_moves: tuple[BistellarMove, ...]

    @property
    def n(self) -> int:
        return self.cell.dim

    @property
    def interior_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.cell.vertices if v not in self.boundary_vertices)

    def relabel(self, mapping: dict[int, int]) -> GadgetCell:
        def img(s: Simplex) -> Simplex:
            return simplex(mapping.get(v, v) for v in s)

        cell = relabel(self.cell, mapping)
        moves = tuple(
            BistellarMove(img(m.sigma), (cell.next_label,) if m.i == 0 else img(m.tau), m.i, m.n)
            for m in self.designated_moves
        )
        return GadgetCell(cell, mapping.get(self.base, self.base), img(self.boundary_vertices), moves)


def gadget_2() -> GadgetCell:
    cell = from_facets(GADGET_2_FACETS)
    moves = (
        BistellarMove((0, 5, 6), (cell.next_label,), 0, 2),
        BistellarMove((0, 7), (8, 9), 1, 2),
    )
    return GadgetCell(cell, 0, (0, 1, 2), moves)


@dataclass
class GadgetReport:
    passed: bool
    reasons: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def _is_ball(c: SimplicialComplex, budget: int) -> bool:
    # A ball capped off by a cone over its boundary is a sphere.
    if c.dim == 0:
        return len(c.vertices) == 1
    bd = boundary(c)
    if not bd.facets:
        return False
    capped = c.with_facets(c.facets | cone(bd, c.next_label).facets)
    return is_sphere(capped, budget).verdict is Verdict.VERIFIED


def verify_gadget(k: GadgetCell, budget: int = 2_000) -> GadgetReport:
    """Check the defining properties of a gadget cell; collect every failure."""
    reasons = []
    n = k.n
    cell = k.cell
    bd = boundary(cell)
    bverts = tuple(bd.vertices)
    if is_isomorphic(bd, simplex_boundary(range(n + 1))) is None:
        reasons.append(f"boundary has f-vector {bd.f_vector}, not that of a simplex boundary")
    if bverts != tuple(k.boundary_vertices):
        reasons.append(f"boundary vertices are {bverts}, declared {tuple(k.boundary_vertices)}")
    if k.base not in bverts:
        reasons.append(f"base {k.base} is not on the boundary")

    for v in cell.vertices:
        lk = link(cell, (v,))
        if v in bverts:
            if not _is_ball(lk, budget):
                reasons.append(f"link of boundary vertex {v} is not a ball")
        elif is_sphere(lk, budget).verdict is not Verdict.VERIFIED:
            reasons.append(f"link of interior vertex {v} is not a sphere")

    indices = sorted(m.i for m in k.designated_moves)
    if indices != list(range(n)):
        reasons.append(f"designated move indices {indices}, need one each of 0..{n - 1}")
    others = [v for v in bverts if v != k.base]
    for mv in k.designated_moves:
        try:
            check_move(cell, mv)
        except InvalidMove as exc:
            reasons.append(f"designated {mv.i}-move invalid: {exc}")
            continue
        if k.base not in mv.sigma:
            reasons.append(f"designated {mv.i}-move does not contain the base in sigma")
        after = apply_move(cell, mv)
        for v in others:
            if star(cell, (v,)) != star(after, (v,)):
                reasons.append(f"designated {mv.i}-move changes the star of boundary vertex {v}")
    return GadgetReport(not reasons, reasons)


def a_vector(k: GadgetCell) -> tuple[int, ...]:
    """Shift of the base-vertex link f-vector caused by implanting ``k``.

    The interior part of the cell link, minus the codimension-one face
    opposite the base that implantation removes.
    """
    n = k.n
    inner = link(k.cell, (k.base,)).f_vector
    outer = link(boundary(k.cell), (k.base,)).f_vector
    outer = tuple(outer) + (0,) * (n - len(outer))
    return tuple(inner[i] - outer[i] - (1 if i == n - 1 else 0) for i in range(n))


def implant_mapping(m: SimplicialComplex, facet: Simplex, v: int, k: GadgetCell) -> dict[int, int]:
    """Labels of ``k`` inside ``m``: base -> v, boundary -> facet in sorted order,
    interior -> fresh labels of ``m``."""
    facet = simplex(facet)
    if facet not in m.facets:
        raise NotAFacet(f"{facet} is not a facet")
    if v not in facet:
        raise BaseNotInFacet(f"vertex {v} is not in {facet}")
    if len(facet) != len(k.boundary_vertices) or k.n != m.dim:
        raise NotAFacet(f"a {k.n}-cell cannot replace a {len(facet) - 1}-simplex")
    mapping = {k.base: v}
    rest_k = [u for u in k.boundary_vertices if u != k.base]
    rest_m = [u for u in facet if u != v]
    mapping.update(zip(rest_k, rest_m))
    fresh = m.next_label
    for u in k.interior_vertices:
        mapping[u] = fresh
        fresh += 1
    return mapping


def implant_gadget(m: SimplicialComplex, facet: Simplex, v: int, k: GadgetCell) -> SimplicialComplex:
    """Replace ``facet`` of ``m`` by a copy of ``k`` with its base glued to ``v``."""
    return implant_gadget_placed(m, facet, v, k)[0]


def implant_gadget_placed(
    m: SimplicialComplex, facet: Simplex, v: int, k: GadgetCell
) -> tuple[SimplicialComplex, GadgetCell]:
    """Like :func:`implant_gadget`, also returning the gadget relabelled into
    the new complex so its designated moves can be applied there."""
    mapping = implant_mapping(m, facet, v, k)
    placed = k.relabel(mapping)
    clash = set(placed.interior_vertices) & set(m.vertices)
    if clash:
        raise LabelClash(f"interior labels {sorted(clash)} already used")
    facets = (m.facets - {simplex(facet)}) | placed.cell.facets
    out = SimplicialComplex(facets, m.dim, max(m.next_label, placed.cell.next_label))
    # 0-moves need labels fresh for the new complex.
    fixed = tuple(
        replace(mv, tau=(out.next_label,)) if mv.i == 0 else mv for mv in placed.designated_moves
    )
    return out, replace(placed, designated_moves=fixed)
