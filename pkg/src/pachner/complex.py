"""Pure simplicial complexes stored as facet sets.

A simplex is a strictly increasing tuple of integer vertex labels. A complex
keeps only its facets; every other face is enumerated on demand. Complexes are
immutable, so derived data (vertex incidence, skeleta, f-vector) is cached on
first use.

The *empty complex* ``{∅}`` (a single empty facet, dimension -1) plays the role
of ``∂Δ⁰``: it is the identity for :func:`join` and the link of a facet.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable, Iterator, Mapping
from functools import cached_property
from itertools import combinations, permutations

from .errors import (
    DuplicateVertexInFacet,
    EmptyInput,
    MixedDimension,
    NotAFace,
    VertexClash,
)

Simplex = tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical (sorted) form of a vertex collection."""
    s = tuple(sorted(int(v) for v in vertices))
    for a, b in zip(s, s[1:]):
        if a == b:
            raise DuplicateVertexInFacet(f"vertex {a} repeated in {s}")
    return s


class SimplicialComplex:
    """An immutable pure simplicial complex.

    Use :func:`from_facets` to build one from user data; the constructor
    trusts its input. ``next_label`` is the smallest label that has never been
    used in this complex's history, so fresh vertices never reuse a label.
    """

    def __init__(self, facets: Iterable[Simplex], dim: int, next_label: int | None = None):
        self.facets: frozenset[Simplex] = frozenset(facets)
        self.dim = dim
        top = max((f[-1] for f in self.facets if f), default=0)
        self.next_label = max(top + 1, next_label or 0)

    @classmethod
    def empty(cls, next_label: int | None = None) -> SimplicialComplex:
        return cls([()], -1, next_label)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.dim == other.dim and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.dim, self.facets))

    def __len__(self) -> int:
        return len(self.facets)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted_facets)

    def __contains__(self, s: object) -> bool:
        return isinstance(s, tuple) and self.has_face(s)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector})"

    @property
    def is_empty(self) -> bool:
        return self.dim < 0

    @cached_property
    def sorted_facets(self) -> tuple[Simplex, ...]:
        return tuple(sorted(self.facets))

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @cached_property
    def vertex_facets(self) -> dict[int, tuple[Simplex, ...]]:
        inc: dict[int, list[Simplex]] = {}
        for f in self.sorted_facets:
            for v in f:
                inc.setdefault(v, []).append(f)
        return {v: tuple(fs) for v, fs in inc.items()}

    @cached_property
    def neighbours(self) -> dict[int, frozenset[int]]:
        return {
            v: frozenset(u for f in fs for u in f if u != v)
            for v, fs in self.vertex_facets.items()
        }

    def facets_containing(self, s: Simplex) -> list[Simplex]:
        if not s:
            return list(self.sorted_facets)
        ss = set(s)
        return [f for f in self.vertex_facets.get(s[0], ()) if ss.issubset(f)]

    def has_face(self, s: Simplex) -> bool:
        if not s:
            return True
        ss = set(s)
        return any(ss.issubset(f) for f in self.vertex_facets.get(s[0], ()))

    def faces(self, k: int) -> frozenset[Simplex]:
        """All k-dimensional faces."""
        if k > self.dim or k < -1:
            return frozenset()
        if k == self.dim:
            return self.facets
        return self._skeleton(k)

    def _skeleton(self, k: int) -> frozenset[Simplex]:
        cache = self.__dict__.setdefault("_faces_cache", {})
        if k not in cache:
            cache[k] = frozenset(c for f in self.facets for c in combinations(f, k + 1))
        return cache[k]

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_0, ..., f_dim)``; ``f_{-1} = 1`` is implicit."""
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    @cached_property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * fk for k, fk in enumerate(self.f_vector))

    def with_facets(self, facets: Iterable[Simplex]) -> SimplicialComplex:
        """Same dimension and label history, new facet set."""
        return SimplicialComplex(facets, self.dim, self.next_label)


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Validate user facets and build a pure complex."""
    fs = {simplex(f) for f in facets}
    if not fs:
        raise EmptyInput("a complex needs at least one facet")
    sizes = {len(f) for f in fs}
    if len(sizes) > 1:
        raise MixedDimension(f"facets of sizes {sorted(sizes)} in one pure complex")
    size = sizes.pop()
    if size == 0:
        return SimplicialComplex.empty()
    return SimplicialComplex(fs, size - 1)


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    return c.f_vector


def euler_characteristic(c: SimplicialComplex) -> int:
    return c.euler_characteristic


def _require_face(c: SimplicialComplex, s: Simplex) -> list[Simplex]:
    containing = c.facets_containing(s)
    if not containing:
        raise NotAFace(f"{s} is not a face of {c!r}")
    return containing


def star(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Closed star: the subcomplex generated by the facets containing ``s``."""
    s = simplex(s)
    return c.with_facets(_require_face(c, s))


def link(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    s = simplex(s)
    containing = _require_face(c, s)
    ss = set(s)
    rest = [tuple(v for v in f if v not in ss) for f in containing]
    return SimplicialComplex(rest, c.dim - len(s), c.next_label)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    clash = set(a.vertices) & set(b.vertices)
    if clash:
        raise VertexClash(f"join operands share vertices {sorted(clash)}")
    facets = [tuple(sorted(f + g)) for f in a.facets for g in b.facets]
    return SimplicialComplex(facets, a.dim + b.dim + 1, max(a.next_label, b.next_label))


def simplex_complex(s: Iterable[int]) -> SimplicialComplex:
    """The full simplex on ``s`` as a one-facet complex."""
    s = simplex(s)
    return SimplicialComplex([s], len(s) - 1)


def simplex_boundary(s: Iterable[int]) -> SimplicialComplex:
    """``∂s``; the boundary of a vertex is the empty complex."""
    s = simplex(s)
    if len(s) == 1:
        return SimplicialComplex.empty(s[0] + 1)
    return SimplicialComplex(combinations(s, len(s) - 1), len(s) - 2)


def boundary(c: SimplicialComplex) -> SimplicialComplex:
    """Codimension-one faces lying in exactly one facet."""
    counts = Counter(r for f in c.facets for r in combinations(f, c.dim))
    return SimplicialComplex([r for r, m in counts.items() if m == 1], c.dim - 1, c.next_label)


def relabel(c: SimplicialComplex, mapping: Mapping[int, int]) -> SimplicialComplex:
    """Apply a vertex relabelling (vertices missing from ``mapping`` stay put)."""
    facets = [simplex(mapping.get(v, v) for v in f) for f in c.facets]
    return SimplicialComplex(facets, c.dim)


def cone(c: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    if apex is None:
        apex = c.next_label
    return join(SimplicialComplex([(apex,)], 0), c)


def is_connected(c: SimplicialComplex) -> bool:
    verts = c.vertices
    if not verts:
        return True
    seen = {verts[0]}
    todo = deque(seen)
    while todo:
        for u in c.neighbours[todo.popleft()]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == len(verts)


def barycentric_subdivision(c: SimplicialComplex) -> SimplicialComplex:
    """Barycentric subdivision; new labels are assigned to faces in sorted order."""
    faces = sorted({fc for f in c.facets for k in range(1, len(f) + 1) for fc in combinations(f, k)},
                   key=lambda s: (len(s), s))
    label = {fc: i + 1 for i, fc in enumerate(faces)}
    flags = []
    for f in c.facets:
        for perm in permutations(f):
            flags.append(tuple(sorted(label[tuple(sorted(perm[: k + 1]))] for k in range(len(f)))))
    return SimplicialComplex(flags, c.dim)


def _profiles(c: SimplicialComplex) -> dict[int, tuple]:
    """Cheap per-vertex invariant: facet degree, edge degree, sorted neighbour degrees."""
    fdeg = {v: len(fs) for v, fs in c.vertex_facets.items()}
    nb = c.neighbours
    return {
        v: (fdeg[v], len(nb[v]), tuple(sorted(fdeg[u] for u in nb[v])))
        for v in c.vertices
    }


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> dict[int, int] | None:
    """Find a vertex bijection carrying the facets of ``a`` onto those of ``b``.

    Backtracking over vertices of ``a`` in a connected order; candidate images
    must share the degree profile and respect already-mapped adjacencies.
    Returns ``None`` when no isomorphism exists.
    """
    if a.dim != b.dim or len(a.vertices) != len(b.vertices) or a.f_vector != b.f_vector:
        return None
    if a.is_empty:
        return {}
    pa, pb = _profiles(a), _profiles(b)
    if sorted(pa.values()) != sorted(pb.values()):
        return None
    by_profile: dict[tuple, list[int]] = {}
    for v in b.vertices:
        by_profile.setdefault(pb[v], []).append(v)

    rarity = Counter(pa.values())
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(a.vertices)
    while remaining:
        frontier = [v for v in remaining if a.neighbours[v] & placed]
        pool = frontier or remaining
        v = min(pool, key=lambda u: (-len(a.neighbours[u] & placed), rarity[pa[u]], u))
        order.append(v)
        placed.add(v)
        remaining.discard(v)

    na, nb = a.neighbours, b.neighbours
    bfacets = b.facets
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, w: int) -> bool:
        for u, x in mapping.items():
            if (u in na[v]) != (x in nb[w]):
                return False
        for f in a.vertex_facets[v]:
            if all(u in mapping or u == v for u in f):
                img = tuple(sorted(w if u == v else mapping[u] for u in f))
                if img not in bfacets:
                    return False
        return True

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for w in by_profile[pa[v]]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(depth + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def is_boundary_simplex(c: SimplicialComplex) -> bool:
    """True when ``c`` is the boundary of a (dim+1)-simplex."""
    n = len(c.vertices)
    return c.dim >= 0 and n == c.dim + 2 and len(c.facets) == n
