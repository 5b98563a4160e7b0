from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from pachner import (
    SimplicialComplex,
    builtin_complex,
    from_facets,
    is_isomorphic,
    join,
    link,
    star,
)
from pachner.complex import (
    barycentric_subdivision,
    boundary,
    cone,
    is_connected,
    relabel,
    simplex_boundary,
)
from pachner.errors import (
    DuplicateVertexInFacet,
    EmptyInput,
    MixedDimension,
    NotAFace,
    UnknownName,
    VertexClash,
)

D3 = list(combinations([1, 2, 3, 4], 3))


def test_from_facets_triangle_cycle():
    c = from_facets([{1, 2}, {2, 3}, {3, 1}])
    assert c.dim == 1
    assert c.f_vector == (3, 3)


def test_from_facets_boundary_tetrahedron():
    assert from_facets(D3).f_vector == (4, 6, 4)


@pytest.mark.parametrize(
    "facets, exc",
    [
        ([{1, 2, 3}, {4, 5}], MixedDimension),
        ([(1, 2, 3), (1, 2)], MixedDimension),
        ([(1, 1, 2)], DuplicateVertexInFacet),
        ([], EmptyInput),
    ],
)
def test_from_facets_rejects(facets, exc):
    with pytest.raises(exc):
        from_facets(facets)


def test_star_of_vertex_and_facet():
    c = from_facets(D3)
    assert star(c, [1]).facets == {(1, 2, 3), (1, 2, 4), (1, 3, 4)}
    assert star(c, [1, 2, 3]).facets == {(1, 2, 3)}


def test_link_examples():
    c = from_facets(D3)
    assert link(c, [1]).facets == {(2, 3), (2, 4), (3, 4)}
    assert link(c, [1, 2]).facets == {(3,), (4,)}
    assert link(c, [1, 2, 3]).is_empty


def test_link_not_a_face():
    with pytest.raises(NotAFace):
        link(from_facets(D3), [1, 5])
    with pytest.raises(NotAFace):
        star(from_facets(D3), [9])


def test_torus_star_and_link_match_brute_force():
    t = builtin_complex("torus7")
    for v in t.vertices:
        assert len(star(t, [v]).facets) == 6
        lk = link(t, [v])
        assert lk.f_vector == (6, 6)
        assert oracles.all_faces(lk.facets) == oracles.link_faces(t.facets, (v,))
        assert oracles.all_faces(star(t, [v]).facets) == oracles.star_faces(t.facets, (v,))


def test_links_of_all_faces_match_definition(surfaces):
    for c in surfaces.values():
        for k in range(c.dim):
            for s in c.faces(k):
                assert oracles.all_faces(link(c, s).facets) == oracles.link_faces(c.facets, s) - {()}


def test_join_examples():
    point = from_facets([[0]])
    hexagon = from_facets([(i, i % 6 + 1) for i in range(1, 7)])
    assert join(point, hexagon).f_vector == (7, 12, 6)
    edge = from_facets([[1, 2]])
    two_points = from_facets([[3], [4]])
    assert join(edge, two_points).facets == {(1, 2, 3), (1, 2, 4)}
    c = from_facets(D3)
    assert join(c, SimplicialComplex.empty()) == c
    assert join(SimplicialComplex.empty(), c) == c
    with pytest.raises(VertexClash):
        join(c, point.with_facets([(1,)]))


def test_f_vectors_and_euler():
    d5 = builtin_complex("boundary_simplex", 5)
    assert d5.f_vector == (6, 15, 20, 15, 6)
    assert d5.euler_characteristic == 2
    cp4 = builtin_complex("cross_polytope_boundary", 4)
    assert cp4.f_vector == (8, 24, 32, 16) == oracles.f_vector(cp4.facets)
    assert cp4.euler_characteristic == 0
    t = builtin_complex("torus7")
    assert t.f_vector == (7, 21, 14) == oracles.f_vector(t.facets)
    assert t.euler_characteristic == 0


def test_builtins():
    assert builtin_complex("boundary_simplex", 4).f_vector == (5, 10, 10, 5)
    assert builtin_complex("cross_polytope_boundary", 5).f_vector == (10, 40, 80, 80, 32)
    rp2 = builtin_complex("rp2_6")
    assert rp2.f_vector == (6, 15, 10)
    assert rp2.euler_characteristic == 1
    bary = builtin_complex("barycentric_boundary", 3)
    assert bary.f_vector == (14, 36, 24) == oracles.f_vector(bary.facets)
    with pytest.raises(UnknownName):
        builtin_complex("klein_bottle")


def test_torus_edges_are_complete_graph():
    # 7 vertices, 21 edges: the 1-skeleton is K7, each edge in exactly two triangles
    t = builtin_complex("torus7")
    assert t.faces(1) == frozenset(combinations(range(1, 8), 2))
    assert all(len(t.facets_containing(e)) == 2 for e in t.faces(1))


def test_is_isomorphic_examples():
    a = from_facets(D3)
    b = relabel(a, {1: 10, 2: 30, 3: 20, 4: 40})
    m = is_isomorphic(a, b)
    assert m is not None
    assert {tuple(sorted(m[v] for v in f)) for f in a.facets} == b.facets
    three = from_facets([(1, 2), (2, 3), (1, 3)])
    four = from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])
    assert is_isomorphic(three, four) is None
    hex_a = from_facets([(i, i % 6 + 1) for i in range(1, 7)])
    hex_b = from_facets([(10, 12), (12, 14), (14, 11), (11, 15), (15, 13), (13, 10)])
    assert is_isomorphic(hex_a, hex_b) is not None


def test_isomorphism_deterministic_and_distinguishes_surfaces():
    t = builtin_complex("torus7")
    assert is_isomorphic(t, t) == is_isomorphic(t, t)
    # same f-vector, different degree sequences
    octa = builtin_complex("octahedron")
    other = from_facets([(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                         (2, 3, 6), (3, 4, 6), (4, 5, 6)])
    assert other.f_vector == octa.f_vector == (6, 12, 8)
    assert is_isomorphic(octa, other) is None
    assert oracles.isomorphic(octa.facets, other.facets) is False


def test_isomorphism_is_an_equivalence_on_corpus(surfaces):
    items = list(surfaces.values())
    for a in items:
        assert is_isomorphic(a, a) is not None
        for b in items:
            assert (is_isomorphic(a, b) is None) == (is_isomorphic(b, a) is None)


@settings(max_examples=30, deadline=None)
@given(st.permutations(list(range(1, 8))))
def test_isomorphism_finds_relabelled_torus(perm):
    t = builtin_complex("torus7")
    u = relabel(t, dict(zip(range(1, 8), perm)))
    assert is_isomorphic(t, u) is not None


def test_f_vector_sums_over_links(surfaces, threefolds):
    for c in list(surfaces.values()) + list(threefolds.values()):
        lf = {v: link(c, [v]).f_vector for v in c.vertices}
        for k in range(c.dim + 1):
            if k == 0:
                total = len(c.vertices)
            else:
                total = sum(f[k - 1] for f in lf.values())
            assert total % (k + 1) == 0
            assert total // (k + 1) == c.f_vector[k]


def test_star_is_cone_over_link(surfaces):
    for c in surfaces.values():
        for v in c.vertices:
            assert star(c, [v]) == join(from_facets([[v]]), link(c, [v]))


def test_boundary_and_cone():
    disk = cone(from_facets([(i, i % 6 + 1) for i in range(1, 7)]))
    assert boundary(disk).f_vector == (6, 6)
    assert boundary(from_facets(D3)).facets == frozenset()
    assert simplex_boundary([1, 2, 3, 4]) == from_facets(D3)
    assert simplex_boundary([7]).is_empty


def test_connectivity():
    two = from_facets(D3 + [tuple(v + 4 for v in f) for f in D3])
    assert not is_connected(two)
    assert is_connected(from_facets(D3))


def test_barycentric_subdivision_counts():
    b = barycentric_subdivision(builtin_complex("boundary_simplex", 4))
    # facets: 5 tetrahedra * 4! flags; vertices: all nonempty faces of the 4 boundary
    assert b.f_vector[0] == 5 + 10 + 10 + 5
    assert b.f_vector[-1] == 5 * 24
    assert b.euler_characteristic == 0
