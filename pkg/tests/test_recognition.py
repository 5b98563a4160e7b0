import pytest

from pachner import (
    MoveLog,
    Verdict,
    WalkConfig,
    builtin_complex,
    from_facets,
    random_walk,
    replay,
    sphere_recognize,
    verify_closed_manifold,
)
from pachner.complex import barycentric_subdivision, is_boundary_simplex, join
from pachner.recognition import is_sphere


@pytest.mark.parametrize(
    "name, n",
    [
        ("boundary_simplex", 3),
        ("boundary_simplex", 4),
        ("boundary_simplex", 5),
        ("cross_polytope_boundary", 4),
        ("cross_polytope_boundary", 5),
        ("octahedron", None),
        ("torus7", None),
        ("rp2_6", None),
        ("barycentric_boundary", 3),
    ],
)
def test_corpus_is_verified(name, n):
    assert verify_closed_manifold(builtin_complex(name, n)).verdict is Verdict.VERIFIED


def test_walked_complexes_stay_manifolds(surfaces, threefolds):
    for c in list(surfaces.values()) + list(threefolds.values()):
        assert verify_closed_manifold(c)


def test_pinched_surface_is_rejected():
    # two tetrahedron boundaries glued at vertex 1: the link of 1 is two circles
    a = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    b = [(1, 5, 6), (1, 5, 7), (1, 6, 7), (5, 6, 7)]
    check = verify_closed_manifold(from_facets(a + b))
    assert check.verdict is Verdict.NO
    assert check.witness == (1,)
    assert "disconnected" in check.reason


def test_surface_with_boundary_is_rejected():
    disk = from_facets([(0, i, i % 5 + 1) for i in range(1, 6)])
    check = verify_closed_manifold(disk)
    assert check.verdict is Verdict.NO
    assert not check


def test_suspension_of_torus_is_not_a_manifold():
    # the two cone points have torus links
    torus = builtin_complex("torus7")
    susp = join(torus, from_facets([[100], [101]]))
    check = verify_closed_manifold(susp)
    assert check.verdict is Verdict.NO
    assert check.witness in {(100,), (101,)}


def test_sphere_recognition_reduces_subdivided_tetrahedron():
    start = builtin_complex("barycentric_boundary", 3)
    cert = sphere_recognize(start, budget=10_000, seed=0)
    assert cert is not None
    assert cert.check()
    assert is_boundary_simplex(cert.end) and cert.end.f_vector == (4, 6, 4)
    assert len(cert.log) == cert.attempts <= 10_000
    assert replay(start, MoveLog.from_jsonl(cert.log.to_jsonl()).moves) == cert.end


@pytest.mark.parametrize("seed", range(5))
def test_sphere_recognition_in_three_dimensions(seed):
    start, _ = random_walk(builtin_complex("boundary_simplex", 4), WalkConfig(40, seed))
    cert = sphere_recognize(start, budget=5_000, seed=seed)
    assert cert is not None and cert.check()


def test_sphere_recognition_of_subdivided_four_simplex_boundary():
    start = barycentric_subdivision(builtin_complex("boundary_simplex", 4))
    cert = sphere_recognize(start, budget=10_000, seed=0)
    assert cert is not None and cert.check()


def test_torus_is_not_recognized():
    assert sphere_recognize(builtin_complex("torus7"), budget=2_000, seed=0) is None


def test_tiny_budget_gives_unknown():
    start = builtin_complex("barycentric_boundary", 3)
    assert sphere_recognize(start, budget=3, seed=0) is None


def test_is_sphere_verdicts():
    assert is_sphere(builtin_complex("boundary_simplex", 4)).verdict is Verdict.VERIFIED
    assert is_sphere(builtin_complex("torus7")).verdict is Verdict.NO
    assert is_sphere(builtin_complex("rp2_6")).verdict is Verdict.NO
    assert is_sphere(from_facets([[1], [2]])).verdict is Verdict.VERIFIED
    assert is_sphere(from_facets([[1], [2], [3]])).verdict is Verdict.NO
