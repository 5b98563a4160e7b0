from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pachner import (
    LocalFormula,
    WalkConfig,
    apply_move,
    balance_check,
    builtin_complex,
    derive_psi,
    euler_psi,
    evaluate_invariant,
    find_witness,
    invariance_report,
    proportionality,
)
from pachner.errors import DimensionMismatch
from pachner.harness import formula_from_spec, invariant_delta
from pachner.moves import enumerate_all_moves


def test_evaluate_invariant_matches_lambda_chi(surfaces, threefolds):
    for c in list(surfaces.values()) + list(threefolds.values()):
        n = c.dim
        assert evaluate_invariant(c, euler_psi(n)) == c.euler_characteristic
        lam = proportionality(n).lam or 0
        assert evaluate_invariant(c, derive_psi(n)) == lam * c.euler_characteristic


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        evaluate_invariant(builtin_complex("torus7"), derive_psi(3))


def _affine(n, data):
    coeffs = [Fraction(data.draw(st.integers(-6, 6)), data.draw(st.integers(1, 5))) for _ in range(n + 1)]
    return LocalFormula(n, coeffs)


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_balance_equals_actual_change(surfaces, data):
    psi = _affine(2, data)
    for c in surfaces.values():
        for mv in enumerate_all_moves(c):
            lhs = balance_check(c, mv, psi)
            assert lhs == invariant_delta(c, mv, psi)
            assert lhs == evaluate_invariant(apply_move(c, mv), psi) - evaluate_invariant(c, psi)


def test_balance_on_three_manifolds(threefolds):
    psi = LocalFormula(3, [1, Fraction(1, 2), -2, 3])
    for c in threefolds.values():
        for mv in enumerate_all_moves(c):
            assert balance_check(c, mv, psi) == invariant_delta(c, mv, psi)


def test_balance_with_a_nonlinear_formula(surfaces):
    def psi(f):
        return Fraction(f[0] ** 2, 3) - f[1]

    for c in surfaces.values():
        for mv in enumerate_all_moves(c)[:30]:
            assert balance_check(c, mv, psi) == invariant_delta(c, mv, psi)


def test_derived_formula_is_balanced_everywhere(surfaces, threefolds):
    for c in list(surfaces.values()) + list(threefolds.values()):
        psi = derive_psi(c.dim)
        for mv in enumerate_all_moves(c):
            assert balance_check(c, mv, psi) == 0


def _proportional_to_euler(psi):
    reduced, euler = psi.reduce(), euler_psi(psi.n, reduced=True)
    j = next((j for j, x in enumerate(euler.coeffs) if x), None)
    if j is None:
        return reduced.is_zero()
    return reduced == (reduced.coeffs[j] / euler.coeffs[j]) * euler


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.data())
def test_non_euler_formulas_have_witnesses(n, data):
    psi = _affine(n, data)
    if _proportional_to_euler(psi):
        return
    hosts = {
        2: ["torus7", "rp2_6", ("boundary_simplex", 3)],
        3: [("boundary_simplex", 4), ("cross_polytope_boundary", 4)],
        4: [("boundary_simplex", 5), ("cross_polytope_boundary", 5)],
    }[n]
    found = []
    for h in hosts:
        c = builtin_complex(*h) if isinstance(h, tuple) else builtin_complex(h)
        hit = find_witness(c, psi, limit=200)
        if hit is not None:
            mv, delta = hit
            assert delta == invariant_delta(c, mv, psi) != 0
            found.append(hit)
    assert found


def test_f0_witness_on_first_zero_move():
    c = builtin_complex("boundary_simplex", 3)
    psi = formula_from_spec(2, "f0")
    mv, delta = find_witness(c, psi)
    assert mv.i == 0 and mv.sigma == (1, 2, 3)
    assert delta == 3 * 1 + 3


def test_invariance_report_schema():
    r = invariance_report(builtin_complex("torus7"), derive_psi(2), WalkConfig(50, 4))
    assert r.invariant and r.start_value == 0
    d = r.to_dict()
    assert d["schema"] == 1 and d["verdict"] == "invariant" and "witness" not in d
    r = invariance_report(builtin_complex("torus7"), formula_from_spec(2, "f1"), WalkConfig(50, 4))
    assert not r.invariant
    assert r.to_dict()["witness"]["step"] == r.witness.step


@pytest.mark.parametrize(
    "text, expected",
    [
        ("euler", "1 - 1/2*f0 + 1/3*f1"),
        ("euler-reduced", "1 - 1/6*f0"),
        ("derived", "2 - 1/3*f0"),
        ("f1", "f1"),
        ("1,1/2,-3", "1 + 1/2*f0 - 3*f1"),
    ],
)
def test_formula_from_spec(text, expected):
    assert str(formula_from_spec(2, text)) == expected


def test_formula_from_spec_rejects():
    with pytest.raises(ValueError):
        formula_from_spec(2, "f2")
    with pytest.raises(ValueError):
        formula_from_spec(2, "banana")
