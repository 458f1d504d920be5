from __future__ import annotations

import cmath
import math
import random

import pytest
from hypothesis import given, strategies as st

from toruschar.knot import KnotParams, coprime_pairs
from toruschar.knotpoly import (
    IntPoly,
    InvalidK,
    NegativeMultiplicity,
    T,
    alexander,
    boundary_curve,
    curve_residual,
    delta_for,
    line_count_identity,
    parametrize_curve,
    twisted_root_count,
)
from toruschar.oracle import enumerate_F
from toruschar.roots import EigenLabel


def test_alexander_small():
    assert alexander(KnotParams(2, 3)) == T**2 - T + 1
    assert str(alexander(KnotParams(2, 5))) == "t^4-t^3+t^2-t+1"


def test_alexander_properties_small_grid():
    for m, n in coprime_pairs(9):
        d = alexander(KnotParams(m, n))
        assert d.degree == (m - 1) * (n - 1)
        assert d(1) == 1
        assert d.is_palindromic()


def test_exact_division():
    q, r = ((T - 1) * (T**2 + 3)).divmod_exact(T - 1)
    assert q == T**2 + 3 and r.is_zero()
    with pytest.raises(ArithmeticError):
        (T**2 + 1) // (T - 1)
    with pytest.raises(ValueError):
        T.divmod_exact(IntPoly([1, 2]))
    with pytest.raises(ZeroDivisionError):
        T.divmod_exact(IntPoly())


@given(st.lists(st.integers(-9, 9), max_size=6), st.lists(st.integers(-9, 9), max_size=4))
def test_division_roundtrip(a, b):
    x = IntPoly(a)
    d = IntPoly(list(b) + [1])
    assert (x * d) // d == x


def test_trefoil_twisted_roots():
    p = KnotParams(2, 3)
    (lab,) = enumerate_F(2, p)
    rc = twisted_root_count(lab, p)
    assert rc.total == 3 * (12 - 4 - 6)
    assert {mult for _, mult in rc.multiplicities} <= {1, 2}
    assert rc.order == 36


def test_twisted_totals_every_label():
    for m, n in coprime_pairs(8):
        p = KnotParams(m, n)
        for lab in enumerate_F(2, p):
            rc = twisted_root_count(lab, p)
            assert rc.total == 3 * (2 * m * n - 2 * m - 2 * n)
            assert all(mult in (1, 2) for _, mult in rc.multiplicities)


def test_twisted_roots_invariant_under_inversion():
    p = KnotParams(3, 5)
    for lab in enumerate_F(2, p):
        inv = EigenLabel(tuple(-x for x in lab.a_exps), tuple(-x for x in lab.b_exps), lab.order)
        assert inv == lab  # sides are closed under inversion
        assert twisted_root_count(inv, p) == twisted_root_count(lab, p)


def test_invalid_twisted_label():
    p = KnotParams(2, 3)
    with pytest.raises(NegativeMultiplicity):
        twisted_root_count(EigenLabel((3, 3), (2, 10), 12), p)
    with pytest.raises(ValueError):
        twisted_root_count(EigenLabel((0, 6, 12), (0, 9, 9), 18), p)


@pytest.mark.parametrize("pair,value", [((2, 3), 3), ((3, 4), 45), ((3, 5), 84)])
def test_line_count_frozen(pair, value):
    lc = line_count_identity(KnotParams(*pair))
    assert lc.lhs == lc.rhs == lc.by_roots == value
    assert lc.agree


def test_line_count_split_double_simple():
    for m, n in coprime_pairs(7):
        lc = line_count_identity(KnotParams(m, n))
        assert lc.double_lines == 18 * lc.dim4
        assert lc.simple_lines == 3 * lc.dim2


def test_curve_trefoil():
    cv = boundary_curve(KnotParams(2, 3), 1)
    assert math.isclose(cv.c, 1.0)
    co = cv.coeffs
    assert math.isclose(co["x3"], -3) and math.isclose(co["xy"], 10) and math.isclose(co["1"], -8)
    data = cv.to_json()
    assert set(data) >= {"m", "n", "k", "c", "coeffs", "component_key"}


def test_curve_grouping_and_invalid_k():
    p = KnotParams(3, 5)
    assert boundary_curve(p, 1).component_key == boundary_curve(p, 14).component_key
    assert boundary_curve(p, 1).component_key != boundary_curve(p, 2).component_key
    with pytest.raises(InvalidK):
        boundary_curve(p, 3)
    with pytest.raises(InvalidK):
        boundary_curve(p, 10)


def test_distinct_curves_per_pair():
    for m, n in coprime_pairs(8):
        p = KnotParams(m, n)
        ks = [k for k in range(1, m * n) if k % m and k % n]
        cs = {round(boundary_curve(p, k).c, 9) for k in ks}
        assert len(cs) == (m - 1) * (n - 1) // 2
        assert all(abs(c) <= 2 for c in cs)


def test_parametrization_at_delta_i():
    x, y = parametrize_curve(1j, 1)
    assert abs(x - 1) < 1e-15 and abs(y - 1) < 1e-15
    assert curve_residual(-2, x, y) < 1e-15
    with pytest.raises(ZeroDivisionError):
        parametrize_curve(0, 1)


def test_parametrization_on_boundary_curves():
    rng = random.Random(7)
    p = KnotParams(3, 4)
    for k in (1, 2, 5):
        cv = boundary_curve(p, k)
        d = cv.delta()
        for _ in range(50):
            t = cmath.rect(rng.uniform(0.3, 3), rng.uniform(0, 2 * math.pi))
            assert cv.residual(*parametrize_curve(d, t)) < 1e-9


def test_cube_root_of_unity_symmetry():
    # t -> ωt with ω³ = 1 gives another point of the same curve
    d = delta_for(12, 5)
    c = d**2 + d**-2
    w = cmath.exp(2j * math.pi / 3)
    for t in (0.7 + 0.2j, 1.3 - 0.9j):
        assert curve_residual(c, *parametrize_curve(d, w * t)) < 1e-9
