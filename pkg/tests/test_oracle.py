from __future__ import annotations

import cmath
from itertools import product

import pytest

from toruschar.knot import KnotParams
from toruschar.oracle import (
    BudgetExceeded,
    enumerate_F,
    enumerate_G,
    falling_factorial,
    mu_action_on_labels,
    n_side,
    n_table,
    partial_counts,
)


def _naive_sides(r, m, n):
    """Eigenvalue multisets per side, found by floating-point search over all r-th roots of roots of unity."""
    N = r * m * n
    z = [cmath.exp(2j * cmath.pi * k / N) for k in range(N)]

    def close(a, b):
        return abs(a - b) < 1e-9

    def sides(power):
        out = {}
        for tup in product(range(N), repeat=r):
            if list(tup) != sorted(tup):
                continue
            vals = [z[k] ** power for k in tup]
            if not all(close(v, vals[0]) for v in vals):
                continue
            if not close(vals[0] ** r, 1):
                continue
            prod_ = 1
            for k in tup:
                prod_ *= z[k]
            if not close(prod_, 1):
                continue
            key = round(cmath.phase(vals[0]) / (2 * cmath.pi) * r) % r
            out.setdefault(key, []).append(tup)
        return out

    return sides(n), sides(m)


def _naive_count(r, m, n, distinct_a, distinct_b):
    A, B = _naive_sides(r, m, n)
    total = 0
    for w in A:
        a = [t for t in A[w] if (len(set(t)) == r) == distinct_a and len(set(t)) >= r - 1]
        b = [t for t in B.get(w, []) if (len(set(t)) == r) == distinct_b and len(set(t)) >= r - 1]
        total += len(a) * len(b)
    return total


@pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (3, 4)])
def test_F_against_naive_float_search(m, n):
    p = KnotParams(m, n)
    assert len(enumerate_F(3, p)) == _naive_count(3, p.m, p.n, True, True)
    assert len(enumerate_F(2, p)) == _naive_count(2, p.m, p.n, True, True)


@pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (3, 4)])
def test_G_against_naive_float_search(m, n):
    p = KnotParams(m, n)
    want = _naive_count(3, p.m, p.n, False, True) + _naive_count(3, p.m, p.n, True, False)
    assert len(enumerate_G(p)) == want


def test_frozen_values():
    assert len(enumerate_F(3, KnotParams(3, 4))) == 1
    assert len(enumerate_F(2, KnotParams(2, 3))) == 1
    assert len(enumerate_F(3, KnotParams(2, 3))) == 0
    assert len(enumerate_G(KnotParams(2, 3))) == 1
    assert len(enumerate_G(KnotParams(3, 4))) == 9
    assert len(enumerate_G(KnotParams(3, 5))) == 16


def test_labels_valid_and_distinct_sides():
    p = KnotParams(4, 5)
    for lab in enumerate_F(3, p):
        lab.validate(p)
        assert len(set(lab.a_exps)) == len(set(lab.b_exps)) == 3
    for lab in enumerate_G(p):
        lab.validate(p)
        assert sorted((len(set(lab.a_exps)), len(set(lab.b_exps)))) == [2, 3]


def test_label_set_json():
    ls = enumerate_F(3, KnotParams(3, 4))
    data = ls.to_json()
    assert data["count"] == 1
    assert data["labels"] == [{"order": 36, "a_exps": [0, 12, 24], "b_exps": [0, 9, 27]}]
    assert next(iter(ls)) in ls


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        enumerate_F(3, KnotParams(29, 31), budget=1000)
    assert len(enumerate_F(2, KnotParams(2, 3), budget=None)) == 1


def test_n_side_sums():
    for r in (2, 3):
        for n in range(2, 9):
            assert sum(n_side(r, n, k) for k in range(n)) == falling_factorial(n, r)


def test_n_table_diagonal_sum():
    p = KnotParams(3, 5)
    total = sum(n_table(3, p, k, k) for k in range(15))
    assert total == falling_factorial(5, 3) * falling_factorial(3, 3)


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(2, 3) == 0


def test_mu3_orbits_frozen():
    rep = mu_action_on_labels(enumerate_F(3, KnotParams(5, 7)))
    assert (rep.fixed_labels, rep.orbits) == (0, 10)
    assert rep.burnside_ok(3)
    g = mu_action_on_labels(enumerate_G(KnotParams(2, 3)))
    assert g.fixed_labels == 1
    assert g.to_json()["stabilizer_sizes"] == {3: 1}


def test_mu2_on_rank2_labels():
    rep = mu_action_on_labels(enumerate_F(2, KnotParams(3, 4)))
    assert rep.fixed_labels == 1
    assert partial_counts(KnotParams(3, 4)) == (1, 1)
    assert partial_counts(KnotParams(3, 5)) == (2, 0)


def test_orbits_partition_labels():
    for pair in [(3, 4), (4, 9), (5, 6)]:
        ls = enumerate_F(3, KnotParams(*pair))
        rep = mu_action_on_labels(ls)
        assert 3 * len(rep.free) + len(rep.fixed) == len(ls)
        assert rep.burnside_ok(3)
