from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from toruschar.census import census_gl, census_pgl, census_sl
from toruschar.kclass import (
    NAMED,
    NoValidFactorization,
    NonIntegralSolution,
    class_M_mu3_stratified,
    class_M_quotient,
    class_M_quotient_mu3,
    class_M_stratified,
    kclass,
    kclass_gl,
    kclass_pgl,
    kclass_report,
    kclass_sl,
    pgl3_case,
    recover_mn,
    stratum_sum,
)
from toruschar.knot import KnotParams, coprime_pairs
from toruschar.kring import L, P1, P2, KClass


def test_trefoil_values():
    p = KnotParams(2, 3)
    assert kclass_sl(3, p) == 3 * L**2 - 5 * L + 4
    assert kclass_pgl(3, p) == 3 * L**2 - 3 * L + 2
    assert kclass_pgl(2, p) == 2 * L - 1
    assert kclass_gl(2, p) == (L - 1) * (2 * L - 1)
    assert kclass_sl(2, p) == 2 * L - 2


def test_other_frozen_values():
    assert kclass_pgl(2, KnotParams(3, 5)) == 3 * L - 4
    assert kclass_sl(3, KnotParams(3, 4)) == stratum_sum(census_sl(3, KnotParams(3, 4)))


def test_named_table():
    assert NAMED.P1 == P1 and NAMED.P2 == P2
    assert class_M_quotient() == P1
    assert class_M_quotient_mu3() == P2


def test_quotient_classes_by_multiplication():
    assert class_M_stratified() == (L - 1) ** 5 * class_M_quotient()
    assert class_M_mu3_stratified() == (L - 1) ** 2 * class_M_quotient_mu3()


def test_pgl3_case_dispatch_covers_all_five():
    seen = {pgl3_case(KnotParams(m, n))[0] for m, n in coprime_pairs(13)}
    assert seen == {1, 2, 3, 4, 5}
    assert pgl3_case(KnotParams(2, 3)) == (5, 3, 2)
    assert pgl3_case(KnotParams(5, 7))[0] == 1
    assert pgl3_case(KnotParams(5, 6))[0] == 4
    assert pgl3_case(KnotParams(5, 9))[0] == 3


def test_closed_forms_match_census_small_grid():
    for m, n in coprime_pairs(9):
        p = KnotParams(m, n)
        for r in (2, 3):
            assert stratum_sum(census_sl(r, p, labels=False)) == kclass_sl(r, p)
            assert stratum_sum(census_pgl(r, p, labels=False)) == kclass_pgl(r, p)
            assert stratum_sum(census_gl(r, p, labels=False)) == kclass_gl(r, p)


def test_kclass_dispatch_and_rank_guard():
    p = KnotParams(2, 5)
    assert kclass("sl", 3, p) == kclass_sl(3, p)
    assert kclass("GL", 2, p) == kclass_gl(2, p)
    with pytest.raises(ValueError):
        kclass_sl(4, p)


def test_report_json():
    rep = kclass_report("sl", 3, KnotParams(2, 3))
    assert rep == {
        "group": "SL",
        "rank": 3,
        "m": 2,
        "n": 3,
        "kclass": {"coeffs": [4, -5, 3]},
        "kclass_pretty": "3L^2-5L+4",
    }


def test_recover_degenerate_branch():
    for n in (3, 5, 7, 9, 11):
        assert recover_mn(kclass_sl(3, KnotParams(2, n))) == (2, n)


def test_recover_rejects_non_classes():
    with pytest.raises(NoValidFactorization):
        recover_mn(L**2)
    with pytest.raises(NoValidFactorization):
        recover_mn(L**5)
    with pytest.raises((NoValidFactorization, NonIntegralSolution)):
        recover_mn(kclass_sl(3, KnotParams(3, 4)) + 1)
    with pytest.raises(NonIntegralSolution):
        recover_mn(L**4 - 10 * L - 5)


@given(st.integers(2, 25), st.integers(2, 25))
def test_recover_roundtrip_property(a, b):
    from math import gcd

    if a == b or gcd(a, b) != 1:
        return
    p = KnotParams(a, b)
    assert recover_mn(kclass_sl(3, p)) == p.sorted_pair


@given(st.integers(2, 30), st.integers(2, 30))
def test_classes_at_one(a, b):
    # [SL3](1) and the PGL count are integers whatever the branch; GL vanishes at L = 1
    from math import gcd

    if a == b or gcd(a, b) != 1:
        return
    p = KnotParams(a, b)
    assert kclass_gl(3, p)(1) == 0
    assert kclass_gl(2, p)(1) == 0
