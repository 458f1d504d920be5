from __future__ import annotations

import pytest

from toruschar.knot import KnotParams, NotCoprimeError, UnknotError, coprime_pairs
from toruschar.roots import EigenLabel, InvalidLabel, RootExp


def test_normalization_puts_odd_member_in_n():
    p = KnotParams(3, 4)
    assert (p.m, p.n, p.swapped) == (4, 3, True)
    assert p.sorted_pair == (3, 4)
    q = KnotParams(2, 3)
    assert (q.m, q.n, q.swapped) == (2, 3, False)
    assert KnotParams(4, 3, normalize=False).pair == (4, 3)


def test_parity_and_mod3_helpers():
    p = KnotParams(4, 9)
    assert (p.even, p.odd, p.mult3, p.not_mult3) == (4, 9, 9, 4)
    q = KnotParams(5, 7)
    assert q.even is None and q.mult3 is None


def test_invalid_pairs():
    with pytest.raises(UnknotError):
        KnotParams(1, 5)
    with pytest.raises(NotCoprimeError):
        KnotParams(4, 6)
    with pytest.raises(ValueError):
        KnotParams(0, 3)
    with pytest.raises(TypeError):
        KnotParams(2.0, 3)


def test_immutable_and_hashable():
    p = KnotParams(2, 5)
    with pytest.raises(AttributeError):
        p.m = 3
    assert {p, KnotParams(5, 2)} == {p}
    assert p.flipped().pair == (5, 2)


def test_coprime_pairs_sorted():
    pairs = list(coprime_pairs(6))
    assert pairs == [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)]


def test_root_exp_arithmetic():
    w = RootExp(1, 6)
    assert w**6 == RootExp(0, 1)
    assert (w * w.inverse()).is_one()
    assert RootExp(2, 6) == RootExp(1, 3)
    assert hash(RootExp(2, 6)) == hash(RootExp(1, 3))
    assert RootExp(1, 2) * RootExp(1, 3) == RootExp(5, 6)
    assert abs(RootExp(1, 4).to_complex() - 1j) < 1e-15
    with pytest.raises(ValueError):
        RootExp(1, 4).at_order(6)


def test_label_canonical_and_json():
    lab = EigenLabel((24, 0, 12), (27, 9, 0), 36)
    assert lab.a_exps == (0, 12, 24)
    assert lab == EigenLabel.from_json(lab.to_json())
    assert lab.shifted(36, 72) == lab


def test_label_validation():
    p = KnotParams(3, 4)  # normalized to m=4, n=3, order 36
    good = EigenLabel((0, 12, 24), (0, 9, 27), 36)
    good.validate(p)
    assert good.varpi(p) == 0
    with pytest.raises(InvalidLabel):
        EigenLabel((0, 12, 24), (0, 9, 27), 72).validate(p)  # wrong order
    with pytest.raises(InvalidLabel):
        EigenLabel((0, 12, 24), (0, 9, 18), 36).validate(p)  # determinant
    with pytest.raises(InvalidLabel):
        EigenLabel((0, 12, 24), (3, 12, 21), 36).validate(p)  # ϖ mismatch
    with pytest.raises(InvalidLabel):
        EigenLabel((0, 12), (0, 9, 27), 36).validate(p)
    assert not EigenLabel((0, 1, 35), (0, 9, 27), 36).is_valid(p)
