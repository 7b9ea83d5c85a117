import random

import pytest

from liekit.kostant import (CapExceeded, NotEqualRank, equal_rank_pair, euler_number,
                            multiplets, pair_from_root_indices, preset_pair,
                            spin_split_under_u, u_subgroup_pair)
from liekit.rootsys import GroupId


def test_euler_f4_b4():
    p = preset_pair("F4", "B4")
    assert p.big.weyl_order == 1152
    assert p.small_weyl_order == 384
    assert euler_number(p) == 3


def test_euler_identity_pair():
    simple = [tuple(1 if j == i else 0 for j in range(4)) for i in range(4)]
    p = equal_rank_pair(GroupId("F", 4), simple)
    assert euler_number(p) == 1
    assert len(multiplets(p).entries) == 1


def test_euler_su5_u4():
    p = preset_pair("SU(5)", "U(4)")
    assert euler_number(p) == 5


def test_multiplet_f4_b4():
    m = multiplets(preset_pair("F4", "B4"))
    assert [(e.sign, e.dim) for e in m.entries] == [(1, 44), (-1, 128), (1, 84)]
    assert m.signed_sum() == 0
    assert m.unsigned_sum() == 256
    # tangent dimension 16 = dim F4 - dim Spin(9): 2^(16/2) = 256
    assert m.pair.big.dim - m.pair.small_dim == 16


def test_multiplet_su5_u4():
    m = multiplets(preset_pair("SU(5)", "U(4)"))
    assert [(e.sign, e.dim) for e in m.entries] == \
        [(1, 1), (-1, 4), (1, 6), (-1, 4), (1, 1)]
    assert m.signed_sum() == 0
    assert m.unsigned_sum() == 16
    charges = [e.charges[0] for e in m.entries]
    assert charges == sorted(charges, reverse=True)   # monotone U(1) grading


def test_multiplet_sp3():
    m = multiplets(preset_pair("Sp(3)", "Sp(1)xSp(2)"))
    assert len(m.entries) == euler_number(m.pair) == 3
    assert m.signed_sum() == 0
    assert m.unsigned_sum() == 2 ** ((21 - 13) // 2)


def test_entry_count_always_chi():
    for p in (preset_pair("F4", "B4"), preset_pair("SU(5)", "U(4)"),
              preset_pair("Sp(3)", "Sp(1)xSp(2)")):
        assert len(multiplets(p).entries) == euler_number(p)


def test_reordering_small_roots_is_canonicalized():
    base = preset_pair("F4", "B4")
    roots = list(base.small_simple_roots)
    rng = random.Random(7)
    for _ in range(3):
        rng.shuffle(roots)
        p = equal_rank_pair(GroupId("F", 4), roots)
        assert p.small_simple_roots == base.small_simple_roots
        assert multiplets(p).entries == multiplets(base).entries


def test_negative_roots_are_flipped():
    base = preset_pair("F4", "B4")
    roots = [tuple(-x for x in base.small_simple_roots[0])] + \
        list(base.small_simple_roots[1:])
    p = equal_rank_pair(GroupId("F", 4), roots)
    assert p.small_simple_roots == base.small_simple_roots


def test_spin_split_n4():
    assert spin_split_under_u(4) == [(0, 1, 1), (1, 4, -1), (2, 6, 1), (3, 4, -1), (4, 1, 1)]


def test_spin_split_n1():
    assert spin_split_under_u(1) == [(0, 1, 1), (1, 1, -1)]


@pytest.mark.parametrize("n", range(1, 13))
def test_spin_split_binomial_total(n):
    comps = spin_split_under_u(n)
    assert sum(d for _, d, _ in comps) == 2 ** n
    assert all(s == (1 if p % 2 == 0 else -1) for p, _, s in comps)


@pytest.mark.parametrize("n", range(3, 7))
def test_spin_split_cross_oracle_with_projective_space_multiplets(n):
    # the tangent-space spin module of SU(n+1)/U(n) is the Spin(2n) module
    # of the split; dims and signs must agree entry by entry
    m = multiplets(u_subgroup_pair(GroupId("A", n)))
    got = [(e.sign, e.dim) for e in m.entries]
    want = [(s, d) for _, d, s in spin_split_under_u(n)]
    assert got == want


def test_cap_exceeded_for_e8():
    simple = [tuple(1 if j == i else 0 for j in range(8)) for i in range(7)]
    p = equal_rank_pair(GroupId("E", 8), simple, torus=1)
    with pytest.raises(CapExceeded):
        multiplets(p)


def test_invalid_subgroups_rejected():
    with pytest.raises(NotEqualRank):
        equal_rank_pair(GroupId("F", 4), [(1, 0, 0, 0)])          # rank deficit
    with pytest.raises(NotEqualRank):
        equal_rank_pair(GroupId("F", 4), [(9, 9, 9, 9)] + [
            (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])            # not a root
    with pytest.raises(NotEqualRank):
        # alpha1 and alpha1+alpha2... a positive pairing pair is not simple
        equal_rank_pair(GroupId("A", 2), [(1, 0), (1, 1)])


def test_pair_from_root_indices():
    p = pair_from_root_indices(GroupId("A", 2), [0, 1])
    assert euler_number(p) == 1
    with pytest.raises(NotEqualRank):
        pair_from_root_indices(GroupId("A", 2), [99])
