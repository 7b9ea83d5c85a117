from math import comb

import pytest

from liekit.builder import Unsupported, clifford, spin_wedge_decomposition
from liekit.builder.cliffords import compose_perms, gamma_product

EXPECTED_DIMS = {1: 1, 2: 2, 3: 4, 4: 8, 5: 8, 6: 16, 7: 16, 8: 16, 9: 16,
                 10: 32, 11: 64, 12: 128, 13: 128, 14: 256, 15: 256, 16: 256}


def perm_matrix_entries(perm):
    return {(row, col): s for col, (row, s) in enumerate(perm)}


@pytest.mark.parametrize("n", list(range(1, 17)))
def test_anticommutation_exhaustive(n):
    rep = clifford(n)
    d = rep.dim_spinor
    assert d == EXPECTED_DIMS[n]
    for i in range(n):
        # signed permutation: one nonzero per row and column, entries +-1
        rows = set()
        for col, (row, s) in enumerate(rep.gammas[i]):
            assert s in (-1, 1)
            rows.add(row)
        assert rows == set(range(d))
        for j in range(i, n):
            prod1 = compose_perms(rep.gammas[i], rep.gammas[j])
            prod2 = compose_perms(rep.gammas[j], rep.gammas[i])
            e1 = perm_matrix_entries(prod1)
            e2 = perm_matrix_entries(prod2)
            acc = {}
            for k, v in list(e1.items()) + list(e2.items()):
                acc[k] = acc.get(k, 0) + v
            expected = {(a, a): 2 for a in range(d)} if i == j else {}
            assert {k: v for k, v in acc.items() if v} == expected


def test_gammas_symmetric():
    for n in (4, 9, 12, 16):
        rep = clifford(n)
        for g in rep.gammas:
            entries = perm_matrix_entries(g)
            assert all(entries.get((c, r)) == v for (r, c), v in entries.items())


def test_chirality_squares_and_projector_ranks():
    r16 = clifford(16)
    assert r16.chirality_square == 1
    assert len(r16.plus_indices) == len(r16.minus_indices) == 128 == 2 ** (16 // 2 - 1)
    r12 = clifford(12)
    assert r12.chirality_square == 1
    assert len(r12.plus_indices) == 64
    r10 = clifford(10)
    assert r10.chirality_square == -1   # complex structure, no real split
    assert r10.plus_indices is None


def test_out_of_range():
    with pytest.raises(Unsupported):
        clifford(17)
    with pytest.raises(Unsupported):
        clifford(0)


def test_wedge_9():
    assert spin_wedge_decomposition(9) == [(2, 36), (3, 84)]


def test_wedge_9_total_is_wedge_of_16():
    total = sum(d for _, d in spin_wedge_decomposition(9))
    assert total == comb(16, 2) == 120


def test_wedge_16_half_spinor():
    comps = spin_wedge_decomposition(16)
    assert (2, 120) in comps
    assert comps == [(2, 120), (6, 8008)]
    assert sum(d for _, d in comps) == comb(128, 2)


def test_wedge_8_half_spinor():
    comps = spin_wedge_decomposition(8)
    assert comps == [(2, 28)]
    assert sum(d for _, d in comps) == comb(8, 2)


def test_gamma_product_of_distinct_indices_is_signed_perm():
    rep = clifford(9)
    prod = gamma_product(rep, [0, 1, 2])
    seen = set()
    for col, (row, s) in enumerate(prod):
        assert s in (-1, 1)
        seen.add(row)
    assert seen == set(range(16))
