from fractions import Fraction

import pytest

from liekit.builder import (BasisMismatch, extend_orthogonal, extend_symplectic,
                            extend_unitary, killing_form, so_table, sp_table,
                            su_table, verify_jacobi)
from liekit.exact import is_negative_definite, rank


def test_so_chain_from_so2():
    t = so_table(2)
    assert t.dim == 1 and not t.brackets
    for n in range(2, 9):       # seven extension steps
        t = extend_orthogonal(t, n)
        assert t.dim == (n + 1) * n // 2
    assert t.name == "so(9)"
    assert t.dim == 36


def test_so3_vector_bracket_lands_on_adjoint():
    t = extend_orthogonal(so_table(2), 2)
    assert t.dim == 3
    # [L_1_3, L_2_3] = -L_1_2: one component of magnitude 1 on the old generator
    comps = t.bracket(1, 2)
    assert len(comps) == 1 and comps[0][0] == 0 and abs(comps[0][1]) == 1


def test_extend_orthogonal_rejects_wrong_basis():
    bad = so_table(3)
    bad = type(bad)(bad.dim, bad.name, bad.basis_labels,
                    {(0, 1): ((2, Fraction(2)),)})
    with pytest.raises(BasisMismatch):
        extend_orthogonal(bad, 3)
    with pytest.raises(BasisMismatch):
        extend_orthogonal(so_table(4), 3)


def test_su_chain_dims():
    t = su_table(2)
    assert t.dim == 3
    t = extend_unitary(t, 2)
    assert t.dim == 8 and t.name == "su(3)"
    assert t.recipe.summands == (("adjoint", 3), ("u1", 1), ("vector-pair", 4))
    t = extend_unitary(t, 3)
    assert t.dim == 15   # su(4)
    t = extend_unitary(t, 4)
    assert t.dim == 24   # su(5)
    t = extend_unitary(t, 5)
    assert t.dim == 35   # su(6)


def test_sp_chain_dims():
    t = sp_table(1)
    assert t.dim == 3
    t = extend_symplectic(t, 1)
    assert t.dim == 10 and t.recipe.summands == (("adjoint", 3), ("sp1", 3), ("vector-pair", 4))
    t = extend_symplectic(t, 2)
    assert t.dim == 21
    assert t.recipe.summands == (("adjoint", 10), ("sp1", 3), ("vector-pair", 8))
    t = extend_symplectic(t, 3)
    assert t.dim == 36   # sp(4)


def test_extension_prefix_is_literal():
    small = su_table(3)
    big = su_table(4)
    small_range = set(range(small.dim))
    prefix = {k: v for k, v in big.brackets.items()
              if k[0] in small_range and k[1] in small_range}
    assert prefix == dict(small.brackets)


@pytest.mark.parametrize("table_fn,arg", [(so_table, 8), (su_table, 4), (sp_table, 3)])
def test_classical_tables_verify_and_compact(table_fn, arg):
    t = table_fn(arg)
    rep = verify_jacobi(t)
    assert rep.violations == 0
    assert rep.triples_checked == t.dim * (t.dim - 1) * (t.dim - 2) // 6
    k = killing_form(t)
    assert rank(k) == t.dim
    assert is_negative_definite(k)


def test_killing_form_su2():
    k = killing_form(su_table(2))
    assert k.is_symmetric()
    assert rank(k) == 3
    assert is_negative_definite(k)


def test_killing_form_abelian_is_zero():
    from liekit.builder.tables import StructureTable
    t = StructureTable(2, "abelian2", ("a", "b"), {})
    k = killing_form(t)
    assert k.nnz() == 0
