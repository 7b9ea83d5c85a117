"""Killing form Tr(ad x ad y), exact."""

from __future__ import annotations

from fractions import Fraction

import scipy.sparse as sp

from ..exact import SparseMatrix
from .tables import StructureTable, int_scaled_brackets
from .jacobi import _ad_matrices


def killing_form(table: StructureTable) -> SparseMatrix:
    """Symmetric dim x dim matrix K[i][j] = Tr(ad e_i ad e_j).

    Computed on the integer-scaled table: flatten each ad matrix, so the
    whole Gram of traces is one sparse product; divide by scale^2 at the
    end to return exact rationals.
    """
    dim = table.dim
    scale, br_int = int_scaled_brackets(table)
    ads = _ad_matrices(dim, br_int)
    if dim == 0:
        return SparseMatrix(0, 0, {})
    flat = sp.vstack([a.reshape(1, dim * dim) for a in ads], format="csr")
    flat_t = sp.vstack([a.T.reshape(1, dim * dim) for a in ads], format="csr")
    gram = (flat @ flat_t.T).tocoo()
    s2 = scale * scale
    entries = {}
    for r, c, v in zip(gram.row, gram.col, gram.data):
        if v:
            entries[(int(r), int(c))] = Fraction(int(v), s2)
    return SparseMatrix(dim, dim, entries)
