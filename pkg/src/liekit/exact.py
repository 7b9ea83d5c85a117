"""Exact rational scalars and sparse exact linear algebra.

The only scalar type in the whole package is `Rational`
(= `fractions.Fraction`): arbitrary precision, always in lowest terms,
positive denominator.  Matrices are sparse maps from (row, col) to a
nonzero Rational.  Elimination is fraction-free (Bareiss) with the pivot
chosen as the first nonzero entry in row-major order, so every run is
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

Rational = Fraction


class NonSymmetric(ValueError):
    """Raised when a symmetric matrix was required."""


class SparseMatrix:
    """Immutable sparse matrix over the rationals.

    Entries are stored in a dict keyed by (row, col); zeros are never
    stored.  Iteration over `items()` is row-major regardless of
    insertion order.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], Rational | int]):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        clean = {}
        for (r, c), v in entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) outside {rows}x{cols}")
            v = Fraction(v)
            if v:
                clean[(r, c)] = v
        self.rows = rows
        self.cols = cols
        self._entries = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational | int]]) -> "SparseMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = Fraction(v)
        return cls(nr, nc, entries)

    def entry(self, r: int, c: int) -> Rational:
        return self._entries.get((r, c), Fraction(0))

    def items(self) -> list[tuple[tuple[int, int], Rational]]:
        return sorted(self._entries.items())

    def nnz(self) -> int:
        return len(self._entries)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows,
                            {(c, r): v for (r, c), v in self._entries.items()})

    def row_lists(self) -> list[dict[int, Rational]]:
        out: list[dict[int, Rational]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        for (r, c), v in self._entries.items():
            if self._entries.get((c, r)) != v:
                return False
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMatrix) and self.rows == other.rows
                and self.cols == other.cols and self._entries == other._entries)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


class DenseVector:
    """Immutable fixed-length vector of Rationals."""

    __slots__ = ("_comp",)

    def __init__(self, components: Iterable[Rational | int]):
        self._comp = tuple(Fraction(v) for v in components)

    def __len__(self) -> int:
        return len(self._comp)

    def __getitem__(self, i: int) -> Rational:
        return self._comp[i]

    def __iter__(self):
        return iter(self._comp)

    def __eq__(self, other) -> bool:
        if isinstance(other, DenseVector):
            return self._comp == other._comp
        return NotImplemented

    def __repr__(self) -> str:
        return f"DenseVector({list(self._comp)})"


def _integer_rows(m: SparseMatrix) -> list[dict[int, int]]:
    """Row dicts scaled row-wise to integers (row scaling preserves rank
    and row-space consistency questions)."""
    rows = m.row_lists()
    out = []
    for row in rows:
        if row:
            d = lcm(*(v.denominator for v in row.values()))
            out.append({c: int(v * d) for c, v in row.items()})
        else:
            out.append({})
    return out


def _bareiss_forward(rows: list[dict[int, int]], cols: int):
    """Fraction-free forward elimination.

    Returns (pivot list [(row, col)], eliminated rows).  Pivot selection:
    scan columns left to right, rows top to bottom, take the first
    nonzero — no magnitude heuristics, exact arithmetic needs none.
    """
    rows = [dict(r) for r in rows]
    nr = len(rows)
    pivots: list[tuple[int, int]] = []
    prev = 1
    r0 = 0
    for c in range(cols):
        piv = None
        for r in range(r0, nr):
            if rows[r].get(c):
                piv = r
                break
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        pr = rows[r0]
        p = pr[c]
        for r in range(r0 + 1, nr):
            row = rows[r]
            f = row.get(c)
            if f:
                new = {}
                for cc in set(row) | set(pr):
                    if cc < c:
                        v = row.get(cc)
                        if v:
                            new[cc] = v
                        continue
                    v = (p * row.get(cc, 0) - f * pr.get(cc, 0))
                    if v:
                        q, rem = divmod(v, prev)
                        assert rem == 0, "Bareiss exact-division invariant broken"
                        new[cc] = q
                rows[r] = new
            else:
                if prev != 1 or p != 1:
                    new = {}
                    for cc, v in row.items():
                        if cc < c:
                            new[cc] = v
                        else:
                            q, rem = divmod(p * v, prev)
                            assert rem == 0
                            if q:
                                new[cc] = q
                    rows[r] = new
        pivots.append((r0, c))
        prev = p
        r0 += 1
        if r0 == nr:
            break
    return pivots, rows


def rank(m: SparseMatrix) -> int:
    """Exact rank over the rationals via fraction-free elimination."""
    pivots, _ = _bareiss_forward(_integer_rows(m), m.cols)
    return len(pivots)


def is_negative_definite(m: SparseMatrix) -> bool:
    """Sylvester check: leading principal minors alternate in sign
    starting negative.  Implemented as a pivoted LDL sweep — the k-th
    pivot equals minor_k / minor_{k-1}, so the criterion is exactly
    "every pivot negative"; a zero pivot means a zero minor and fails.
    """
    if not m.is_symmetric():
        raise NonSymmetric(f"{m.rows}x{m.cols} matrix is not symmetric")
    rows = m.row_lists()
    n = m.rows
    for k in range(n):
        piv = rows[k].get(k, Fraction(0))
        if piv >= 0:
            return False
        # row k's trailing entries; by symmetry they index the rows to update
        rk = [(c, v) for c, v in rows[k].items() if c > k]
        for i, vik in rk:
            fi = vik / piv
            ri = rows[i]
            for j, vkj in rk:
                nv = ri.get(j, Fraction(0)) - fi * vkj
                if nv:
                    ri[j] = nv
                else:
                    ri.pop(j, None)
    return True


def solve_linear(a: SparseMatrix, b: DenseVector) -> DenseVector | None:
    """One exact solution of a·x = b, or None when the system is
    inconsistent.  Fraction-free forward elimination on the augmented
    matrix (the rhs column never hosts a pivot), rational back
    substitution; free variables are set to zero, so the answer is
    deterministic."""
    if len(b) != a.rows:
        raise ValueError("rhs length != row count")
    bcol = a.cols
    aug_rows: list[dict[int, int]] = []
    for r, row in enumerate(a.row_lists()):
        d = dict(row)
        if b[r]:
            d[bcol] = b[r]
        if d:
            scale = lcm(*(Fraction(v).denominator for v in d.values()))
            d = {c: int(Fraction(v) * scale) for c, v in d.items()}
        aug_rows.append(d)
    pivots, rows = _bareiss_forward(aug_rows, a.cols)
    pivot_rows = {pr for pr, _ in pivots}
    for r, row in enumerate(rows):
        if r not in pivot_rows and row.get(bcol):
            return None
    x = [Fraction(0)] * a.cols
    for pr, pc in reversed(pivots):
        row = rows[pr]
        s = Fraction(row.get(bcol, 0))
        for cc, v in row.items():
            if cc != pc and cc != bcol:
                s -= Fraction(v) * x[cc]
        x[pc] = s / row[pc]
    return DenseVector(x)


def kernel_basis(a: SparseMatrix) -> list[DenseVector]:
    """Basis of the exact nullspace of a, one vector per free column."""
    pivots, rows = _bareiss_forward(_integer_rows(a), a.cols)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(a.cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * a.cols
        x[fc] = Fraction(1)
        for (pr, pc) in reversed(pivots):
            row = rows[pr]
            s = Fraction(0)
            for cc, v in row.items():
                if cc != pc:
                    s -= Fraction(v) * x[cc]
            x[pc] = s / row[pc]
        basis.append(DenseVector(x))
    return basis
