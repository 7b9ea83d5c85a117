"""Structure-constant tables and the classical inductive chains.

A StructureTable stores a Lie bracket on an indexed basis as a sparse
antisymmetric table: only pairs i < j are kept, every coefficient is an
exact Rational.  The orthogonal chain so(n) -> so(n+1) comes from the
standard generator formula; the unitary and symplectic chains are born
from explicit matrix realizations (antihermitian complex, antihermitian
quaternionic) with commutators expanded in a fixed inductive basis, so
each extension step literally contains the previous table as a prefix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np


Brackets = dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]


class BasisMismatch(ValueError):
    """Input table does not agree with the canonical basis it claims."""


@dataclass(frozen=True)
class BuildRecipe:
    """What a build assembled: the target, its summands, and the names of
    the bracket coefficients that were solved rather than prescribed."""
    target: str
    summands: tuple[tuple[str, int], ...]
    free_coefficients: tuple[str, ...] = ()

    @property
    def total_dim(self) -> int:
        return sum(d for _, d in self.summands)


@dataclass(frozen=True)
class StructureTable:
    """Sparse antisymmetric bracket table c_ij^k on an indexed basis."""
    dim: int
    name: str
    basis_labels: tuple[str, ...]
    brackets: Brackets = field(compare=True)
    recipe: BuildRecipe | None = field(default=None, compare=False)
    coefficients: tuple[tuple[str, Fraction], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.basis_labels) != self.dim:
            raise ValueError("label count != dim")
        clean: Brackets = {}
        for (i, j), comps in self.brackets.items():
            if not (0 <= i < j < self.dim):
                raise ValueError(f"bad bracket key ({i},{j})")
            kept = tuple(sorted((k, Fraction(c)) for k, c in comps if c))
            for k, _ in kept:
                if not 0 <= k < self.dim:
                    raise ValueError(f"bracket target {k} out of range")
            if kept:
                clean[(i, j)] = kept
        object.__setattr__(self, "brackets", clean)

    def bracket(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        """[e_i, e_j] with antisymmetry applied."""
        if i == j:
            return ()
        if i < j:
            return self.brackets.get((i, j), ())
        return tuple((k, -c) for k, c in self.brackets.get((j, i), ()))

    def nnz(self) -> int:
        return sum(len(c) for c in self.brackets.values())

    def relabel(self, name: str, labels: tuple[str, ...] | None = None) -> "StructureTable":
        return StructureTable(self.dim, name, labels or self.basis_labels,
                              dict(self.brackets), self.recipe, self.coefficients)


def int_scaled_brackets(table: StructureTable) -> tuple[int, dict[tuple[int, int], tuple[tuple[int, int], ...]]]:
    """Clear denominators: returns (scale, brackets with integer
    coefficients scale*c).  Integer arithmetic is what the Jacobi sweep
    and Killing form run on."""
    scale = 1
    for comps in table.brackets.values():
        for _, c in comps:
            scale = lcm(scale, c.denominator)
    out = {}
    for key, comps in table.brackets.items():
        out[key] = tuple((k, int(c * scale)) for k, c in comps)
    return scale, out


# ---------------------------------------------------------------------------
# orthogonal chain
# ---------------------------------------------------------------------------

def so_pairs(n: int) -> list[tuple[int, int]]:
    """Generator order groups by the larger index, so the so(n) basis is a
    literal prefix of the so(n+1) basis (the extension appends the vector
    generators L_{k,n+1})."""
    return [(i, j) for j in range(n) for i in range(j)]


def so_pair_bracket(p: tuple[int, int], q: tuple[int, int]) -> dict[tuple[int, int], int]:
    """[M_ab, M_cd] for M_ab = E_ab - E_ba:
    delta_bc M_ad + delta_ad M_bc - delta_ac M_bd - delta_bd M_ac."""
    (a, b), (c, d) = p, q
    out: dict[tuple[int, int], int] = {}

    def add(x, y, coef):
        if x == y:
            return
        if x > y:
            x, y, coef = y, x, -coef
        out[(x, y)] = out.get((x, y), 0) + coef

    if b == c:
        add(a, d, 1)
    if a == d:
        add(b, c, 1)
    if a == c:
        add(b, d, -1)
    if b == d:
        add(a, c, -1)
    return {k: v for k, v in out.items() if v}


def so_label(p: tuple[int, int]) -> str:
    return f"L_{p[0] + 1}_{p[1] + 1}"


def so_table(n: int) -> StructureTable:
    """so(n) on the L_i_j basis (all structure constants 0, +-1)."""
    if n < 2:
        raise ValueError("so(n) needs n >= 2")
    pairs = so_pairs(n)
    idx = {p: u for u, p in enumerate(pairs)}
    br: dict[tuple[int, int], list] = {}
    for u, p in enumerate(pairs):
        for v in range(u + 1, len(pairs)):
            comps = so_pair_bracket(p, pairs[v])
            if comps:
                br[(u, v)] = [(idx[r], Fraction(c)) for r, c in comps.items()]
    return StructureTable(len(pairs), f"so({n})", tuple(so_label(p) for p in pairs),
                          {k: tuple(v) for k, v in br.items()})


def extend_orthogonal(l: StructureTable, n: int) -> StructureTable:
    """so(n) -> so(n+1): adjoin the vector as generators L_k_{n+1}.

    The input must be so(n) on the canonical L basis; the output contains
    it verbatim as a prefix.
    """
    from .jacobi import JacobiFailure, verify_jacobi

    expected = so_table(n)
    if l.dim != expected.dim:
        raise BasisMismatch(f"input dim {l.dim} != dim so({n}) = {expected.dim}")
    if l.brackets != expected.brackets:
        raise BasisMismatch("input is not so(%d) on the canonical L basis" % n)
    out = so_table(n + 1)
    out = StructureTable(out.dim, out.name, out.basis_labels, dict(out.brackets),
                         recipe=BuildRecipe(f"so({n + 1})-step",
                                            (("adjoint", l.dim), ("vector", n))))
    # prefix invariant: the first dim(l) generators of so(n+1) are those of so(n)
    pairs_small = set(range(l.dim))
    prefix = {k: v for k, v in out.brackets.items()
              if k[0] in pairs_small and k[1] in pairs_small
              and all(t in pairs_small for t, _ in v)}
    if prefix != dict(l.brackets):
        raise BasisMismatch("extension did not preserve the so(%d) prefix" % n)
    report = verify_jacobi(out)
    if report.violations:
        raise JacobiFailure(report)
    return out


# ---------------------------------------------------------------------------
# matrix-born tables (unitary and symplectic chains)
# ---------------------------------------------------------------------------

def _realify_complex(re: np.ndarray, im: np.ndarray) -> np.ndarray:
    return np.block([[re, -im], [im, re]])


def _su_matrices(n: int) -> list[np.ndarray]:
    """Inductive basis of su(n), realified to 2n x 2n integer matrices.

    su(k+1) = su(k) ++ [i*diag(1,...,1,-k)] ++ [E_{a,k} - E_{k,a},
    i(E_{a,k} + E_{k,a}) for a < k]; the prefix property is what makes
    extend_unitary literally an extension.
    """
    def e(i, j, size):
        m = np.zeros((size, size), dtype=np.int64)
        m[i, j] = 1
        return m

    def pad(m_re, m_im, size):
        r = np.zeros((size, size), dtype=np.int64)
        i = np.zeros((size, size), dtype=np.int64)
        k = m_re.shape[0]
        r[:k, :k] = m_re
        i[:k, :k] = m_im
        return r, i

    basis: list[tuple[np.ndarray, np.ndarray]] = []
    for k in range(1, n):
        size = k + 1
        basis = [pad(re, im, size) for re, im in basis]
        z_im = np.zeros((size, size), dtype=np.int64)
        for a in range(k):
            z_im[a, a] = 1
        z_im[k, k] = -k
        basis.append((np.zeros((size, size), dtype=np.int64), z_im))
        for a in range(k):
            basis.append((e(a, k, size) - e(k, a, size), np.zeros((size, size), dtype=np.int64)))
            basis.append((np.zeros((size, size), dtype=np.int64), e(a, k, size) + e(k, a, size)))
    return [_realify_complex(re, im) for re, im in basis]


_Q_UNITS = {
    "1": np.eye(4, dtype=np.int64),
    "i": np.array([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=np.int64),
    "j": np.array([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=np.int64),
    "k": np.array([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=np.int64),
}


def _sp_matrices(n: int) -> list[np.ndarray]:
    """Inductive basis of sp(n) (antihermitian quaternionic), realified to
    4n x 4n integers: sp(k+1) = sp(k) ++ [i,j,k at the new diagonal slot]
    ++ [q E_{a,k} - conj(q) E_{k,a} for a < k, q in (1,i,j,k)]."""
    def place(block: np.ndarray, a: int, b: int, size: int) -> np.ndarray:
        m = np.zeros((4 * size, 4 * size), dtype=np.int64)
        m[4 * a:4 * a + 4, 4 * b:4 * b + 4] = block
        return m

    def pad(m: np.ndarray, size: int) -> np.ndarray:
        out = np.zeros((4 * size, 4 * size), dtype=np.int64)
        out[:m.shape[0], :m.shape[1]] = m
        return out

    basis: list[np.ndarray] = []
    for k in range(0, n):
        size = k + 1
        basis = [pad(m, size) for m in basis]
        for q in ("i", "j", "k"):
            basis.append(place(_Q_UNITS[q], k, k, size))
        for a in range(k):
            basis.append(place(_Q_UNITS["1"], a, k, size) - place(_Q_UNITS["1"], k, a, size))
            for q in ("i", "j", "k"):
                basis.append(place(_Q_UNITS[q], a, k, size) + place(_Q_UNITS[q], k, a, size))
    return basis


def _gram_inverse_rows(mats: list[np.ndarray]) -> list[list[Fraction]]:
    """Inverse of the trace Gram matrix, by Gauss-Jordan on [G | I]."""
    n = len(mats)
    g = [[Fraction(int(np.tensordot(mats[i], mats[j]))) for j in range(n)] for i in range(n)]
    aug = [row + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(g)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def table_from_matrices(mats: list[np.ndarray], name: str,
                        labels: tuple[str, ...] | None = None,
                        recipe: BuildRecipe | None = None) -> StructureTable:
    """Expand all pairwise commutators of an independent matrix basis in
    that basis; the expansion is checked to be exact, so the resulting
    table satisfies Jacobi by construction."""
    n = len(mats)
    ginv = _gram_inverse_rows(mats)
    br: Brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = mats[i] @ mats[j] - mats[j] @ mats[i]
            rhs = [Fraction(int(np.tensordot(mats[k], c))) for k in range(n)]
            coeffs = [sum(ginv[k][l] * rhs[l] for l in range(n) if rhs[l]) for k in range(n)]
            comps = tuple((k, v) for k, v in enumerate(coeffs) if v)
            if comps:
                den = lcm(*(v.denominator for _, v in comps))
                resid = c * den
                for k, v in comps:
                    resid = resid - int(v * den) * mats[k]
                if np.any(resid):
                    raise ArithmeticError(f"commutator [{i},{j}] not in basis span")
                br[(i, j)] = comps
            elif np.any(c):
                raise ArithmeticError(f"commutator [{i},{j}] not in basis span")
    labels = labels or tuple(f"T_{k + 1}" for k in range(n))
    return StructureTable(n, name, labels, br, recipe=recipe)


def su_table(n: int) -> StructureTable:
    """su(n) on the inductive T basis (dim n^2 - 1)."""
    if n < 1:
        raise ValueError("su(n) needs n >= 1")
    return table_from_matrices(_su_matrices(n), f"su({n})")


def sp_table(n: int) -> StructureTable:
    """sp(n) on the inductive T basis (dim n(2n+1))."""
    if n < 1:
        raise ValueError("sp(n) needs n >= 1")
    return table_from_matrices(_sp_matrices(n), f"sp({n})")


def _extend_matrix_chain(l: StructureTable, n: int, builder, family: str,
                         dim_of, recipe: BuildRecipe) -> StructureTable:
    from .jacobi import JacobiFailure, verify_jacobi

    if l.dim != dim_of(n):
        raise BasisMismatch(f"input dim {l.dim} != dim {family}({n}) = {dim_of(n)}")
    big = builder(n + 1)
    small_range = set(range(l.dim))
    prefix = {k: v for k, v in big.brackets.items()
              if k[0] in small_range and k[1] in small_range}
    expected = dict(l.brackets)
    if prefix != expected:
        raise BasisMismatch(f"input is not {family}({n}) on the canonical inductive basis")
    big = StructureTable(big.dim, big.name, big.basis_labels, dict(big.brackets),
                         recipe=recipe)
    report = verify_jacobi(big)
    if report.violations:
        raise JacobiFailure(report)
    return big


def extend_unitary(l: StructureTable, n: int) -> StructureTable:
    """su(n) -> su(n+1): adjoin the u(1) trace direction and the complex
    vector pair; dim (n^2-1) + 1 + 2n = (n+1)^2 - 1."""
    recipe = BuildRecipe(f"su({n + 1})-step",
                         (("adjoint", n * n - 1), ("u1", 1), ("vector-pair", 2 * n)))
    return _extend_matrix_chain(l, n, su_table, "su", lambda m: m * m - 1, recipe)


def extend_symplectic(l: StructureTable, n: int) -> StructureTable:
    """sp(n) -> sp(n+1): adjoin one sp(1) and the quaternionic vector;
    dim n(2n+1) + 3 + 4n = (n+1)(2n+3)."""
    recipe = BuildRecipe(f"sp({n + 1})-step",
                         (("adjoint", n * (2 * n + 1)), ("sp1", 3), ("vector-pair", 4 * n)))
    return _extend_matrix_chain(l, n, sp_table, "sp", lambda m: m * (2 * m + 1), recipe)
