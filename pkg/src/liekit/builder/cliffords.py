"""Real Clifford representations by signed permutation matrices.

clifford(n) returns n real sign-matrices with g_i g_j + g_j g_i =
2 delta_ij, at the smallest power-of-two dimension admitting them:

    n          1  2  3  4  5  6  7  8  9  10  11  12  13  14   15   16
    dim_spinor 1  2  4  8  8 16 16 16 16  32  64 128 128 256  256  256

For n <= 9 the generators come from a deterministic word search (for
n in 6..9 they are a prefix of one 16-dimensional set whose chirality
word is diagonal).  For n >= 10 the set is the graded product of the
(n-8)-set with the 8-set, which keeps the chirality diagonal — so for
n = 0 mod 4 the two half-spinor spaces are plain coordinate subspaces
and restriction never leaves the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import words as W


class Unsupported(ValueError):
    """Requested Clifford data outside the supported range."""


@dataclass(frozen=True)
class CliffordRep:
    n: int
    dim_spinor: int
    gammas: tuple  # tuple of signed perms: gamma[i][col] = (row, sign)
    chirality: tuple | None = None        # product g_1..g_n when n is even
    chirality_square: int | None = None   # +1 or -1
    plus_indices: tuple[int, ...] | None = None   # chirality +1 coordinates
    minus_indices: tuple[int, ...] | None = None

    def gamma_entry(self, i: int, row: int, col: int) -> int:
        r, s = self.gammas[i][col]
        return s if r == row else 0


@lru_cache(maxsize=None)
def _word_sets() -> dict[int, tuple[list[W.Word], int]]:
    """Gamma words for n = 1..16 plus the slot count k per n."""
    sets: dict[int, tuple[list[W.Word], int]] = {}
    sets[1] = ([(1, ())], 0)                      # the 1x1 matrix (1)
    sets[2] = ([(1, (1,)), (1, (2,))], 1)
    sets[3] = (W.anticommuting_set(2, 3), 2)
    five = W.anticommuting_set(3, 5, diagonal_extra=True)
    sets[4] = (five[1:], 3)                       # chirality = the diagonal member
    sets[5] = (five[1:] + five[:1], 3)
    nine = W.anticommuting_set(4, 9, diagonal_extra=True)
    for n in (6, 7, 8):
        sets[n] = (nine[1:1 + n], 4)
    sets[9] = (nine[1:] + nine[:1], 4)
    base8, k8 = sets[8]
    omega8 = base8[0]
    for g in base8[1:]:
        omega8 = W.word_mul(omega8, g)
    assert W.is_diagonal(omega8) and W.word_square_sign(omega8) == 1
    for n in range(10, 17):
        small, ks = sets[n - 8]
        gam = [W.word_tensor(a, omega8) for a in small] + \
              [W.word_tensor((1, (0,) * ks), b) for b in base8]
        sets[n] = (gam, ks + k8)
    return sets


@lru_cache(maxsize=None)
def clifford(n: int) -> CliffordRep:
    if not 1 <= n <= 16:
        raise Unsupported(f"clifford(n) supports 1 <= n <= 16, got {n}")
    gam_words, k = _word_sets()[n]
    dim = 1 << k
    perms = tuple(tuple(W.word_perm(g, k)) for g in gam_words)
    chi = chi_sq = plus = minus = None
    if n % 2 == 0:
        w = gam_words[0]
        for g in gam_words[1:]:
            w = W.word_mul(w, g)
        chi_sq = W.word_square_sign(w)
        chi = tuple(W.word_perm(w, k))
        if chi_sq == 1:
            assert all(r == c for c, (r, _) in enumerate(chi)), \
                "chirality must be diagonal for exact half-spinor projection"
            plus = tuple(c for c, (_, s) in enumerate(chi) if s == 1)
            minus = tuple(c for c, (_, s) in enumerate(chi) if s == -1)
    return CliffordRep(n=n, dim_spinor=dim, gammas=perms,
                       chirality=chi, chirality_square=chi_sq,
                       plus_indices=plus, minus_indices=minus)


def compose_perms(p, q):
    """Signed permutation product p*q (apply q, then p)."""
    return tuple((p[r][0], p[r][1] * s) for (r, s) in q)


def gamma_product(rep: CliffordRep, indices) -> tuple:
    out = rep.gammas[indices[0]]
    for i in indices[1:]:
        out = compose_perms(out, rep.gammas[i])
    return out


def restrict_perm(perm, keep: tuple[int, ...]):
    """Restrict a signed permutation to an invariant coordinate subspace."""
    pos = {c: u for u, c in enumerate(keep)}
    out = []
    for c in keep:
        r, s = perm[c]
        if r not in pos:
            raise ValueError("subspace not invariant")
        out.append((pos[r], s))
    return tuple(out)


def spin_wedge_decomposition(n: int, half_spinor: bool | None = None) -> list[tuple[int, int]]:
    """p-form components of the antisymmetric square of the spin module.

    A product of p distinct gammas is already antisymmetric in its
    indices, so each degree p contributes exactly when that product has a
    nonzero antisymmetric part on the module: for symmetric gammas that
    means p(p-1)/2 odd.  Degrees above n/2 repeat lower ones through the
    volume element and are not listed twice.  For even n the module is
    the positive half-spinor block (chirality +1) when it is a coordinate
    subspace; odd-p products swap the blocks and drop out.
    """
    rep = clifford(n)
    if half_spinor is None:
        half_spinor = n % 2 == 0
    if half_spinor and rep.plus_indices is None:
        raise Unsupported(f"n={n} has no real half-spinor split (chirality squares to -1)")
    out: list[tuple[int, int]] = []
    for p in range(2, n // 2 + 1):
        if (p * (p - 1) // 2) % 2 == 0:
            continue
        if 2 * p == n:
            # middle degree maps to its own dual; skip the double count
            continue
        if half_spinor:
            if p % 2:
                continue  # odd-degree products swap the two chirality blocks
            prod = gamma_product(rep, list(range(p)))
            keep = set(rep.plus_indices)
            assert all(prod[c][0] in keep for c in keep)
        out.append((p, comb(n, p)))
    return out
