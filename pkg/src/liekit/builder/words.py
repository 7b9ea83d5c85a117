"""Signed tensor words over the four real 2x2 blocks.

A word is a sign together with a tuple of factor codes, one 2x2 block
per tensor slot:

    0 = identity        1 = swap [[0,1],[1,0]]
    2 = diagonal flip [[1,0],[0,-1]]
    3 = antisymmetric [[0,-1],[1,0]]

Every word is a signed permutation matrix on R^(2^k).  Words multiply to
words, two words either commute or anticommute (decided slot by slot),
and a word squares to +1 exactly when its antisymmetric-block count is
even — in which case it is also a symmetric matrix.  That is all the
structure the Clifford constructions need.
"""

from __future__ import annotations

import itertools

Word = tuple[int, tuple[int, ...]]

# factor multiplication: (a, b) -> (sign, product code)
_MUL = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
    (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 1): (-1, 3),
    (1, 3): (1, 2), (3, 1): (-1, 2),
    (2, 3): (-1, 1), (3, 2): (1, 1),
}

# factor action on a basis index bit: code -> [(row, sign) for col 0, col 1]
_ACT = {0: ((0, 1), (1, 1)), 1: ((1, 1), (0, 1)), 2: ((0, 1), (1, -1)), 3: ((1, 1), (0, -1))}


def word_mul(u: Word, v: Word) -> Word:
    s = u[0] * v[0]
    out = []
    for a, b in zip(u[1], v[1]):
        t, c = _MUL[(a, b)]
        s *= t
        out.append(c)
    return (s, tuple(out))


def words_commute(u: Word, v: Word) -> bool:
    s = 1
    for a, b in zip(u[1], v[1]):
        if a and b and a != b:
            s = -s
    return s == 1


def word_square_sign(u: Word) -> int:
    return -1 if sum(1 for a in u[1] if a == 3) % 2 else 1


def is_diagonal(u: Word) -> bool:
    return all(a in (0, 2) for a in u[1])


def word_tensor(u: Word, v: Word) -> Word:
    return (u[0] * v[0], u[1] + v[1])


def word_perm(w: Word, k: int) -> list[tuple[int, int]]:
    """Signed permutation as a list: position col holds (row, sign)."""
    sgn, fac = w
    out = []
    for col in range(1 << k):
        row = 0
        s = sgn
        for t in range(k):
            bit = (col >> (k - 1 - t)) & 1
            r, sg = _ACT[fac[t]][bit]
            row = (row << 1) | r
            s *= sg
        out.append((row, s))
    return out


def anticommuting_set(k: int, n: int, diagonal_extra: bool = False) -> list[Word]:
    """Deterministic backtracking search for n pairwise-anticommuting
    words on k slots, each squaring to +1.

    With diagonal_extra the first member is forced diagonal (it then acts
    as the chirality of the remaining ones); callers split it off.
    Raises LookupError when no such set exists at this size.
    """
    pool = [(1, w) for w in itertools.product(range(4), repeat=k)
            if any(w) and word_square_sign((1, w)) == 1]
    if diagonal_extra:
        seeds = [[w] for w in pool if is_diagonal(w)]
    else:
        seeds = [[]]
    for seed in seeds:
        out = list(seed)

        def bt(start: int) -> bool:
            if len(out) == n:
                return True
            for i in range(start, len(pool)):
                w = pool[i]
                if all(not words_commute(w, u) for u in out):
                    out.append(w)
                    if bt(i + 1):
                        return True
                    out.pop()
            return False

        if bt(0):
            return out
    raise LookupError(f"no anticommuting set of size {n} on {k} slots")
