"""Equal-rank subgroup machinery: Euler numbers as Weyl-order ratios and
the signed multiplets into which the tangent-space spin module of G/H
splits.

An equal-rank pair is specified by a simple system for H drawn from the
roots of G (plus a count of torus factors).  Enumerating the Weyl orbit
of the G-Weyl vector and keeping the strictly H-dominant points yields
exactly chi = |W(G)|/|W(H)| points; each gives one H-irrep with the sign
of its Weyl-element length parity.  The signed dimension sum vanishes and
the unsigned sum is 2^((dim G - dim H)/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

from .exact import DenseVector, SparseMatrix, kernel_basis, solve_linear
from .rootsys import (GroupId, RootSystem, build_root_system, classify_cartan,
                      parse_group, root_system_from_cartan, weyl_dim, weyl_orbit)

DEFAULT_ORBIT_CAP = 5_000_000


class NotEqualRank(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EqualRankPair:
    big: RootSystem
    small_simple_roots: tuple[tuple[int, ...], ...]   # roots of G, simple coords
    torus: int
    factors: tuple[tuple[RootSystem, tuple[int, ...]], ...]  # (factor, node positions)
    factor_names: tuple[str, ...]
    chi: int

    @property
    def small_weyl_order(self) -> int:
        w = 1
        for rs, _ in self.factors:
            w *= rs.weyl_order
        return w

    @property
    def small_dim(self) -> int:
        return sum(rs.dim for rs, _ in self.factors) + self.torus

    def describe_small(self) -> str:
        parts = list(self.factor_names) + ["U(1)"] * self.torus
        return " x ".join(parts) if parts else "T^0"


@dataclass(frozen=True)
class MultipletEntry:
    sign: int                       # (-1)^length
    length: int
    labels: tuple[int, ...]         # H Dynkin labels, in small-root order
    dim: int
    charges: tuple[Fraction, ...]   # torus charges of the H highest weight


@dataclass(frozen=True)
class Multiplet:
    pair: EqualRankPair
    entries: tuple[MultipletEntry, ...]

    @property
    def chi(self) -> int:
        return self.pair.chi

    def signed_sum(self) -> int:
        return sum(e.sign * e.dim for e in self.entries)

    def unsigned_sum(self) -> int:
        return sum(e.dim for e in self.entries)


def equal_rank_pair(big: GroupId | RootSystem, small_roots, torus: int = 0) -> EqualRankPair:
    """Validate and canonicalize a subgroup specification.

    Each small root must be a root of G (negatives are flipped); the set
    is sorted so that reordered specifications produce identical pairs.
    """
    rs = big if isinstance(big, RootSystem) else build_root_system(big)
    rank = rs.rank
    posset = set(rs.positive_roots)
    canon = []
    for root in small_roots:
        v = tuple(int(x) for x in root)
        if len(v) != rank:
            raise NotEqualRank("small root has wrong length")
        if v in posset:
            canon.append(v)
        elif tuple(-x for x in v) in posset:
            canon.append(tuple(-x for x in v))
        else:
            raise NotEqualRank(f"{v} is not a root of {rs.id}")
    canon = tuple(sorted(set(canon)))
    if len(canon) != len(small_roots):
        raise NotEqualRank("duplicate small roots")
    if len(canon) + torus != rank:
        raise NotEqualRank(
            f"{len(canon)} roots + {torus} torus factors != rank {rank}")
    mat = SparseMatrix(len(canon), rank,
                       {(i, j): v for i, row in enumerate(canon)
                        for j, v in enumerate(row) if v})
    if kernel_basis(mat.transpose()):
        raise NotEqualRank("small roots are linearly dependent")

    n = len(canon)
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            p = rs.coroot_pairing(_root_as_weight(rs, canon[i]), canon[j])
            if p.denominator != 1:
                raise NotEqualRank("non-integral root pairing")
            cartan[i][j] = int(p)
            if i != j and cartan[i][j] > 0:
                raise NotEqualRank("small roots are not a simple system "
                                   "(positive off-diagonal pairing)")
    comps = _components(cartan)
    factors = []
    names = []
    for nodes in comps:
        sub = [[cartan[i][j] for j in nodes] for i in nodes]
        frs = root_system_from_cartan(sub)
        gid = classify_cartan(sub)
        factors.append((frs, tuple(nodes)))
        names.append(str(gid) if gid else f"rank{len(nodes)}?")
    wh = 1
    for frs, _ in factors:
        wh *= frs.weyl_order
    if rs.weyl_order % wh:
        raise NotDivisible(f"|W(G)| = {rs.weyl_order} not divisible by |W(H)| = {wh}")
    return EqualRankPair(big=rs, small_simple_roots=canon, torus=torus,
                         factors=tuple(factors), factor_names=tuple(names),
                         chi=rs.weyl_order // wh)


def _root_as_weight(rs: RootSystem, root) -> tuple[int, ...]:
    """Fundamental-weight labels of a vector given in simple-root coords."""
    return tuple(sum(root[i] * rs.cartan[i][j] for i in range(rs.rank))
                 for j in range(rs.rank))


def _components(cartan) -> list[list[int]]:
    n = len(cartan)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        nodes = []
        while stack:
            i = stack.pop()
            nodes.append(i)
            for j in range(n):
                if not seen[j] and cartan[i][j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(nodes))
    return comps


def euler_number(pair: EqualRankPair) -> int:
    """chi = |W(G)| / |W(H)|, exact."""
    return pair.chi


def _torus_charge_weights(pair: EqualRankPair) -> list[tuple[Fraction, ...]]:
    """For each torus direction, the vector w with charge(v) = sum v_j w_j.

    The direction is a point z of the coweight space with beta(z) = 0 for
    all small roots; parameterized by t_a = alpha_a(z), the charge of a
    weight v (in fundamental labels) is v . w where A w = t.
    """
    rs = pair.big
    rank = rs.rank
    if not pair.torus:
        return []
    mat = SparseMatrix(len(pair.small_simple_roots), rank,
                       {(i, j): v for i, row in enumerate(pair.small_simple_roots)
                        for j, v in enumerate(row) if v})
    out = []
    amat = SparseMatrix(rank, rank,
                        {(i, j): rs.cartan[i][j] for i in range(rank)
                         for j in range(rank) if rs.cartan[i][j]})
    for t in kernel_basis(mat):
        # make primitive with positive leading entry
        den = lcm(*(x.denominator for x in t))
        ints = [x * den for x in t]
        g = 0
        for x in ints:
            g = gcd(g, int(x))
        if g:
            ints = [x / g for x in ints]
        lead = next(x for x in ints if x)
        if lead < 0:
            ints = [-x for x in ints]
        w = solve_linear(amat, DenseVector(ints))
        assert w is not None
        out.append(tuple(w))
    return out


def multiplets(pair: EqualRankPair, cap: int = DEFAULT_ORBIT_CAP) -> Multiplet:
    """All H-dominant points of the W(G)-orbit of rho_G, as signed H-irreps.

    Entry order: by Weyl-element length, then lexicographic H-labels.
    """
    rs = pair.big
    if rs.weyl_order > cap:
        raise CapExceeded(f"|W({rs.id})| = {rs.weyl_order} exceeds cap {cap}")
    charge_w = _torus_charge_weights(pair)
    entries = []
    for v, length in weyl_orbit(rs):
        hl = []
        ok = True
        for beta in pair.small_simple_roots:
            p = rs.coroot_pairing(v, beta)
            if p <= 0:
                ok = False
                break
            assert p.denominator == 1, "weight paired non-integrally with coroot"
            hl.append(int(p) - 1)
        if not ok:
            continue
        d = 1
        for frs, nodes in pair.factors:
            d *= weyl_dim(frs, tuple(hl[i] for i in nodes))
        charges = tuple(sum(Fraction(vv) * ww for vv, ww in zip(v, w)) for w in charge_w)
        entries.append(MultipletEntry(sign=-1 if length % 2 else 1, length=length,
                                      labels=tuple(hl), dim=d, charges=charges))
    entries.sort(key=lambda e: (e.length, e.labels))
    mult = Multiplet(pair=pair, entries=tuple(entries))
    assert len(entries) == pair.chi, \
        f"found {len(entries)} dominant points, expected chi = {pair.chi}"
    return mult


def spin_split_under_u(n: int) -> list[tuple[int, int, int]]:
    """The 2^n-dimensional spin module of Spin(2n) under U(n): all
    antisymmetric p-forms, graded by (-1)^p from the U(1) charge."""
    if not 1 <= n <= 12:
        raise ValueError("spin_split_under_u supports 1 <= n <= 12")
    return [(p, comb(n, p), 1 if p % 2 == 0 else -1) for p in range(n + 1)]


# --- named presets: the three projective planes ---------------------------

def _preset_f4_b4() -> EqualRankPair:
    return equal_rank_pair(GroupId("F", 4),
                           [(0, 1, 2, 2), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])


def _preset_a4_u4() -> EqualRankPair:
    return u_subgroup_pair(GroupId("A", 4))


def _preset_c3_c1c2() -> EqualRankPair:
    return equal_rank_pair(GroupId("C", 3),
                           [(2, 2, 1), (0, 1, 0), (0, 0, 1)])


def u_subgroup_pair(gid: GroupId) -> EqualRankPair:
    """U(n) inside SU(n+1) (type A_n): drop the last simple root, add the
    torus."""
    if gid.family != "A":
        raise NotEqualRank("u_subgroup_pair expects type A")
    r = gid.rank
    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r - 1)]
    return equal_rank_pair(gid, simple, torus=1)


_PRESETS = {
    ("F4", "B4"): _preset_f4_b4,
    ("F4", "SPIN(9)"): _preset_f4_b4,
    ("A4", "A3+T"): _preset_a4_u4,
    ("A4", "U(4)"): _preset_a4_u4,
    ("SU(5)", "U(4)"): _preset_a4_u4,
    ("C3", "C1XC2"): _preset_c3_c1c2,
    ("SP(3)", "SP(1)XSP(2)"): _preset_c3_c1c2,
    ("C3", "SP(1)XSP(2)"): _preset_c3_c1c2,
}


def preset_pair(big: str, small: str) -> EqualRankPair | None:
    key = (big.strip().upper().replace(" ", ""), small.strip().upper().replace(" ", ""))
    fn = _PRESETS.get(key)
    return fn() if fn else None


def pair_from_root_indices(big: GroupId, indices, torus: int = 0) -> EqualRankPair:
    """Subgroup given by 0-based indices into the positive-root list."""
    rs = build_root_system(big)
    roots = []
    for i in indices:
        if not 0 <= i < len(rs.positive_roots):
            raise NotEqualRank(f"root index {i} out of range")
        roots.append(rs.positive_roots[i])
    return equal_rank_pair(big, roots, torus=torus)
