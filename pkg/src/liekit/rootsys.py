"""Abstract root systems for the simple types A-G.

Everything is integer combinatorics in the simple-root basis: positive
roots by string closure, exponents as the dual partition of the height
histogram, Weyl orders as products of degrees, and the Weyl dimension
formula evaluated with exact fractions.  Node numbering follows the
Bourbaki convention throughout; every consumer that serializes results
tags them with that convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

FAMILIES = "ABCDEFG"


class InvalidGroupId(ValueError):
    """Family/rank combination that does not name a compact simple group."""


class NonIntegerResult(ArithmeticError):
    """Weyl dimension formula produced a non-integer (internal bug)."""


@dataclass(frozen=True, order=True)
class GroupId:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in FAMILIES:
            raise InvalidGroupId(f"unknown family {f!r}")
        if r < 1:
            raise InvalidGroupId("rank must be positive")
        if f == "E" and r not in (6, 7, 8):
            raise InvalidGroupId("E requires rank 6, 7 or 8")
        if f == "F" and r != 4:
            raise InvalidGroupId("F requires rank 4")
        if f == "G" and r != 2:
            raise InvalidGroupId("G requires rank 2")
        if f == "D" and r < 2:
            raise InvalidGroupId("D requires rank >= 2")

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_group(name: str) -> GroupId:
    """Parse a Cartan label (F4, D8) or a classical name (SO(16), SU(5),
    Sp(3), Spin(9))."""
    s = name.strip()
    low = s.lower().replace(" ", "")
    if low.startswith("u(") and low.endswith(")"):
        raise InvalidGroupId(
            f"{name!r} is not simple; use SU(n) for the A-type part — U(n) "
            "subgroups are handled as A-type plus a torus factor")
    for prefix, to_id in (
        ("so(", _orthogonal_id), ("spin(", _orthogonal_id),
        ("su(", lambda n: GroupId("A", n - 1)), ("sp(", lambda n: GroupId("C", n)),
    ):
        if low.startswith(prefix) and low.endswith(")"):
            n = int(low[len(prefix):-1])
            return to_id(n)
    if len(s) >= 2 and s[0].upper() in FAMILIES:
        try:
            return GroupId(s[0].upper(), int(s[1:]))
        except ValueError as e:
            raise InvalidGroupId(f"cannot parse group {name!r}") from e
    raise InvalidGroupId(f"cannot parse group {name!r}")


def _orthogonal_id(n: int) -> GroupId:
    if n % 2:
        if n < 3:
            raise InvalidGroupId(f"SO({n}) is not simple")
        return GroupId("B", (n - 1) // 2)
    if n < 6:
        raise InvalidGroupId(f"SO({n}) is not simple (use Spin(3)=Sp(1) etc.)")
    return GroupId("D", n // 2)


def cartan_matrix(gid: GroupId) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix; entry [i][j] = <alpha_i, alpha_j-coroot>."""
    f, r = gid.family, gid.rank
    if f == "D" and r == 2:
        raise InvalidGroupId("D2 = A1 x A1 is not simple")
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def chain(nodes):
        for u, v in zip(nodes, nodes[1:]):
            a[u][v] = a[v][u] = -1

    if f in "ABC":
        chain(list(range(r)))
        if f == "B" and r >= 2:
            a[r - 2][r - 1] = -2        # last node short
        if f == "C" and r >= 2:
            a[r - 1][r - 2] = -2        # last node long
    elif f == "D":
        chain(list(range(r - 1)))
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    elif f == "E":
        chain([0, 2, 3, 4, 5, 6, 7][: r - 1])
        a[1][3] = a[3][1] = -1
    elif f == "F":
        chain([0, 1, 2, 3])
        a[1][2] = -2                    # nodes 0,1 long; 2,3 short
    elif f == "G":
        a[0][1] = -1                    # node 0 short, node 1 long
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def root_lengths(cartan) -> tuple[int, ...]:
    """Minimal positive integers L with A[i][j]*L[j] = A[j][i]*L[i]
    (squared root lengths up to one overall scale per component)."""
    r = len(cartan)
    L: list[Fraction | None] = [None] * r
    for start in range(r):
        if L[start] is not None:
            continue
        L[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if i != j and cartan[i][j] and L[j] is None:
                    L[j] = L[i] * Fraction(cartan[j][i], cartan[i][j])
                    stack.append(j)
    denom = 1
    for v in L:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in L]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class Weight:
    """Dominant-chamber coordinates: Dynkin labels in the fundamental-weight basis."""
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(v) for v in self.labels))
        if any(v < 0 for v in self.labels):
            raise ValueError("Dynkin labels must be nonnegative")


@dataclass(frozen=True)
class RootSystem:
    """All derived data of one finite root system.

    positive_roots are integer coordinate vectors in the simple-root
    basis, sorted by (height, lexicographic); rho is the Weyl vector,
    all ones in fundamental-weight coordinates.
    """
    id: GroupId | None
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rho: tuple[int, ...]
    exponents: tuple[int, ...]
    degrees: tuple[int, ...]
    weyl_order: int
    coxeter_number: int
    highest_root: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def coroot_pairing(self, labels, root) -> Fraction:
        """<v, beta-coroot> for v in fundamental-weight labels and beta a
        root in simple coordinates."""
        num = sum(c * v * l for c, v, l in zip(root, labels, self.lengths))
        den = self.root_norm(root)
        return Fraction(2 * num, den)

    def root_norm(self, root) -> int:
        """2*(beta,beta) in the integer normalization of `lengths`."""
        tot = 0
        for i, ci in enumerate(root):
            if ci:
                for j, cj in enumerate(root):
                    if cj:
                        tot += ci * cj * self.cartan[i][j] * self.lengths[j]
        return tot

    def reflect(self, labels: tuple[int, ...], i: int) -> tuple[int, ...]:
        """Simple reflection s_i acting on fundamental-weight labels."""
        li = labels[i]
        if not li:
            return labels
        row = self.cartan[i]
        return tuple(v - li * row[j] for j, v in enumerate(labels))


def _positive_roots(cartan) -> list[tuple[int, ...]]:
    r = len(cartan)
    simple = [tuple(1 if i == j else 0 for j in range(r)) for i in range(r)]
    roots = set(simple)
    level = simple
    while level:
        nxt = []
        for beta in level:
            for j in range(r):
                pairing = sum(beta[i] * cartan[i][j] for i in range(r) if beta[i])
                # length p of the alpha_j-string below beta
                p = 0
                cur = beta
                while True:
                    cur = tuple(v - (1 if i == j else 0) for i, v in enumerate(cur))
                    if cur in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = tuple(v + (1 if i == j else 0) for i, v in enumerate(beta))
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        level = nxt
    return sorted(roots, key=lambda v: (sum(v), v))


def _exponents_from_heights(roots) -> tuple[int, ...]:
    hist: dict[int, int] = {}
    for v in roots:
        h = sum(v)
        hist[h] = hist.get(h, 0) + 1
    parts = [hist[h] for h in sorted(hist)]
    # heights histogram is a partition; its dual partition lists the exponents
    exps = [sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1)]
    return tuple(sorted(exps))


def root_system_from_cartan(cartan, gid: GroupId | None = None) -> RootSystem:
    """Build every derived field from a valid Cartan matrix (used both for
    the named simple types and for equal-rank subsystems)."""
    cartan = tuple(tuple(int(v) for v in row) for row in cartan)
    r = len(cartan)
    for i, row in enumerate(cartan):
        if len(row) != r or row[i] != 2:
            raise InvalidGroupId("malformed Cartan matrix")
    roots = _positive_roots(cartan)
    exps = _exponents_from_heights(roots)
    degrees = tuple(m + 1 for m in exps)
    order = 1
    for d in degrees:
        order *= d
    dim = r + 2 * len(roots)
    if (dim - r) % r == 0:
        cox = (dim - r) // r
    else:
        cox = max(exps) + 1  # non-simple subsystems need not satisfy the ratio
    rho = tuple([1] * r)
    rs = RootSystem(
        id=gid, cartan=cartan, lengths=root_lengths(cartan),
        positive_roots=tuple(roots), rho=rho, exponents=exps, degrees=degrees,
        weyl_order=order, coxeter_number=cox, highest_root=roots[-1],
    )
    if gid is not None:
        assert sum(exps) == len(roots), "exponent sum != positive root count"
        assert cox * r == dim - r, "Coxeter number mismatch"
    return rs


_CACHE: dict[GroupId, RootSystem] = {}


def build_root_system(gid: GroupId) -> RootSystem:
    if gid not in _CACHE:
        _CACHE[gid] = root_system_from_cartan(cartan_matrix(gid), gid)
    return _CACHE[gid]


def exponents_of(rs: RootSystem) -> tuple[int, ...]:
    return rs.exponents


def weyl_order_of(rs: RootSystem) -> int:
    return rs.weyl_order


def weyl_dim(rs: RootSystem, w: Weight | tuple[int, ...]) -> int:
    """Dimension of the irrep with highest weight w (Dynkin labels) via
    the Weyl product over positive roots, computed exactly."""
    labels = w.labels if isinstance(w, Weight) else tuple(w)
    if len(labels) != rs.rank:
        raise ValueError("label count != rank")
    num = 1
    den = 1
    for root in rs.positive_roots:
        a = 0
        b = 0
        for j, c in enumerate(root):
            if c:
                cl = c * rs.lengths[j]
                a += cl * (labels[j] + 1)
                b += cl
        num *= a
        den *= b
    q, rem = divmod(num, den)
    if rem:
        raise NonIntegerResult(f"Weyl formula gave {num}/{den}")
    return q


def fundamental_dims(gid: GroupId) -> tuple[int, ...]:
    """weyl_dim of each fundamental weight, in Bourbaki node order."""
    rs = build_root_system(gid)
    out = []
    for i in range(rs.rank):
        out.append(weyl_dim(rs, tuple(1 if j == i else 0 for j in range(rs.rank))))
    return tuple(out)


def adjoint_weight(rs: RootSystem) -> tuple[int, ...]:
    """Dynkin labels of the highest root."""
    theta = rs.highest_root
    return tuple(sum(theta[i] * rs.cartan[i][j] for i in range(rs.rank))
                 for j in range(rs.rank))


def weyl_orbit(rs: RootSystem, start: tuple[int, ...] | None = None, cap: int | None = None):
    """BFS over the Weyl orbit of a weight (default: rho).

    Yields (labels, length) where length is the word length of the group
    element mapping the start point to this one; for a regular start the
    orbit is in bijection with the Weyl group.
    """
    v0 = tuple(start) if start is not None else rs.rho
    seen = {v0}
    frontier = [v0]
    depth = 0
    while frontier:
        for v in frontier:
            yield v, depth
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                w = rs.reflect(v, i)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if cap is not None and len(seen) > cap:
                        raise OverflowError(f"Weyl orbit exceeds cap {cap}")
        frontier = nxt
        depth += 1


def weyl_orbit_size(rs: RootSystem, cap: int = 10_000_000) -> int:
    """Brute-force |W| as the orbit size of the (regular) Weyl vector."""
    return sum(1 for _ in weyl_orbit(rs, cap=cap))


def classify_cartan(cartan) -> GroupId | None:
    """Identify a Cartan matrix as a simple type up to node permutation."""
    r = len(cartan)
    candidates = []
    for fam in FAMILIES:
        try:
            candidates.append(GroupId(fam, r))
        except InvalidGroupId:
            continue
    target = tuple(tuple(row) for row in cartan)
    for gid in candidates:
        try:
            ref = cartan_matrix(gid)
        except InvalidGroupId:
            continue
        if _cartan_isomorphic(target, ref):
            return gid
    return None


def _cartan_isomorphic(a, b) -> bool:
    r = len(a)
    if len(b) != r:
        return False

    def sig(m, i):
        return tuple(sorted((m[i][j], m[j][i]) for j in range(r) if j != i and m[i][j]))

    sig_a = [sig(a, i) for i in range(r)]
    sig_b = [sig(b, i) for i in range(r)]
    if sorted(sig_a) != sorted(sig_b):
        return False
    perm: list[int | None] = [None] * r
    used = [False] * r

    def bt(i):
        if i == r:
            return True
        for j in range(r):
            if used[j] or sig_b[j] != sig_a[i]:
                continue
            ok = True
            for i2 in range(i):
                j2 = perm[i2]
                if a[i][i2] != b[j][j2] or a[i2][i] != b[j2][j]:
                    ok = False
                    break
            if ok:
                perm[i] = j
                used[j] = True
                if bt(i + 1):
                    return True
                perm[i] = None
                used[j] = False
        return False

    return bt(0)
