"""Sphere-structure topology reports.

The real homology of a compact simple group is that of a product of odd
spheres S^(2m+1), one per exponent m; the Poincare polynomial is the
expanded product of (1 + t^(2m+1)).  Torsion primes are not computed —
they are a reference table and are tagged as such wherever serialized.
Coset entries do exact dimension bookkeeping for the classical
projective-plane quotients and their complexified row.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .rootsys import GroupId, InvalidGroupId, build_root_system, parse_group


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class TopologyReport:
    id: GroupId
    sphere_dims: tuple[int, ...]
    poincare: tuple[int, ...]          # Betti numbers b_0 .. b_dim
    torsion_primes: frozenset[int]
    capicua_diffs: tuple[int, ...]
    capicua_palindrome: bool
    fibration_notes: tuple[str, ...]


def poincare_poly(gid: GroupId) -> tuple[int, ...]:
    """Coefficients of prod_i (1 + t^(2 m_i + 1)) over the exponents."""
    rs = build_root_system(gid)
    coeffs = [1]
    for m in rs.exponents:
        d = 2 * m + 1
        new = coeffs + [0] * d
        for i, c in enumerate(coeffs):
            new[i + d] += c
        coeffs = new
    return tuple(coeffs)


def capicua(gid: GroupId) -> tuple[tuple[int, ...], bool]:
    """First differences of the exponent list and their palindrome flag."""
    exps = build_root_system(gid).exponents
    diffs = tuple(b - a for a, b in zip(exps, exps[1:]))
    return diffs, diffs == diffs[::-1]


def torsion_primes(gid: GroupId) -> frozenset[int]:
    """Reference data (not computed): torsion primes of the compact
    simply connected group.  The unitary and symplectic series have none;
    2-torsion enters with the spin groups from Spin(7) on and G2; F4, E6,
    E7 add 3-torsion; E8 adds 5-torsion."""
    f, r = gid.family, gid.rank
    if f in ("A", "C"):
        return frozenset()
    if f == "B":                      # Spin(2r+1)
        return frozenset({2}) if 2 * r + 1 >= 7 else frozenset()
    if f == "D":                      # Spin(2r)
        return frozenset({2}) if 2 * r >= 7 else frozenset()
    if f == "G":
        return frozenset({2})
    if f in ("F",):
        return frozenset({2, 3})
    if f == "E":
        return frozenset({2, 3, 5}) if r == 8 else frozenset({2, 3})
    raise InvalidGroupId(gid.family)


# --- coset dimension bookkeeping -------------------------------------------

_TERM = re.compile(r"^(U|SU|O|SO|SPIN|SP)\((\d+)\)$", re.IGNORECASE)


def group_expr_dim(expr: str) -> int:
    """Dimension of a product expression like 'Spin(10)·U(1)', 'Sp(2)xSp(1)',
    'S[U(2)xU(4)]' (the S[...] form subtracts one trace direction)."""
    s = expr.strip().replace(" ", "")
    if s.upper().startswith("S[") and s.endswith("]"):
        return group_expr_dim(s[2:-1]) - 1
    total = 0
    for term in re.split(r"[×x·*]", s, flags=re.IGNORECASE):
        if not term:
            raise ValueError(f"empty factor in {expr!r}")
        total += _term_dim(term)
    return total


def _term_dim(term: str) -> int:
    t = term.strip()
    if t.upper() in ("T", "U(1)"):
        return 1
    m = _TERM.match(t)
    if m:
        kind, n = m.group(1).upper(), int(m.group(2))
        if kind == "U":
            return n * n
        if kind == "SU":
            return n * n - 1
        if kind in ("O", "SO", "SPIN"):
            return n * (n - 1) // 2
        if kind == "SP":
            return n * (2 * n + 1)
    try:
        return build_root_system(parse_group(t)).dim
    except InvalidGroupId:
        raise ValueError(f"cannot resolve group dimension of {term!r}") from None


@dataclass(frozen=True)
class CosetEntry:
    """One homogeneous-space row: big/small are group expressions (a
    Cartan label, classical name, or a x / · product of them)."""
    big: str
    small: str
    space_name: str
    space_dim: int


def coset_dim(entry: CosetEntry) -> int:
    """dim(big) - dim(small), cross-checked against the declared dim."""
    d = group_expr_dim(entry.big) - group_expr_dim(entry.small)
    if d != entry.space_dim:
        raise DimensionMismatch(
            f"{entry.space_name}: computed {d}, declared {entry.space_dim}")
    return d


def magic_square_entries() -> tuple[CosetEntry, ...]:
    """The projective-plane rows over R, C, H, O and their complexified
    second row (dimension bookkeeping only)."""
    return (
        CosetEntry("O(3)", "O(1)xO(2)", "RP2", 2),
        CosetEntry("U(3)", "U(2)xU(1)", "CP2", 4),
        CosetEntry("Sp(3)", "Sp(2)xSp(1)", "HP2", 8),
        CosetEntry("F4", "Spin(9)", "OP2", 16),
        CosetEntry("SU(3)", "U(2)", "CP2 (complexified R row)", 4),
        CosetEntry("SU(3)xSU(3)", "U(2)xU(2)", "(CP2)^2", 8),
        CosetEntry("SU(6)", "S[U(2)xU(4)]", "Gr(2,6; C)", 16),
        CosetEntry("E6", "Spin(10)xU(1)", "complexified OP2", 32),
    )


_FIBRATION_NOTES: dict[tuple[str, int], tuple[str, ...]] = {
    ("A", 1): ("SU(2) = Sp(1) = Spin(3) is exactly S^3",),
    ("A", 2): ("SU(2) -> SU(3) -> S^5 is principal; SU(3) is the unique "
               "non-trivial SU(2)-bundle over S^5 (twisted S^3 x S^5 product)",),
    ("B", 1): ("Spin(3) = Sp(1) = SU(2); no torsion",),
    ("B", 2): ("Spin(5) = Sp(2); no torsion",),
    ("D", 3): ("Spin(6) = SU(4); no torsion",),
    ("G", 2): ("SU(3) -> G2 -> S^6 over the unit imaginary octonions; the "
               "11-dimensional quotient is a Stiefel-like manifold with the "
               "real homology of S^11 and 2-torsion",),
    ("F", 4): ("2- and 3-torsion; the quotient by Spin(9) is the 16-dimensional "
               "projective plane with Euler number 3 (juxtaposition only, no "
               "causal claim about the 3-torsion)",),
}


def sphere_structure_report(gid: GroupId) -> TopologyReport:
    rs = build_root_system(gid)
    diffs, pal = capicua(gid)
    return TopologyReport(
        id=gid,
        sphere_dims=tuple(2 * m + 1 for m in rs.exponents),
        poincare=poincare_poly(gid),
        torsion_primes=torsion_primes(gid),
        capicua_diffs=diffs,
        capicua_palindrome=pal,
        fibration_notes=_FIBRATION_NOTES.get((gid.family, gid.rank), ()),
    )
