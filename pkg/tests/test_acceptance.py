"""Acceptance suite: one test per criterion, each printing a PASS line
with its measured numbers.  Run with `pytest tests/test_acceptance.py -v -s`.

Budgets are asserted where stated: table assembly under 1 s per target
(excluding the Jacobi sweep), sweeps under 0.1 s / 5 s / 600 s for
G2 / F4 / E8, multiplets under 10 s each, primitive-irrep dimensions
under 30 s total.
"""

import time
from math import comb, gcd

import pytest

from liekit.builder import (assemble_exceptional, dump_table,
                            extend_orthogonal, extend_symplectic, extend_unitary,
                            killing_form, load_table, so_table, sp_table, su_table,
                            spin_wedge_decomposition, verify_jacobi)
from liekit.exact import is_negative_definite, rank
from liekit.kostant import euler_number, multiplets, preset_pair
from liekit.rootsys import (GroupId, build_root_system, fundamental_dims,
                            weyl_orbit_size)
from liekit.topol import capicua, coset_dim, magic_square_entries, poincare_poly, torsion_primes

from test_rootsys import all_simple_ids


def ok(n, msg):
    print(f"\nACCEPTANCE {n:2d}: PASS - {msg}")


EXPECTED_SUMMANDS = {
    "F4": (52, (36, 16)),
    "E6": (78, (45, 1, 32)),
    "E7": (133, (66, 3, 64)),
    "E8": (248, (120, 128)),
    "G2": (14, (8, 3, 3)),
}


def test_criterion_01_dimension_balances():
    times = {}
    for name, (dim, summands) in EXPECTED_SUMMANDS.items():
        t0 = time.perf_counter()
        table = assemble_exceptional(name)
        times[name] = time.perf_counter() - t0
        assert table.dim == dim, name
        assert tuple(d for _, d in table.recipe.summands) == summands, name
        assert sum(summands) == dim
        assert times[name] < 1.0, f"{name} assembly took {times[name]:.2f}s"
    ok(1, "dims 52/78/133/248/14 with summands (36,16),(45,1,32),(66,3,64),"
          f"(120,128),(8,3,3); assembly s: " +
       " ".join(f"{k}={v:.2f}" for k, v in times.items()))


def test_criterion_02_jacobi_sweeps(exceptional):
    budgets = {"G2": 0.1, "F4": 5.0, "E6": 600.0, "E7": 600.0, "E8": 600.0}
    times = {}
    for name in ("G2", "F4", "E6", "E7", "E8"):
        table = assemble_exceptional(name)
        t0 = time.perf_counter()
        report = verify_jacobi(table, workers=1)
        times[name] = time.perf_counter() - t0
        assert report.violations == 0, name
        assert report.triples_checked == comb(table.dim, 3)
        assert times[name] < budgets[name], f"{name} sweep {times[name]:.2f}s"
    # identical report with 8 workers
    table = assemble_exceptional("E8")
    base = verify_jacobi(table, workers=1)
    par = verify_jacobi(table, workers=8)
    assert (base.dim, base.triples_checked, base.violations, base.first_violation) == \
           (par.dim, par.triples_checked, par.violations, par.first_violation)
    # classical inductive steps up to so(10), su(6), sp(4)
    t = so_table(2)
    for n in range(2, 10):
        t = extend_orthogonal(t, n)           # verifies internally
    assert t.dim == 45
    t = su_table(1)
    for n in range(1, 6):
        t = extend_unitary(t, n)
    assert t.dim == 35
    t = sp_table(1)
    for n in range(1, 4):
        t = extend_symplectic(t, n)
    assert t.dim == 36
    ok(2, "0 violations everywhere; sweep s: " +
       " ".join(f"{k}={v:.2f}" for k, v in times.items()) +
       "; E8 x8 workers identical; chains so(10)/su(6)/sp(4) verified")


def test_criterion_03_killing_forms():
    checked = []
    for name in ("G2", "F4", "E6", "E7", "E8"):
        table = assemble_exceptional(name)
        k = killing_form(table)
        assert rank(k) == table.dim, name
        assert is_negative_definite(k), name
        checked.append(name)
    for table in (so_table(10), su_table(6), sp_table(4)):
        k = killing_form(table)
        assert rank(k) == table.dim
        assert is_negative_definite(k)
        checked.append(table.name)
    ok(3, "negative definite + full rank: " + " ".join(checked))


def test_criterion_04_spin_wedge():
    comps = spin_wedge_decomposition(9)
    assert comps == [(2, 36), (3, 84)]
    ok(4, "wedge of the 16-spinor = (2-form, 36) + (3-form, 84)")


def test_criterion_05_exponents():
    assert build_root_system(GroupId("E", 6)).exponents == (1, 4, 5, 7, 8, 11)
    assert build_root_system(GroupId("E", 7)).exponents == (1, 5, 7, 9, 11, 13, 17)
    coprimes = tuple(m for m in range(1, 30) if gcd(m, 30) == 1)
    assert build_root_system(GroupId("E", 8)).exponents == coprimes
    ok(5, "E6/E7 exponent lists exact; E8 = coprimes to 30 below 30")


def test_criterion_06_capicua():
    assert capicua(GroupId("E", 6)) == ((3, 1, 2, 1, 3), True)
    assert capicua(GroupId("E", 7)) == ((4, 2, 2, 2, 2, 4), True)
    for gid in all_simple_ids(8):
        assert capicua(gid)[1], gid
    ok(6, "difference sequences (3,1,2,1,3)/(4,2,2,2,2,4); palindrome for all rank <= 8")


def test_criterion_07_weyl_orders_and_euler():
    assert build_root_system(GroupId("F", 4)).weyl_order == 1152
    assert build_root_system(GroupId("B", 4)).weyl_order == 384
    assert euler_number(preset_pair("F4", "B4")) == 3
    assert euler_number(preset_pair("SU(5)", "U(4)")) == 5
    ok(7, "|W(F4)|=1152, |W(B4)|=384, chi(F4/B4)=3, chi(SU(5)/U(4))=5")


def test_criterion_08_kostant_multiplets():
    t0 = time.perf_counter()
    m1 = multiplets(preset_pair("F4", "B4"))
    t1 = time.perf_counter() - t0
    assert [(e.sign, e.dim) for e in m1.entries] == [(1, 44), (-1, 128), (1, 84)]
    assert m1.signed_sum() == 0 and m1.unsigned_sum() == 256
    assert t1 < 10.0
    t0 = time.perf_counter()
    m2 = multiplets(preset_pair("SU(5)", "U(4)"))
    t2 = time.perf_counter() - t0
    assert [(e.sign, e.dim) for e in m2.entries] == \
        [(1, 1), (-1, 4), (1, 6), (-1, 4), (1, 1)]
    assert m2.signed_sum() == 0 and m2.unsigned_sum() == 16
    assert t2 < 10.0
    ok(8, f"(+44,-128,+84) and (+1,-4,+6,-4,+1); sums 0/256 and 0/16; "
          f"{t1:.2f}s / {t2:.2f}s")


def test_criterion_09_primitive_irreps():
    t0 = time.perf_counter()
    assert set(fundamental_dims(GroupId("G", 2))) == {7, 14}
    assert set(fundamental_dims(GroupId("F", 4))) == {26, 52, 273, 1274}
    assert set(fundamental_dims(GroupId("E", 6))) >= {27, 78, 351, 2925}
    assert set(fundamental_dims(GroupId("E", 7))) >= \
        {56, 133, 912, 1539, 8645, 27664, 365750}
    assert set(fundamental_dims(GroupId("E", 8))) >= {248, 3875, 147250}
    dt = time.perf_counter() - t0
    assert dt < 30.0
    ok(9, f"fundamental dims of G2/F4/E6/E7/E8 reproduce the lists ({dt:.2f}s)")


def test_criterion_10_poincare_polys():
    def prod(*degs):
        coeffs = [1]
        for d in degs:
            new = coeffs + [0] * d
            for i, c in enumerate(coeffs):
                new[i + d] += c
            coeffs = new
        return tuple(coeffs)

    assert poincare_poly(GroupId("G", 2)) == prod(3, 11)
    assert poincare_poly(GroupId("A", 2)) == prod(3, 5)
    for gid in all_simple_ids(8):
        poly = poincare_poly(gid)
        rs = build_root_system(gid)
        assert len(poly) - 1 == rs.dim and sum(poly) == 2 ** rs.rank, gid
    ok(10, "G2=(1+t^3)(1+t^11), SU(3)=(1+t^3)(1+t^5); degree=dim and "
           "coefficient sum=2^rank for all rank <= 8")


def test_criterion_11_torsion_reference():
    for r in range(1, 9):
        assert torsion_primes(GroupId("A", r)) == frozenset()
        assert torsion_primes(GroupId("C", r)) == frozenset()
    assert torsion_primes(GroupId("G", 2)) == {2}
    for r in range(3, 9):
        assert torsion_primes(GroupId("B", r)) == {2}
    for r in range(4, 9):
        assert torsion_primes(GroupId("D", r)) == {2}
    assert torsion_primes(GroupId("B", 1)) == torsion_primes(GroupId("B", 2)) == frozenset()
    assert torsion_primes(GroupId("D", 3)) == frozenset()
    for gid in (GroupId("F", 4), GroupId("E", 6), GroupId("E", 7)):
        assert torsion_primes(gid) == {2, 3}
    assert torsion_primes(GroupId("E", 8)) == {2, 3, 5}
    ok(11, "A/C none; G2 and B/D ranges {2}; F4/E6/E7 {2,3}; E8 {2,3,5}")


def test_criterion_12_coset_dims():
    dims = [coset_dim(e) for e in magic_square_entries()[:4]]
    assert dims == [2, 4, 8, 16]
    e6 = next(e for e in magic_square_entries() if e.big == "E6")
    assert coset_dim(e6) == 32
    ok(12, "projective-plane rows 2/4/8/16; E6 row 32")


def test_criterion_13_property_suite(exceptional):
    # import/export round trip preserves the bracket and re-verifies
    names = []
    for target in ("G2", "F4", "E6", "E7", "E8"):
        table, _ = exceptional(target)
        back = load_table(dump_table(table))
        assert back.brackets == table.brackets
        assert verify_jacobi(back).violations == 0
        names.append(target)
    for table in (so_table(9), su_table(5), sp_table(3)):
        back = load_table(dump_table(table))
        assert back.brackets == table.brackets
        assert verify_jacobi(back).violations == 0
        names.append(table.name)
    # brute-force Weyl orbit oracle, rank <= 4
    oracle = []
    for gid in all_simple_ids(4):
        rs = build_root_system(gid)
        assert weyl_orbit_size(rs) == rs.weyl_order, gid
        oracle.append(str(gid))
    ok(13, "round-trip verified for " + " ".join(names) +
           "; |W| orbit oracle for " + " ".join(oracle))
