"""Acceptance criteria 1 to 11, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v``; the lines are collected in the
terminal summary under "acceptance criteria".
"""

import subprocess
import sys
import time
from math import prod
from pathlib import Path

import numpy as np
import pytest
from sympy import factorint

from conftest import ACCEPTANCE_LINES
from normring import catalog
from normring.audit import (
    AuditConfig,
    construct_counterexample,
    dedekind_test,
    random_ideal,
    supermult_sample,
)
from normring.field import equation_order, field_create
from normring.ideal import colon_ideal, ideal_generate, unit_ideal
from normring.lattice import lattice_index
from normring.local import find_extension_generator, g_global, local_norm, primes_above
from normring.field import lattice_product
from normring.normalization import normalize


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_intro_example():
    t = time.perf_counter()
    K = field_create([1, 0, 1])
    R = equation_order(K).suborder(2)
    I = ideal_generate(R, [2, K.elem([0, 2])])
    n1, n2 = I.norm, (I * I).norm
    dt = time.perf_counter() - t
    report(1, (n1, n2) == (2, 8) and dt < 1, f"Z[2i] N(I)={n1} N(I^2)={n2} in {dt:.3f}s")


def test_criterion_02_degree4():
    t = time.perf_counter()
    rows = []
    ok = True
    for p in (2, 3, 5):
        R = equation_order(field_create(catalog.QUARTIC)).suborder(p)
        a = R.field.gen
        I = ideal_generate(R, [p, p * a])
        J = ideal_generate(R, [p, p * a * a])
        M = ideal_generate(R, [p, p * a, p * a**2, p * a**3])
        got = (I.norm, J.norm, M.norm, (I * J).norm, (I * M).norm)
        ok &= got == (p**3, p**3, p, p**5, p**5)
        rows.append(f"p={p}:{'/'.join(str(x) for x in got)}")
    dt = time.perf_counter() - t
    report(2, ok and dt < 5, f"N(I)/N(J)/N(M)/N(IJ)/N(IM) {' '.join(rows)} in {dt:.2f}s")


QUADRATIC_SUITE = [
    (-1, 2),
    (-1, 3),
    (-1, 5),
    (-1, 12),
    (-3, 2),
    (-3, 3),
    (-3, 7),
    (-2, 2),
    (-2, 9),
    (-5, 2),
    (-5, 6),
    (-7, 2),
    (-7, 4),
    (-11, 3),
    (-23, 5),
    (-431, 2),
    (2, 2),
    (2, 7),
    (3, 2),
    (3, 3),
    (5, 2),
    (5, 10),
    (13, 3),
    (17, 4),
    (29, 6),
    (-2003, 3),
    (2473, 2),
    (-1, 50),
    (5, 49),
    (-7, 31),
]


def test_criterion_03_quadratic_orders():
    t = time.perf_counter()
    pairs = violations = orders = 0
    for k, (d, c) in enumerate(QUADRATIC_SUITE):
        assert abs(catalog.field_discriminant(d)) <= 10**4 and c <= 50
        R, O = catalog.quadratic_order(d, c)
        rep = supermult_sample(R, AuditConfig(trials=20, seed=k, H=12), O)
        pairs += rep.pairs_checked
        violations += len(rep.violations)
        orders += 1
    dt = time.perf_counter() - t
    ok = pairs >= 500 and orders >= 20 and violations == 0 and dt < 120
    report(3, ok, f"{pairs} pairs over {orders} quadratic orders, {violations} violations in {dt:.1f}s")


def test_criterion_04_g_sharpness():
    G = g_global(catalog.r2(), normalize(catalog.r2()))
    report(4, G.max_local == 4 and G.exact, f"g(Z+2Z[a]) = {G.max_local}, exact={G.exact}")


def test_criterion_05_constructive_converse():
    R = catalog.r2()
    (m,) = primes_above(R, 2)
    ce = construct_counterexample(R, m, normalize(R))
    got = (ce.index_I, ce.index_J, ce.index_IJ)
    ok = got == (2, 2, 8) and ce.index_IJ > ce.index_I * ce.index_J
    report(5, ok, f"[I:R']={got[0]} [J:R']={got[1]} [IJ:R']={got[2]} > {got[0] * got[1]}")


def test_criterion_06_dedekind_detector():
    t = time.perf_counter()
    zi = dedekind_test(catalog.gaussian(), 50)
    o3 = dedekind_test(normalize(equation_order(catalog.cubic_field())), 50)
    z2i = dedekind_test(catalog.z2i(), 50)
    fails = z2i.failures
    bad = len(fails) == 1 and fails[0]["p"] == 2 and (fails[0]["N(m^2)"], fails[0]["N(m)"] ** 2) == (8, 4)
    dt = time.perf_counter() - t
    ok = zi.passed and o3.passed and not z2i.passed and bad and dt < 30
    report(6, ok, f"Z[i] {zi.verdict}; O3 {o3.verdict}; Z[2i] {z2i.verdict} (8 > 4) in {dt:.2f}s")


def test_criterion_07_non_monogenic_splitting():
    ms = primes_above(catalog.o3(), 2)
    degs = [m.res_deg for m in ms]
    report(7, degs == [1, 1, 1], f"primes above 2 in O3: residue degrees {degs}")


def test_criterion_08_lenstra_example():
    O3 = catalog.o3()
    J = catalog.lenstra_ideal()
    whole = lattice_product(O3.field, J.lattice, O3.lattice) == O3.lattice
    x = find_extension_generator(J, O3, 2)
    report(
        8, whole and x is None, f"J3 O3 == O3: {whole}; generator search: {'NotFound' if x is None else x}"
    )


def test_criterion_09_local_global():
    rng = np.random.default_rng(0)
    orders = [catalog.z2i(), catalog.r2(), catalog.r3(), catalog.r4()]
    checked = mismatches = 0
    for k in range(100):
        R = orders[k % 4]
        I = random_ideal(R, rng, 8)
        n = int(I.norm)
        local = prod(local_norm(I, m) for p in factorint(n) for m in primes_above(R, p))
        checked += 1
        mismatches += local != n
    report(9, checked == 100 and mismatches == 0, f"{checked} ideals, {mismatches} local-global mismatches")


def test_criterion_10_final_example_analog():
    R4, Rt = catalog.r4(), catalog.quartic_maximal()
    (m,) = primes_above(R4, 2)
    idx = lattice_index(colon_ideal(unit_ideal(R4), m.ideal).lattice, R4.lattice)
    ce = construct_counterexample(R4, m, Rt)
    rep = supermult_sample(R4, AuditConfig(trials=500, seed=0), Rt)
    probes = sum(not p.source.startswith("trial") for p in rep.pairs)
    label = "consistent" if not rep.violations else "inconsistent"
    ok = idx == 2 and ce.index_IJ > ce.index_I * ce.index_J and rep.pairs_checked >= 500 and probes > 0
    ok &= not rep.violations
    report(
        10,
        ok,
        f"[(R4:m):R4]={idx}; R4+mRt violation {ce.index_IJ} > {ce.index_I * ce.index_J}; "
        f"R4 audit {rep.pairs_checked} pairs ({probes} probes): {label}",
    )


def test_criterion_11_property_suites():
    root = Path(__file__).parent
    t = time.perf_counter()
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "pytest",
            str(root),
            "-q",
            "-o",
            "addopts=",
            "-p",
            "no:cacheprovider",
            "--ignore",
            str(root / "test_acceptance.py"),
        ],
        capture_output=True,
        text=True,
    )
    dt = time.perf_counter() - t
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    report(11, proc.returncode == 0 and dt < 600, f"property suites: {tail} (total {dt:.1f}s)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
