from fractions import Fraction
from math import prod

import pytest
from sympy import factorint

from normring import catalog
from normring.audit import (
    AuditConfig,
    classify_algebra,
    construct_counterexample,
    dedekind_test,
    extension_at,
    structured_probes,
    supermult_sample,
    theorem11_audit,
)
from normring.errors import DimTooSmall, NonCommutative, PreconditionViolated
from normring.formats import dumps
from normring.ideal import FracIdeal
from normring.local import (
    FpAlgebra,
    OrderQuotient,
    local_norm,
    min_generators_at,
    primes_above,
    singular_primes,
)
from normring.normalization import normalize


def _algebra(table, one, p=2):
    return FpAlgebra(p, tuple(tuple(tuple(c) for c in r) for r in table), tuple(one))


def _square_zero(d):
    # k[u1..u_{d-1}] / (u)^2 with basis 1, u1, ..., u_{d-1}
    def e(i):
        return tuple(int(k == i) for k in range(d))

    zero = (0,) * d
    table = [[e(j) if i == 0 else e(i) if j == 0 else zero for j in range(d)] for i in range(d)]
    return _algebra(table, e(0))


def test_supermult_maximal_order_clean():
    rep = supermult_sample(catalog.gaussian(), AuditConfig(trials=60))
    assert not rep.violations and rep.verdict == "no violation found"


def test_supermult_r2_violation():
    R = catalog.r2()
    rep = supermult_sample(R, AuditConfig(trials=5), normalize(R))
    assert rep.violations
    assert any((v.norm_I, v.norm_J, v.norm_IJ) == (8, 8, 32) for v in rep.violations)
    assert rep.verdict.startswith("violation found")


def test_supermult_empty():
    rep = supermult_sample(catalog.r2(), AuditConfig(trials=0, probes=False))
    assert rep.pairs_checked == 0 and not rep.violations


def test_codirectional_excess_recorded():
    R = catalog.r2()
    rep = supermult_sample(R, AuditConfig(trials=0), normalize(R))
    assert rep.excess_count > 0
    assert len(rep.excesses) <= 20
    assert all(e.norm_I * e.norm_J < e.norm_IJ for e in rep.excesses)


def test_config_validation():
    with pytest.raises(ValueError):
        AuditConfig(H=0)
    with pytest.raises(ValueError):
        AuditConfig(trials=-1)


def test_dedekind_examples():
    rep = dedekind_test(catalog.z2i(), 50)
    assert not rep.passed
    (bad,) = rep.failures
    assert bad["p"] == 2 and bad["N(m^2)"] == 8 and bad["N(m)"] ** 2 == 4
    assert dedekind_test(catalog.gaussian(), 50).passed
    assert dedekind_test(catalog.o3(), 50).passed
    with pytest.raises(ValueError):
        dedekind_test(catalog.gaussian(), 1)


def test_classify_field_case_one():
    R = catalog.quartic_maximal()
    A = OrderQuotient(R, 2).algebra.validate()
    tri = classify_algebra(A)
    assert tri.case == "I"
    assert A.span_dim([A.one, tri.x, tri.y, A.mul(tri.x, tri.y)]) == 4


def test_classify_square_zero_case_two():
    A = _square_zero(4).validate()
    tri = classify_algebra(A)
    assert tri.case == "II" and len(tri.radical) == 3
    with pytest.raises(DimTooSmall):
        classify_algebra(_square_zero(3))


def test_classify_rejects_noncommutative():
    A = _square_zero(4)
    table = [list(r) for r in A.table]
    table[1][2] = (0, 0, 0, 1)  # u1*u2 = u3 but u2*u1 = 0
    with pytest.raises(NonCommutative):
        classify_algebra(_algebra(table, A.one))


def test_counterexample_r2():
    R, Rt = catalog.r2(), catalog.quartic_maximal()
    (m,) = primes_above(R, 2)
    ce = construct_counterexample(R, m, Rt)
    assert ce.extension == R
    assert (ce.index_I, ce.index_J, ce.index_IJ) == (2, 2, 8)
    assert ce.index_IJ > ce.index_I * ce.index_J
    assert ce.index_IJ <= ce.residue_size**3
    a = R.field.gen
    assert (ce.x, ce.y) == (a, a * a)


def test_counterexample_preconditions():
    G = catalog.gaussian()
    R = catalog.z2i()
    (m,) = primes_above(R, 2)
    with pytest.raises(PreconditionViolated):
        construct_counterexample(R, m, G)
    R3 = catalog.r3()
    (m3,) = primes_above(R3, 2)
    with pytest.raises(PreconditionViolated):
        construct_counterexample(R3, m3, catalog.o3())


def test_equivalence_audit_branches():
    cfg = AuditConfig(trials=40)
    rep = theorem11_audit(catalog.z2i(), catalog.gaussian(), cfg)
    assert rep.branch == "sampled" and rep.g.max_local == 2
    assert not rep.base.violations
    assert all(not r.violations for r in rep.extensions.values())
    rep = theorem11_audit(catalog.r2(), catalog.quartic_maximal(), cfg)
    assert rep.branch == "constructive" and rep.g.max_local == 4
    assert rep.counterexample.index_IJ == 8
    rep = theorem11_audit(catalog.gaussian(), catalog.gaussian(), cfg)
    assert rep.branch == "sampled" and not rep.extensions


# --- properties -----------------------------------------------------------


def test_violation_soundness():
    for R in (catalog.r2(), catalog.r2(3)):
        rep = supermult_sample(R, AuditConfig(trials=40, seed=3), normalize(R))
        assert rep.violations
        for v in rep.violations:
            assert v.replay(R) == (v.norm_I, v.norm_J, v.norm_IJ)


def _local_product(I, R):
    n = I.norm
    return prod(local_norm(I, m) for p in factorint(int(n)) for m in primes_above(R, p))


@pytest.mark.parametrize("make", [catalog.z2i, catalog.r2, catalog.r3, catalog.r4])
def test_length_inequality_and_local_global(make):
    R = make()
    Rt = normalize(R)
    rep = supermult_sample(R, AuditConfig(trials=25, seed=1), Rt)
    ms = singular_primes(R, Rt)
    for rec in rep.pairs:
        I, J = FracIdeal(R, rec.I), FracIdeal(R, rec.J)
        IJ = I * J
        if not (I.is_integral and J.is_integral):
            continue
        strict_local = False
        for m in ms:
            a, b, c = local_norm(I, m), local_norm(J, m), local_norm(IJ, m)
            if min_generators_at(IJ, m) <= 3:
                assert a * b <= c
            strict_local |= a * b > c
        if rec.violation:
            assert strict_local
        # product of local norms reproduces the global values
        assert _local_product(I, R) == I.norm and _local_product(IJ, R) == IJ.norm


def test_structured_probes_contain_order_level_ideals():
    R, Rt = catalog.r4(), catalog.quartic_maximal()
    probes = structured_probes(R, Rt)
    assert probes
    assert all(I.is_integral for _, I in probes)


def test_extension_family():
    R, Rt = catalog.r4(), catalog.quartic_maximal()
    (m,) = primes_above(R, 2)
    Rp, _ = extension_at(R, m, Rt)
    assert Rp == catalog.r2()


def test_determinism_across_workers():
    R = catalog.r2()
    Rt = normalize(R)
    a = supermult_sample(R, AuditConfig(trials=30, seed=7), Rt)
    b = supermult_sample(R, AuditConfig(trials=30, seed=7, workers=2), Rt)
    assert dumps(a.to_dict()) == dumps(b.to_dict())
    c = supermult_sample(R, AuditConfig(trials=30, seed=8), Rt)
    assert dumps(a.to_dict()) != dumps(c.to_dict())


def test_report_serialization_has_exact_pairs():
    R = catalog.r2()
    doc = supermult_sample(R, AuditConfig(trials=3), normalize(R)).to_dict()
    v = doc["violations"][0]
    assert all(isinstance(x, str) for x in v["N(I)"]) and Fraction(*map(int, v["N(IJ)"])) > 0
    assert doc["config"]["seed"] == "0"
