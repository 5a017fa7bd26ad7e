"""Super-multiplicativity audits.

Sampling can only ever find violations ``N(I) N(J) > N(IJ)``; a clean run is
reported as "no violation found", never as a proof. Violations, and the
counterexamples built by :func:`construct_counterexample`, are exact
certificates that replay from the stored lattices.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np
from sympy import primerange

from .errors import DimTooSmall, NonCommutative, PreconditionViolated
from .field import Order, lattice_product
from .ideal import FracIdeal, colon_ideal, ideal_generate, unit_ideal
from .lattice import HnfLattice, lattice_index, lattice_sum
from .local import OrderQuotient, g_global, g_local, primes_above, singular_primes
from .normalization import normalize

__all__ = [
    "AuditConfig",
    "PairRecord",
    "AuditReport",
    "DedekindReport",
    "Trichotomy",
    "Counterexample",
    "EquivalenceReport",
    "supermult_sample",
    "structured_probes",
    "random_ideal",
    "dedekind_test",
    "classify_algebra",
    "construct_counterexample",
    "extension_at",
    "theorem11_audit",
]

NO_VIOLATION = "no violation found"
VIOLATION = "violation found (exact certificate)"
EXCESS_KEEP = 20


@dataclass(frozen=True)
class AuditConfig:
    trials: int = 200
    seed: int = 0
    H: int = 10
    probes: bool = True
    max_gens: int = 3
    workers: int = 1

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.H < 1:
            raise ValueError("H must be at least 1")
        if self.max_gens < 1:
            raise ValueError("max_gens must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def to_dict(self):
        return {
            "trials": str(self.trials),
            "seed": str(self.seed),
            "H": str(self.H),
            "probes": self.probes,
            "max_gens": str(self.max_gens),
        }


def _frac(x):
    x = Fraction(x)
    return [str(x.numerator), str(x.denominator)]


def _lat(lat):
    return {"basis_num": [[str(v) for v in r] for r in lat.basis], "basis_den": str(lat.den)}


@dataclass(frozen=True)
class PairRecord:
    source: str
    I: HnfLattice
    J: HnfLattice
    norm_I: Fraction
    norm_J: Fraction
    norm_IJ: Fraction

    @property
    def violation(self):
        return self.norm_I * self.norm_J > self.norm_IJ

    @property
    def excess(self):
        return self.norm_I * self.norm_J < self.norm_IJ

    def to_dict(self):
        return {
            "source": self.source,
            "I": _lat(self.I),
            "J": _lat(self.J),
            "N(I)": _frac(self.norm_I),
            "N(J)": _frac(self.norm_J),
            "N(IJ)": _frac(self.norm_IJ),
        }

    def replay(self, R):
        """Recompute the three norms from the stored bases."""
        I = FracIdeal.from_lattice(R, self.I)
        J = FracIdeal.from_lattice(R, self.J)
        return I.norm, J.norm, (I * J).norm


@dataclass
class AuditReport:
    order_digest: str
    config: AuditConfig
    trials_run: int
    pairs: list
    violations: list
    excesses: list
    excess_count: int
    wall_time: float = field(default=0.0, compare=False)

    @property
    def verdict(self):
        return VIOLATION if self.violations else NO_VIOLATION

    @property
    def pairs_checked(self):
        return len(self.pairs)

    def to_dict(self, include_timing=False):
        doc = {
            "kind": "supermult-audit",
            "order_digest": self.order_digest,
            "config": self.config.to_dict(),
            "trials_run": str(self.trials_run),
            "pairs_checked": str(self.pairs_checked),
            "verdict": self.verdict,
            "violations": [v.to_dict() for v in self.violations],
            "excess_count": str(self.excess_count),
            "excess_examples": [v.to_dict() for v in self.excesses],
        }
        if include_timing:
            doc["wall_time"] = f"{self.wall_time:.3f}"
        return doc

    def csv_rows(self):
        yield ["source", "N(I)", "N(J)", "N(IJ)", "violation"]
        for r in self.pairs:
            yield [r.source, str(r.norm_I), str(r.norm_J), str(r.norm_IJ), str(int(r.violation))]


# --- sampling -------------------------------------------------------------


def random_ideal(R, rng, H, max_gens=3):
    """Integral ideal generated by 1 to ``max_gens`` random elements of ``R``.

    Generators have order-basis coordinates drawn uniformly from ``[-H, H]``.
    """
    n = R.degree
    k = int(rng.integers(1, max_gens + 1))
    gens = []
    while len(gens) < k:
        c = [int(x) for x in rng.integers(-H, H + 1, size=n)]
        if any(c):
            gens.append(R.elem_from_coords(c))
    return ideal_generate(R, gens)


def _integral(I):
    d = I.integral_multiplier()
    return I if d == 1 else I.scale(d)


def structured_probes(R, Rt):
    """Deterministic ideals aimed at the singular primes, rescaled into ``R``.

    Powers of each singular maximal ideal, the conductor, ``(R : m)``, and the
    modules ``R + xR`` and ``R + xR + m Rt`` for basis elements ``x`` of ``Rt``.
    """
    K = R.field
    unit = unit_ideal(R)
    probes = []
    ms = singular_primes(R, Rt)
    if not ms:
        return probes
    probes.append(("conductor", colon_ideal(unit, FracIdeal(R, Rt.lattice))))
    for k, m in enumerate(ms):
        tag = f"m{m.p}.{k}"
        P = m.ideal
        for e in range(1, 4):
            probes.append((f"{tag}^{e}", P))
            P = P * m.ideal
        probes.append((f"(R:{tag})", colon_ideal(unit, m.ideal)))
        mRt = FracIdeal(R, lattice_product(K, m.lattice, Rt.lattice))
        for i, x in enumerate(Rt.basis):
            if x in R:
                continue
            base = ideal_generate(R, [K.one, x])
            probes.append((f"R+x{i}R", base))
            probes.append((f"R+x{i}R+{tag}Rt", base + mRt))
    seen = set()
    out = []
    for name, I in probes:
        I = _integral(I)
        if I.lattice not in seen:
            seen.add(I.lattice)
            out.append((name, I))
    return out


def _record(source, I, J):
    return PairRecord(source, I.lattice, J.lattice, I.norm, J.norm, (I * J).norm)


def _trial(args):
    R, seed, t, H, max_gens = args
    rng = np.random.default_rng([seed % 2**64, t])
    I = random_ideal(R, rng, H, max_gens)
    J = random_ideal(R, rng, H, max_gens)
    return _record(f"trial {t}", I, J)


def order_digest(R):
    from .formats import digest

    return digest(R)


def supermult_sample(R, cfg=AuditConfig(), Rt=None):
    """Sample ideal pairs of ``R`` and record every strict failure of super-multiplicativity.

    Each trial draws its randomness from ``(cfg.seed, trial index)`` so the
    report does not depend on how trials are scheduled. With ``cfg.probes``
    all pairs of :func:`structured_probes` are checked as well; this needs the
    normalization ``Rt`` (computed when not given).
    """
    start = time.perf_counter()
    jobs = [(R, cfg.seed, t, cfg.H, cfg.max_gens) for t in range(cfg.trials)]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.workers) as ex:
            pairs = list(ex.map(_trial, jobs, chunksize=8))
    else:
        pairs = [_trial(j) for j in jobs]
    if cfg.probes:
        if Rt is None:
            Rt = normalize(R)
        probes = structured_probes(R, Rt)
        for (na, A), (nb, B) in _probe_pairs(probes):
            pairs.append(_record(f"probe {na} * {nb}", A, B))
    violations = [r for r in pairs if r.violation]
    excess = [r for r in pairs if r.excess]
    return AuditReport(
        order_digest(R),
        cfg,
        cfg.trials,
        pairs,
        violations,
        excess[:EXCESS_KEEP],
        len(excess),
        time.perf_counter() - start,
    )


def _probe_pairs(probes):
    for i, a in enumerate(probes):
        for b in probes[i:]:
            yield a, b


# --- Dedekind detector ----------------------------------------------------


@dataclass
class DedekindReport:
    p_bound: int
    rows: list
    passed: bool

    @property
    def verdict(self):
        if self.passed:
            return f"Dedekind-consistent up to {self.p_bound}"
        return "not Dedekind"

    @property
    def failures(self):
        return [r for r in self.rows if not r["ok"]]

    def to_dict(self):
        rows = [
            {
                "p": str(r["p"]),
                "label": r["label"],
                "N(m)": _frac(r["N(m)"]),
                "N(m^2)": _frac(r["N(m^2)"]),
                "ok": r["ok"],
            }
            for r in self.rows
        ]
        return {"kind": "dedekind-test", "p_bound": str(self.p_bound), "rows": rows, "verdict": self.verdict}


def dedekind_test(R, p_bound=50):
    """Compare ``N(m^2)`` with ``N(m)^2`` at every maximal ideal above ``p <= p_bound``."""
    if p_bound < 2:
        raise ValueError("p_bound must be at least 2")
    rows = []
    for p in primerange(2, p_bound + 1):
        for k, m in enumerate(primes_above(R, p)):
            n1 = m.norm
            n2 = (m.ideal * m.ideal).norm
            rows.append({"p": p, "label": f"{p}.{k}", "N(m)": n1, "N(m^2)": n2, "ok": n2 <= n1 * n1})
    return DedekindReport(p_bound, rows, all(r["ok"] for r in rows))


# --- trichotomy -----------------------------------------------------------


@dataclass(frozen=True)
class Trichotomy:
    """Outcome of the structure search on a commutative algebra of dimension >= 4.

    ``case`` is ``"I"`` with a witness pair ``(x, y)`` such that ``1, x, y, xy``
    are independent, or ``"II"`` with ``radical`` a basis of ``V`` where
    ``A = k + V`` and ``V * V = 0``.
    """

    case: str
    algebra: object = field(repr=False)
    x: tuple = None
    y: tuple = None
    radical: tuple = None


def _witness_ok(A, x, y):
    return A.span_dim([A.one, x, y, A.mul(x, y)]) >= 4


def classify_algebra(A, seed=0, random_cap=500):
    """Find a witness pair for case I, or certify case II.

    Search order: pairs of basis vectors ``(e_i, e_j)`` with ``i < j``, then
    pairs ``(e_i, e_j e_k)``, then seeded random pairs. The witness returned is
    the first hit and is not unique.
    """
    d = A.dim
    if d < 4:
        raise DimTooSmall(f"dimension {d} < 4")
    for i in range(d):
        for j in range(i + 1, d):
            if A.table[i][j] != A.table[j][i]:
                raise NonCommutative(f"e{i}*e{j} != e{j}*e{i}")
    basis = [A.unit_vector(i) for i in range(d)]
    for i, j in combinations(range(d), 2):
        if _witness_ok(A, basis[i], basis[j]):
            return Trichotomy("I", A, basis[i], basis[j])
    for i in range(d):
        for j in range(d):
            for k in range(j, d):
                y = A.table[j][k]
                if _witness_ok(A, basis[i], y):
                    return Trichotomy("I", A, basis[i], y)
    rng = np.random.default_rng(seed)
    for _ in range(random_cap):
        x = tuple(int(v) for v in rng.integers(0, A.p, size=d))
        y = tuple(int(v) for v in rng.integers(0, A.p, size=d))
        if _witness_ok(A, x, y):
            return Trichotomy("I", A, x, y)
    rad = A.radical()
    assert len(rad) == d - 1, "no witness found and A/rad is not one-dimensional"
    for u in rad:
        for v in rad:
            assert not any(A.mul(u, v)), "no witness found and the radical does not square to zero"
    return Trichotomy("II", A, radical=tuple(rad))


# --- constructive converse ------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    """Ideals ``I, J`` of ``extension`` with ``[IJ : R'] > [I : R'] [J : R']``."""

    extension: Order
    I: FracIdeal
    J: FracIdeal
    index_I: Fraction
    index_J: Fraction
    index_IJ: Fraction
    x: object
    y: object
    residue_size: int

    @property
    def norms(self):
        return (1 / self.index_I, 1 / self.index_J, 1 / self.index_IJ)

    def to_dict(self):
        return {
            "extension": _lat(self.extension.lattice),
            "I": _lat(self.I.lattice),
            "J": _lat(self.J.lattice),
            "[I:R']": _frac(self.index_I),
            "[J:R']": _frac(self.index_J),
            "[IJ:R']": _frac(self.index_IJ),
            "x": [_frac(c) for c in self.x.coords],
            "y": [_frac(c) for c in self.y.coords],
            "residue_size": str(self.residue_size),
        }


def extension_at(R, m, Rt):
    """The order ``R + m Rt``."""
    mRt = lattice_product(R.field, m.lattice, Rt.lattice)
    return Order.from_lattice(R.field, lattice_sum(R.lattice, mRt)), mRt


def construct_counterexample(R, m, Rt):
    """Explicit non-super-multiplicative ideal pair in ``R' = R + m Rt``.

    Requires ``dim_k Rt / m Rt >= 4``. A witness ``(x, y)`` from
    :func:`classify_algebra` on ``Rt / m Rt`` lifts to the ideals
    ``I = R' + x R' + m Rt`` and ``J = R' + y R' + m Rt``.
    """
    g = g_local(R, m, Rt)
    if g < 4:
        raise PreconditionViolated(f"dim_k Rt/mRt = {g} < 4")
    Rp, mRt = extension_at(R, m, Rt)
    Q = OrderQuotient(Rt, m.p, mRt)
    A = Q.algebra.validate()
    tri = classify_algebra(A)
    assert tri.case == "I", "a commutative algebra of dimension >= 4 over a normalization gave case II"
    x, y = Q.lift_elem(tri.x), Q.lift_elem(tri.y)
    base = FracIdeal(Rp, mRt)
    one = Rp.field.one
    I = ideal_generate(Rp, [one, x]) + base
    J = ideal_generate(Rp, [one, y]) + base
    IJ = I * J
    iI = lattice_index(I.lattice, Rp.lattice)
    iJ = lattice_index(J.lattice, Rp.lattice)
    iIJ = lattice_index(IJ.lattice, Rp.lattice)
    assert iIJ > iI * iJ, "constructed pair is not a violation"
    return Counterexample(Rp, I, J, iI, iJ, iIJ, x, y, m.residue_size)


# --- both directions ------------------------------------------------------


@dataclass
class EquivalenceReport:
    g: object
    base: AuditReport
    extensions: dict
    counterexample: Counterexample = None

    @property
    def branch(self):
        return "constructive" if self.counterexample is not None else "sampled"

    @property
    def verdict(self):
        if self.counterexample is not None:
            return "g >= 4: constructive violation in an extension R + m Rt"
        if self.base.violations or any(r.violations for r in self.extensions.values()):
            return "g <= 3 but a sampled violation was found"
        return "g <= 3: consistent, no violation found in R or any extension R + m Rt"

    def to_dict(self):
        doc = {
            "kind": "theorem11-audit",
            "g": {
                "per_prime": {k: str(v) for k, v in sorted(self.g.per_prime.items())},
                "max_local": str(self.g.max_local),
                "exact": self.g.exact,
                "bound": str(self.g.bound),
            },
            "branch": self.branch,
            "verdict": self.verdict,
            "base": self.base.to_dict(),
            "extensions": {k: v.to_dict() for k, v in sorted(self.extensions.items())},
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample.to_dict()
        return doc


def theorem11_audit(R, Rt, cfg=AuditConfig()):
    """Audit the equivalence between 3-generation and super-multiplicative extensions.

    Sampling covers ``R`` and every ``R + m Rt`` at singular ``m``; when some
    local count reaches 4 an exact counterexample is built as well.
    """
    G = g_global(R, Rt)
    base = supermult_sample(R, cfg, Rt)
    extensions = {}
    for label, m in G.ideals.items():
        Rp, _ = extension_at(R, m, Rt)
        extensions[label] = supermult_sample(Rp, cfg, Rt)
    ce = None
    if G.max_local >= 4:
        label = next(k for k, v in sorted(G.per_prime.items()) if v >= 4)
        ce = construct_counterexample(R, G.ideals[label], Rt)
    return EquivalenceReport(G, base, extensions, ce)
