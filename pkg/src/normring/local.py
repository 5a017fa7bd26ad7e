"""Local structure of an order at a rational prime.

Localizations are never built as rings. Everything local is read off
finite quotients: the F_p-algebra ``R/pR`` gives the maximal ideals above
``p``, and the stabilized index ``[R : I + m^e]`` gives the local index of
``I`` at ``m``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from sympy import factorint, isprime

from . import polyfp
from .errors import (
    NonCommutative,
    NotContained,
    NotIntegral,
    NotPrime,
)
from .field import FieldElem, lattice_product
from .ideal import FracIdeal, colon_lattice, unit_ideal
from .lattice import HnfLattice, hnf, kernel_mod_p, lattice_index, lattice_intersect, rref_mod_p

__all__ = [
    "FpAlgebra",
    "OrderQuotient",
    "MaximalIdeal",
    "GlobalG",
    "primes_above",
    "radical_ideal",
    "local_norm",
    "min_generators_at",
    "conductor",
    "singular_primes",
    "g_local",
    "g_global",
    "find_extension_generator",
    "residue",
    "residue_preimage",
    "exact_log",
]


def _require_prime(p):
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")


def exact_log(value, base):
    """``k`` with ``base**k == value``; raises ValueError otherwise."""
    value = Fraction(value)
    if value.denominator != 1 or value < 1:
        raise ValueError(f"{value} is not a positive integer power of {base}")
    v, k = value.numerator, 0
    while v > 1:
        v, r = divmod(v, base)
        if r:
            raise ValueError(f"{value} is not a power of {base}")
        k += 1
    return k


def rank_mod_p(rows, p):
    return len(rref_mod_p(rows, p)[1])


# --- finite algebras ------------------------------------------------------


@dataclass(frozen=True)
class FpAlgebra:
    """Finite commutative unital F_p-algebra given by structure constants.

    ``table[i][j]`` is the coordinate vector of ``e_i * e_j``; ``one`` is the
    coordinate vector of the unit. ``basis_lift`` optionally carries field
    elements lifting the basis.
    """

    p: int
    table: tuple
    one: tuple
    basis_lift: tuple = field(default=None, compare=False)

    @property
    def dim(self):
        return len(self.one)

    def validate(self):
        d, p = self.dim, self.p
        basis = [self.unit_vector(i) for i in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                if self.table[i][j] != self.table[j][i]:
                    raise NonCommutative(f"e{i}*e{j} != e{j}*e{i}")
        for i in range(d):
            if tuple(self.mul(self.one, basis[i])) != basis[i]:
                raise ValueError("declared unit is not a unit")
            for j in range(d):
                for k in range(d):
                    lhs = self.mul(self.table[i][j], basis[k])
                    rhs = self.mul(basis[i], self.table[j][k])
                    if lhs != rhs:
                        raise ValueError(f"not associative at ({i}, {j}, {k}) mod {p}")
        return self

    def unit_vector(self, i):
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def mul(self, u, v):
        p, d, t = self.p, self.dim, self.table
        out = [0] * d
        for i, a in enumerate(u):
            if a:
                ti = t[i]
                for j, b in enumerate(v):
                    if b:
                        ab = a * b
                        for k, c in enumerate(ti[j]):
                            if c:
                                out[k] += ab * c
        return tuple(x % p for x in out)

    def power(self, u, e):
        result, base = self.one, tuple(u)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def add(self, u, v, scale=1):
        return tuple((a + scale * b) % self.p for a, b in zip(u, v))

    def span_dim(self, vectors):
        return rank_mod_p([list(v) for v in vectors], self.p)

    def frobenius_matrix(self):
        return [list(self.power(self.unit_vector(i), self.p)) for i in range(self.dim)]

    def radical(self):
        """Basis of the nilradical as the kernel of an iterated Frobenius.

        ``x -> x^p`` is F_p-linear and nilpotent elements are killed by its
        ``k``-th iterate once ``p^k >= dim``.
        """
        p, d = self.p, self.dim
        k = 0
        while p**k < d:
            k += 1
        F = self.frobenius_matrix()
        M = [list(r) for r in (self.unit_vector(i) for i in range(d))]
        for _ in range(max(k, 1)):
            M = _matmul_mod(M, F, p)
        return [tuple(r) for r in kernel_mod_p(M, p)]

    def quotient(self, rows):
        """Quotient by the ideal spanned by ``rows``; returns ``(algebra, proj, lift)``."""
        red, pivots = rref_mod_p([list(r) for r in rows], self.p)
        comp = [c for c in range(self.dim) if c not in pivots]
        p = self.p

        def proj(v):
            v = [x % p for x in v]
            for row, c in zip(red, pivots):
                if v[c]:
                    f = v[c]
                    v = [(x - f * y) % p for x, y in zip(v, row)]
            return tuple(v[c] for c in comp)

        def lift(u):
            v = [0] * self.dim
            for c, x in zip(comp, u):
                v[c] = x
            return tuple(v)

        table = tuple(tuple(proj(self.table[ci][cj]) for cj in comp) for ci in comp)
        lifts = None
        if self.basis_lift is not None:
            lifts = tuple(self.basis_lift[c] for c in comp)
        return FpAlgebra(p, table, proj(self.one), lifts), proj, lift

    def min_poly(self, u):
        """Minimal polynomial of ``u`` (F_p coefficients, constant first)."""
        p = self.p
        powers = [self.one]
        while True:
            powers.append(self.mul(powers[-1], u))
            kern = kernel_mod_p([list(v) for v in powers], p)
            if kern:
                # the lowest dependency involves the newest power
                vec = next(k for k in kern if k[-1])
                inv = pow(vec[-1], -1, p)
                return [x * inv % p for x in vec]

    def primitive_idempotents(self):
        """Primitive idempotents of a semisimple algebra (a product of fields).

        The Berlekamp subalgebra ``{x : x^p = x}`` is spanned by the primitive
        idempotents; each of its basis elements has a split squarefree minimal
        polynomial, and its Lagrange projectors refine the current splitting.
        """
        p, d = self.p, self.dim
        F = self.frobenius_matrix()
        for i in range(d):
            F[i][i] -= 1
        fixed = kernel_mod_p(F, p)
        r = len(fixed)
        idems = [self.one]
        for s in fixed:
            if len(idems) == r:
                break
            roots = polyfp.split_roots(self.min_poly(s), p)
            if len(roots) < 2:
                continue
            projectors = []
            for c in roots:
                e = self.one
                for c2 in roots:
                    if c2 != c:
                        inv = pow(c - c2, -1, p)
                        factor = self.add(s, self.one, -c2)
                        e = self.mul(e, tuple(x * inv % p for x in factor))
                projectors.append(e)
            idems = [q for e in idems for q in (self.mul(e, pr) for pr in projectors) if any(q)]
        assert len(idems) == r, "idempotent splitting did not finish"
        return idems


def _matmul_mod(a, b, p):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


class OrderQuotient:
    """The F_p-algebra ``R / I`` for an ideal ``I`` with ``pR <= I <= R``.

    Elements of ``R`` are addressed by integer coordinates in the order basis.
    """

    def __init__(self, R, p, ideal_lattice=None):
        self.order = R
        self.p = p
        n = R.degree
        if ideal_lattice is None:
            sub = []
        else:
            sub = [_coords_int(R, r, ideal_lattice.den) for r in ideal_lattice.basis]
        self._red, self._pivots = rref_mod_p(sub, p) if sub else ([], [])
        self.complement = [c for c in range(n) if c not in self._pivots]
        table = tuple(
            tuple(self.project(R.mult_table[ci][cj]) for cj in self.complement) for ci in self.complement
        )
        lifts = tuple(R.basis[c] for c in self.complement)
        self.algebra = FpAlgebra(p, table, self.project(R.one_coords), lifts)

    def project(self, coords):
        p = self.p
        v = [int(x) % p for x in coords]
        for row, c in zip(self._red, self._pivots):
            if v[c]:
                f = v[c]
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return tuple(v[c] for c in self.complement)

    def lift(self, u):
        """Order coordinates (entries in ``[0, p)``) of a lift of ``u``."""
        v = [0] * self.order.degree
        for c, x in zip(self.complement, u):
            v[c] = x
        return v

    def lift_elem(self, u):
        return self.order.elem_from_coords(self.lift(u))

    def ideal_lattice(self, rows):
        """Lattice of ``pR + lifts(rows)`` where rows are vectors of ``R/pR``.

        Only meaningful when this quotient is ``R/pR`` itself.
        """
        R, p = self.order, self.p
        n = R.degree
        coords = [[p if i == j else 0 for j in range(n)] for i in range(n)]
        coords += [self.lift(r) for r in rows]
        return _lattice_from_coords(R, coords)


def _coords_int(R, num, den):
    c = R.lattice.solve(num, den)
    if any(x.denominator != 1 for x in c):
        raise NotContained("vector is not in the order")
    return [int(x) for x in c]


def _lattice_from_coords(R, coords):
    basis = R.lattice.basis
    n = R.degree
    rows = [[sum(c[i] * basis[i][k] for i in range(n)) for k in range(n)] for c in coords]
    return HnfLattice.from_rows(rows, R.lattice.den)


# --- maximal ideals -------------------------------------------------------


@dataclass(frozen=True)
class MaximalIdeal:
    ideal: FracIdeal
    p: int
    res_deg: int
    idempotent: FieldElem = field(default=None, compare=False)

    @property
    def order(self):
        return self.ideal.order

    @property
    def lattice(self):
        return self.ideal.lattice

    @property
    def residue_size(self):
        return self.p**self.res_deg

    @property
    def norm(self):
        return self.ideal.norm

    def __repr__(self):
        return f"MaximalIdeal(p={self.p}, f={self.res_deg}, {self.ideal!r})"


def radical_ideal(R, p):
    """The ideal ``I`` with ``I / pR`` the nilradical of ``R / pR``."""
    _require_prime(p)
    Q = OrderQuotient(R, p)
    rad = Q.algebra.radical()
    return FracIdeal(R, Q.ideal_lattice(rad))


def primes_above(R, p):
    """All maximal ideals of ``R`` containing ``p``, in canonical order."""
    _require_prime(p)
    Q = OrderQuotient(R, p)
    A = Q.algebra
    rad = A.radical()
    B, _, lift_b = A.quotient(rad)
    out = []
    for eps in B.primitive_idempotents():
        co = B.add(B.one, eps, -1)
        rows_b = [B.mul(co, B.unit_vector(i)) for i in range(B.dim)]
        res_deg = B.dim - B.span_dim(rows_b)
        rows_a = [lift_b(r) for r in rows_b] + list(rad)
        m = FracIdeal(R, Q.ideal_lattice(rows_a))
        assert m.norm == p**res_deg
        out.append(MaximalIdeal(m, p, res_deg, Q.lift_elem(lift_b(eps))))
    out.sort(key=lambda m: (m.res_deg, m.lattice.den, m.lattice.basis))
    return out


def local_norm(I, m, check_extra=False):
    """Local index ``[R_m : I_m]`` as the stabilized index ``[R : I + m^e]``."""
    if not I.is_integral:
        raise NotIntegral("local_norm needs an ideal inside its order")
    power = m.ideal
    cur = I + power
    while True:
        power = power * m.ideal
        nxt = I + power
        if nxt == cur:
            break
        cur = nxt
    if check_extra:
        for _ in range(2):
            power = power * m.ideal
            assert I + power == cur, "saturation did not stabilize"
    n = cur.norm
    assert n.denominator == 1
    return int(n)


def min_generators_at(I, m):
    """``dim_k I / mI`` with ``k = R/m``: the local minimal number of generators."""
    return exact_log(lattice_index(I.lattice, (m.ideal * I).lattice), m.residue_size)


def conductor(R, Rt):
    """Largest ``Rt``-ideal inside ``R``, returned as an ideal of ``R``."""
    if not Rt.lattice.contains_lattice(R.lattice):
        raise NotContained("the order is not inside the given overorder")
    return FracIdeal(R, colon_lattice(R.field, R.lattice, Rt.lattice))


def singular_primes(R, Rt):
    """Maximal ideals of ``R`` that contain the conductor into ``Rt``."""
    f = conductor(R, Rt)
    idx = int(f.norm)
    out = []
    for p in sorted(factorint(idx)):
        out.extend(m for m in primes_above(R, p) if m.ideal >= f)
    return out


def g_local(R, m, Rt):
    """``dim_k Rt / m Rt``, the largest local generator count at ``m``."""
    if not Rt.lattice.contains_lattice(R.lattice):
        raise NotContained("the order is not inside the given overorder")
    mRt = lattice_product(R.field, m.lattice, Rt.lattice)
    return exact_log(lattice_index(Rt.lattice, mRt), m.residue_size)


@dataclass(frozen=True)
class GlobalG:
    """Local generator counts at the singular primes and their maximum.

    ``exact`` is true when ``max_local >= 2``, in which case it equals the
    global bound on generators of every ideal. Otherwise the order is
    Dedekind and only ``g <= bound == 2`` is known.
    """

    per_prime: dict
    max_local: int
    exact: bool
    bound: int
    ideals: dict = field(default=None, compare=False)


def _labels(ms):
    counts = {}
    out = []
    for m in ms:
        k = counts.get(m.p, 0)
        counts[m.p] = k + 1
        out.append(f"{m.p}.{k}")
    return out


def g_global(R, Rt, validate=True):
    if validate:
        from .normalization import validate_normalization

        validate_normalization(R, Rt)
    ms = singular_primes(R, Rt)
    labels = _labels(ms)
    per = {lab: g_local(R, m, Rt) for lab, m in zip(labels, ms)}
    mx = max([1, *per.values()])
    exact = mx >= 2
    return GlobalG(per, mx, exact, mx if exact else 2, dict(zip(labels, ms)))


def residue(x, m):
    """Residue of ``x`` in ``R/m = F_p`` for a degree-one maximal ideal."""
    if m.res_deg != 1:
        raise ValueError("residues are only tabulated for residue degree 1")
    if x not in m.order:
        raise NotContained("element is not in the order")
    for c in range(m.p):
        if x - c in m.ideal:
            return c
    raise AssertionError("no residue found")


def residue_preimage(R, Rt, p, vectors):
    """Preimage in ``Rt`` of the additive group generated by ``vectors`` in F_p^l.

    ``p`` must split completely in ``Rt`` (``Rt/pRt = F_p^l``); coordinates
    follow the order of ``primes_above(Rt, p)``. The result is returned as a
    fractional ideal of ``R`` and raises NotClosed if it is not an R-module.
    """
    qs = primes_above(Rt, p)
    if any(q.res_deg != 1 for q in qs) or len(qs) != Rt.degree:
        raise ValueError(f"{p} does not split completely")
    K = Rt.field
    rows = [r for r in (unit_ideal(Rt).scale(p)).lattice.rows()]
    for v in vectors:
        x = sum((c * q.idempotent for c, q in zip(v, qs)), K.zero)
        rows.append(x.coords)
    return FracIdeal.from_lattice(R, HnfLattice.from_fractions(rows))


def find_extension_generator(I, Rt, p):
    """Search ``x in I`` with ``x Rt`` and ``I Rt`` agreeing at every prime above ``p``.

    Classes of ``I`` modulo ``I ∩ p I Rt`` are scanned in a fixed order (first
    coordinate fastest). Returns the first witness, or None when no class
    works, which proves that no element of ``I`` generates ``I Rt`` at ``p``.
    """
    _require_prime(p)
    K = I.field
    IRt = lattice_product(K, I.lattice, Rt.lattice)
    targets = [lattice_product(K, q.lattice, IRt) for q in primes_above(Rt, p)]
    sub = lattice_intersect(I.lattice, IRt.scale(p))
    coords = []
    for r in sub.basis:
        c = I.lattice.solve(r, sub.den)
        coords.append([int(x) for x in c])
    diag = [row[i] for i, row in enumerate(hnf(coords))]
    basis = I.lattice.basis
    n = K.degree
    for digits in product(*(range(d) for d in reversed(diag))):
        c = digits[::-1]
        num = [sum(c[i] * basis[i][k] for i in range(n)) for k in range(n)]
        if not any(num):
            continue
        if all(not t.contains(num, I.lattice.den) for t in targets):
            return K.elem([Fraction(x, I.lattice.den) for x in num])
    return None
