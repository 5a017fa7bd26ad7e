"""Exact integer lattice algebra.

Matrices are plain lists (or tuples) of rows of Python ints. A full-rank
rational lattice is stored as an :class:`HnfLattice`: an upper-triangular
integer basis in canonical Hermite form together with one positive
denominator.

>>> hnf([[4, 0], [0, 4], [2, 2]])
((2, 2), (0, 4))
>>> snf([[6, 0], [0, 4]])
[2, 12]
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm, prod

from sympy import isprime

from .errors import DimensionMismatch, NotPrime, RankDeficient

__all__ = [
    "HnfLattice",
    "hnf",
    "snf",
    "xgcd",
    "lattice_index",
    "lattice_sum",
    "lattice_intersect",
    "kernel_mod_p",
    "rref_mod_p",
    "determinant",
]


def xgcd(a, b):
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _insert(basis, vec, n, modulus):
    # basis[j] is the row whose first nonzero entry sits in column j (or None)
    if modulus:
        vec = [v % modulus for v in vec]
    for j in range(n):
        c = vec[j]
        if not c:
            continue
        row = basis[j]
        if row is None:
            if c < 0:
                vec = [-v for v in vec]
            basis[j] = vec
            return
        a = row[j]
        if c % a == 0:
            q = c // a
            vec = [v - q * r for v, r in zip(vec, row)]
        else:
            x, y, g = xgcd(a, c)
            ag, cg = a // g, c // g
            new = [x * r + y * v for r, v in zip(row, vec)]
            if modulus:
                new[j + 1 :] = [v % modulus for v in new[j + 1 :]]
            basis[j] = new
            vec = [ag * v - cg * r for r, v in zip(row, vec)]
        if modulus:
            vec = [v % modulus for v in vec]


def _reduce(basis, n):
    for j in range(n):
        piv = basis[j]
        p = piv[j]
        for i in range(j):
            row = basis[i]
            q = row[j] // p
            if q:
                basis[i] = [r - q * s for r, s in zip(row, piv)]


def hnf(rows):
    """Canonical row-style Hermite form of the row lattice of ``rows``.

    The result is upper triangular with positive pivots; every entry above a
    pivot lies in ``[0, pivot)``. Raises :class:`RankDeficient` unless the rows
    span a lattice of full rank ``n`` (the number of columns).
    """
    rows = [list(map(int, r)) for r in rows]
    if not rows or not rows[0]:
        raise RankDeficient("empty matrix")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("ragged matrix")
    basis = [None] * n
    modulus = 0
    for r in rows:
        _insert(basis, r, n, modulus)
        if not modulus and all(b is not None for b in basis):
            # a full-rank sublattice L' gives det(L') * Z^n inside the lattice,
            # so later vectors may be reduced modulo det(L')
            modulus = prod(basis[j][j] for j in range(n))
            _reduce(basis, n)
    if any(b is None for b in basis):
        raise RankDeficient(f"rank {sum(b is not None for b in basis)} < {n}")
    _reduce(basis, n)
    return tuple(tuple(r) for r in basis)


def determinant(mat):
    """Exact determinant of a square matrix of ints or Fractions (Bareiss)."""
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise DimensionMismatch("determinant needs a square matrix")
    if all(isinstance(x, int) for r in mat for x in r):
        a = [list(r) for r in mat]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]
    a = [[Fraction(x) for x in r] for r in mat]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


@dataclass(frozen=True)
class HnfLattice:
    """Full-rank lattice ``basis / den`` in Q^n, basis in canonical Hermite form.

    Construct through :meth:`from_rows`; the raw constructor trusts its input.
    Equal lattices compare equal.
    """

    basis: tuple
    den: int = 1

    @classmethod
    def from_rows(cls, rows, den=1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        basis = hnf(rows)
        g = gcd(den, *(x for r in basis for x in r))
        if g > 1:
            basis = tuple(tuple(x // g for x in r) for r in basis)
            den //= g
        return cls(basis, den)

    @classmethod
    def from_fractions(cls, rows):
        """Lattice spanned by rows of rational numbers."""
        rows = [[Fraction(x) for x in r] for r in rows]
        den = lcm(1, *(x.denominator for r in rows for x in r))
        return cls.from_rows([[int(x * den) for x in r] for r in rows], den)

    @classmethod
    def standard(cls, n, scale=1):
        if scale <= 0:
            raise ValueError("scale must be positive")
        s = Fraction(scale)
        rows = [[s if i == j else 0 for j in range(n)] for i in range(n)]
        return cls.from_fractions(rows)

    @property
    def dim(self):
        return len(self.basis)

    @cached_property
    def det_num(self):
        return prod(self.basis[i][i] for i in range(self.dim))

    @cached_property
    def volume(self):
        """Covolume as an exact rational, ``det(basis) / den^n``."""
        return Fraction(self.det_num, self.den**self.dim)

    def rows(self):
        """Basis rows as tuples of Fractions."""
        return [tuple(Fraction(x, self.den) for x in r) for r in self.basis]

    def solve(self, num, den=1):
        """Coordinates ``x`` (Fractions) with ``x . basis/self.den == num/den``."""
        n = self.dim
        if len(num) != n:
            raise DimensionMismatch(f"vector of length {len(num)} in dimension {n}")
        w = [Fraction(v * self.den, den) for v in num]
        x = []
        for j in range(n):
            c = w[j] / self.basis[j][j]
            x.append(c)
            if c:
                row = self.basis[j]
                for k in range(j, n):
                    w[k] -= c * row[k]
        return x

    def contains(self, num, den=1):
        return all(c.denominator == 1 for c in self.solve(num, den))

    def contains_lattice(self, other):
        return all(self.contains(r, other.den) for r in other.basis)

    def scale(self, factor):
        """The lattice ``factor * self`` for a nonzero rational ``factor``."""
        factor = Fraction(factor)
        if not factor:
            raise RankDeficient("scaling by zero")
        num, den = abs(factor.numerator), factor.denominator
        return HnfLattice.from_rows([[x * num for x in r] for r in self.basis], self.den * den)

    def __le__(self, other):
        return other.contains_lattice(self)

    def __ge__(self, other):
        return self.contains_lattice(other)


def _check_dims(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim} differ")


def _common(a, b):
    d = lcm(a.den, b.den)
    sa, sb = d // a.den, d // b.den
    ra = [[x * sa for x in r] for r in a.basis]
    rb = [[x * sb for x in r] for r in b.basis]
    return ra, rb, d


def lattice_index(a, b):
    """Generalized index ``[a : b]`` as a positive Fraction."""
    _check_dims(a, b)
    return b.volume / a.volume


def lattice_sum(a, b):
    _check_dims(a, b)
    ra, rb, d = _common(a, b)
    return HnfLattice.from_rows(ra + rb, d)


def lattice_intersect(a, b):
    """Intersection of two lattices via the kernel of the stacked system.

    Rows ``(u, u)`` for ``u`` in ``a`` and ``(v, 0)`` for ``v`` in ``b`` span a
    lattice whose elements with vanishing first half are exactly ``(0, w)``
    with ``w`` in the intersection.
    """
    _check_dims(a, b)
    n = a.dim
    ra, rb, d = _common(a, b)
    stacked = [r + r for r in ra] + [r + [0] * n for r in rb]
    h = hnf(stacked)
    return HnfLattice.from_rows([r[n:] for r in h[n:]], d)


def snf(mat):
    """Invariant factors ``d1 | d2 | ... | dn`` of the cokernel of a full-rank matrix."""
    a = [list(r) for r in hnf(mat)]
    n = len(a)
    for t in range(n):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n) if a[i][j]]
            _, i, j = min(nz)
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                dirty |= a[i][t] != 0
            for j in range(t + 1, n):
                q = a[t][j] // piv
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                dirty |= a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
    return [abs(a[i][i]) for i in range(n)]


def _require_prime(p):
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")


def rref_mod_p(rows, p):
    """Reduced row echelon form over F_p; returns ``(rows, pivot_columns)``."""
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel_mod_p(mat, p):
    """Row basis, in reduced echelon form, of ``{v : v . mat == 0 (mod p)}``."""
    _require_prime(p)
    if not mat:
        return []
    basis, _ = rref_mod_p(_left_kernel(mat, p), p)
    return [list(r) for r in basis]


def _left_kernel(mat, p):
    # null space of the transpose
    t = [[mat[i][j] % p for i in range(len(mat))] for j in range(len(mat[0]))]
    red, pivots = rref_mod_p(t, p)
    nvars = len(mat)
    free = [c for c in range(nvars) if c not in pivots]
    kern = []
    for f in free:
        v = [0] * nvars
        v[f] = 1
        for row, c in zip(red, pivots):
            v[c] = -row[f] % p
        kern.append(v)
    return kern
