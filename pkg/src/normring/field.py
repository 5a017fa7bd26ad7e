"""Number fields Q[x]/(f), their elements, and orders inside them.

Every element and every lattice lives in power-basis coordinates
``1, a, ..., a^(n-1)`` where ``a`` is the class of ``x``.

>>> K = field_create([1, 0, 1])
>>> i = K.gen
>>> (2 * i) * (2 * i)
FieldElem([-4, 0])
>>> order_disc(order_create(K, [K.one, 2 * i]))
-16
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm

from sympy import divisors, primerange

from . import polyfp
from .errors import (
    CannotCertify,
    DimensionMismatch,
    NotClosed,
    NotMonic,
    NotUnital,
    RankDeficient,
    Reducible,
)
from .lattice import HnfLattice, determinant

__all__ = [
    "Certificate",
    "NumberField",
    "FieldElem",
    "Order",
    "field_create",
    "elem_mul",
    "elem_inv",
    "order_create",
    "equation_order",
    "order_disc",
    "lattice_product",
]

CERTIFY_PRIME_BOUND = 1000


@dataclass(frozen=True)
class Certificate:
    """How irreducibility of the defining polynomial was established."""

    method: str
    witness: object = None

    def __str__(self):
        if self.method == "mod-p":
            return f"irreducible mod {self.witness}"
        return self.method


@dataclass(frozen=True)
class NumberField:
    coeffs: tuple
    certificate: Certificate = field(default=Certificate("assumed"), compare=False)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @cached_property
    def _powers(self):
        # a^k reduced modulo f, as integer vectors, for 0 <= k < 3n
        n = self.degree
        f = self.coeffs
        pw = []
        cur = [1] + [0] * (n - 1)
        for _ in range(3 * n):
            pw.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * f[i] for i, c in enumerate(cur)]
        return pw

    @cached_property
    def traces(self):
        """``Tr(a^k)`` for ``0 <= k <= 2n - 2``."""
        n = self.degree
        pw = self._powers
        return tuple(sum(pw[k + i][i] for i in range(n)) for k in range(2 * n - 1))

    def mul_vec(self, u, v):
        """Product of two coordinate vectors (ints or Fractions)."""
        n = self.degree
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:n])
        pw = self._powers
        for k in range(n, 2 * n - 1):
            c = conv[k]
            if c:
                row = pw[k]
                for i in range(n):
                    out[i] += c * row[i]
        return out

    def trace_vec(self, u):
        t = self.traces
        return sum(x * t[i] for i, x in enumerate(u))

    def elem(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) > self.degree:
            raise DimensionMismatch(f"{len(coords)} coordinates in degree {self.degree}")
        coords += (Fraction(0),) * (self.degree - len(coords))
        return FieldElem(self, coords)

    @property
    def one(self):
        return self.elem([1])

    @property
    def zero(self):
        return self.elem([])

    @property
    def gen(self):
        return self.elem([0, 1])

    def __repr__(self):
        return f"NumberField({list(self.coeffs)})"


@dataclass(frozen=True, eq=True)
class FieldElem:
    field: NumberField
    coords: tuple

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.elem([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return elem_mul(self.field, self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * elem_inv(self.field, other)

    def __rtruediv__(self, other):
        return elem_inv(self.field, self) * other

    def __pow__(self, e):
        if e < 0:
            return elem_inv(self.field, self) ** -e
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coords)

    def num_den(self):
        """Integer coordinate vector and positive denominator."""
        d = lcm(1, *(c.denominator for c in self.coords))
        return [int(c * d) for c in self.coords], d

    def trace(self):
        return self.field.trace_vec(self.coords)

    def __repr__(self):
        return "FieldElem([" + ", ".join(str(c) for c in self.coords) + "])"


# --- field construction ---------------------------------------------------


def _poly_divides(d, f):
    """Exact division of integer polynomials; quotient or None."""
    f = list(f)
    q = [0] * (len(f) - len(d) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c, r = divmod(f[shift + len(d) - 1], d[-1])
        if r:
            return None
        q[shift] = c
        for i, y in enumerate(d):
            f[shift + i] -= c * y
    return q if not any(f) else None


def _rational_root(f):
    # monic: rational roots are integers dividing the constant term
    if f[0] == 0:
        return 0
    for d in divisors(abs(f[0])):
        for r in (d, -d):
            if sum(c * r**i for i, c in enumerate(f)) == 0:
                return r
    return None


def _quadratic_factor(f):
    bound = 1 + max(abs(c) for c in f[:-1])
    for c in divisors(abs(f[0])):
        for cc in (c, -c):
            if cc * cc > bound**4:
                continue
            for b in range(-2 * bound, 2 * bound + 1):
                if _poly_divides([cc, b, 1], f) is not None:
                    return (cc, b, 1)
    return None


def field_create(f, assume_irreducible=False):
    """Build a number field from a monic integer polynomial, constant term first.

    Irreducibility is certified by a sufficient-condition cascade: irreducible
    modulo some prime up to 1000; otherwise, in degree at most 4, absence of a
    rational root plus an exhaustive bounded search for a quadratic divisor.
    ``assume_irreducible`` bypasses a failed certification and is recorded.
    """
    f = tuple(int(c) for c in f)
    if len(f) < 3:
        raise ValueError("degree must be at least 2")
    if f[-1] != 1:
        raise NotMonic(f"leading coefficient {f[-1]} != 1")
    n = len(f) - 1
    for p in primerange(2, CERTIFY_PRIME_BOUND + 1):
        if polyfp.is_irreducible(f, p):
            return NumberField(f, Certificate("mod-p", p))
    r = _rational_root(f)
    if r is not None:
        raise Reducible((-r, 1))
    if n <= 3:
        return NumberField(f, Certificate("no-rational-root"))
    if n == 4:
        q = _quadratic_factor(f)
        if q is not None:
            raise Reducible(q)
        return NumberField(f, Certificate("quadratic-divisor-search"))
    if assume_irreducible:
        return NumberField(f, Certificate("assumed"))
    raise CannotCertify(f"no certificate for {list(f)}; pass assume_irreducible=True")


def elem_mul(K, a, b):
    return FieldElem(K, tuple(K.mul_vec(a.coords, b.coords)))


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        while a and not a[-1]:
            a.pop()
    return q, a


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and not out[-1]:
        out.pop()
    return out


def elem_inv(K, a):
    """Inverse via the extended Euclidean algorithm on (a(x), f(x)) over Q."""
    if not a:
        raise ZeroDivisionError("inverse of zero")
    r0 = [Fraction(c) for c in K.coeffs]
    r1 = list(a.coords)
    while r1 and not r1[-1]:
        r1.pop()
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
    # r1 is a nonzero constant c with s1 * a == c (mod f)
    c = r1[0]
    inv = [x / c for x in s1]
    return K.elem(inv)


# --- orders ---------------------------------------------------------------


def lattice_product(K, a, b):
    """Lattice spanned by all products of basis rows of ``a`` and ``b``."""
    rows = [K.mul_vec(u, v) for u in a.basis for v in b.basis]
    return HnfLattice.from_rows(rows, a.den * b.den)


@dataclass(frozen=True)
class Order:
    """A full-rank unital subring of a number field, stored as a lattice."""

    field: NumberField
    lattice: HnfLattice

    @classmethod
    def from_lattice(cls, K, lattice, check=True):
        if lattice.dim != K.degree:
            raise DimensionMismatch(f"lattice of dim {lattice.dim} in degree {K.degree}")
        R = cls(K, lattice)
        if check:
            R.validate()
        return R

    def validate(self):
        K = self.field
        if not self.lattice.contains([1] + [0] * (K.degree - 1)):
            raise NotUnital("1 is not in the lattice")
        den = self.lattice.den
        rows = self.lattice.basis
        for i, u in enumerate(rows):
            for v in rows[i:]:
                w = K.mul_vec(u, v)
                if not self.lattice.contains(w, den * den):
                    raise NotClosed(K.elem([Fraction(x, den * den) for x in w]))
        return self

    @property
    def degree(self):
        return self.field.degree

    @cached_property
    def basis(self):
        return [self.field.elem(r) for r in self.lattice.rows()]

    def coords(self, x):
        """Coordinates of a field element in the order basis (Fractions)."""
        num, den = x.num_den()
        return self.lattice.solve(num, den)

    def __contains__(self, x):
        return all(c.denominator == 1 for c in self.coords(x))

    @cached_property
    def mult_table(self):
        """Integer structure constants: ``table[i][j]`` = coords of ``b_i * b_j``."""
        K = self.field
        lat = self.lattice
        d2 = lat.den * lat.den
        n = self.degree
        table = [[None] * n for _ in range(n)]
        for i, u in enumerate(lat.basis):
            for j in range(i, n):
                c = lat.solve(K.mul_vec(u, lat.basis[j]), d2)
                c = tuple(int(x) for x in c)
                table[i][j] = table[j][i] = c
        return tuple(tuple(r) for r in table)

    @cached_property
    def one_coords(self):
        return tuple(int(c) for c in self.coords(self.field.one))

    @cached_property
    def disc(self):
        return order_disc(self)

    def elem_from_coords(self, coords):
        """Field element with the given order-basis coordinates."""
        n = self.degree
        den = self.lattice.den
        vec = [sum(Fraction(c) * self.lattice.basis[i][k] for i, c in enumerate(coords)) for k in range(n)]
        return self.field.elem([v / den for v in vec])

    def __le__(self, other):
        return other.lattice.contains_lattice(self.lattice)

    def __ge__(self, other):
        return self.lattice.contains_lattice(other.lattice)

    def suborder(self, c):
        """The order ``Z + c * self``."""
        K = self.field
        den = self.lattice.den
        rows = [[den] + [0] * (K.degree - 1)] + [[c * x for x in r] for r in self.lattice.basis]
        return Order.from_lattice(K, HnfLattice.from_rows(rows, den))

    def __repr__(self):
        rows = "; ".join(",".join(str(x) for x in r) for r in self.lattice.basis)
        return f"Order({list(self.field.coeffs)}, [{rows}]/{self.lattice.den})"


def order_create(K, basis):
    """Order spanned by ``basis`` (FieldElems or coordinate lists), validated."""
    rows = [b.coords if isinstance(b, FieldElem) else b for b in basis]
    if len(rows) < K.degree:
        raise RankDeficient(f"{len(rows)} elements cannot span degree {K.degree}")
    lat = HnfLattice.from_fractions(rows)
    return Order.from_lattice(K, lat)


def equation_order(K):
    return Order.from_lattice(K, HnfLattice.standard(K.degree), check=False)


def order_disc(R):
    """Determinant of the trace form on a basis of ``R``."""
    K = R.field
    lat = R.lattice
    n = K.degree
    rows = lat.basis
    gram = [[K.trace_vec(K.mul_vec(rows[i], rows[j])) for j in range(n)] for i in range(n)]
    d = Fraction(determinant(gram), lat.den ** (2 * n))
    assert d.denominator == 1
    return int(d)
