"""Fractional ideals of an order.

An ideal is stored only as its canonical lattice, so equality of ideals is
equality of Hermite bases. Norms are generalized indices ``[R : I]`` and are
exact Fractions; they are integers exactly when ``I`` lies inside ``R``.

>>> from normring.field import field_create, order_create
>>> K = field_create([1, 0, 1])
>>> R = order_create(K, [K.one, 2 * K.gen])
>>> I = ideal_generate(R, [K.elem([2]), K.elem([0, 2])])
>>> ideal_norm(I), ideal_norm(I * I)
(Fraction(2, 1), Fraction(8, 1))
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from .errors import NotClosed, OrderMismatch, ZeroIdeal
from .field import FieldElem, Order, elem_inv, lattice_product
from .lattice import HnfLattice, lattice_index, lattice_intersect, lattice_sum

__all__ = [
    "FracIdeal",
    "ideal_generate",
    "ideal_product",
    "ideal_norm",
    "colon_ideal",
    "colon_lattice",
    "multiplier_ring",
    "is_invertible",
    "unit_ideal",
]


@dataclass(frozen=True)
class FracIdeal:
    order: Order
    lattice: HnfLattice

    @classmethod
    def from_lattice(cls, R, lattice, check=True):
        I = cls(R, lattice)
        if check:
            I.validate()
        return I

    def validate(self):
        """Check that the lattice is a module over the owning order."""
        K = self.order.field
        lat = self.lattice
        d = self.order.lattice.den * lat.den
        for b in self.order.lattice.basis:
            for v in lat.basis:
                w = K.mul_vec(b, v)
                if not lat.contains(w, d):
                    raise NotClosed(K.elem([Fraction(x, d) for x in w]))
        return self

    @property
    def field(self):
        return self.order.field

    @cached_property
    def norm(self):
        return lattice_index(self.order.lattice, self.lattice)

    @cached_property
    def is_integral(self):
        return self.order.lattice.contains_lattice(self.lattice)

    @cached_property
    def basis(self):
        return [self.field.elem(r) for r in self.lattice.rows()]

    def __contains__(self, x):
        num, den = x.num_den()
        return self.lattice.contains(num, den)

    def __le__(self, other):
        return other.lattice.contains_lattice(self.lattice)

    def __ge__(self, other):
        return self.lattice.contains_lattice(other.lattice)

    def _check(self, other):
        if self.order != other.order:
            raise OrderMismatch("ideals belong to different orders")

    def __mul__(self, other):
        if isinstance(other, FracIdeal):
            return ideal_product(self, other)
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        self._check(other)
        return FracIdeal(self.order, lattice_sum(self.lattice, other.lattice))

    def __and__(self, other):
        self._check(other)
        return FracIdeal(self.order, lattice_intersect(self.lattice, other.lattice))

    def __pow__(self, e):
        if e < 1:
            raise ValueError("only positive powers")
        result = self
        for _ in range(e - 1):
            result = result * self
        return result

    def scale(self, x):
        """The ideal ``x * I`` for a nonzero field element or rational ``x``."""
        if isinstance(x, (int, Fraction)):
            return FracIdeal(self.order, self.lattice.scale(x))
        if not x:
            raise ZeroIdeal("scaling by zero")
        return FracIdeal(self.order, _scale_lattice(self.field, self.lattice, x))

    def over(self, order):
        """The same lattice viewed as an ideal of another order (validated)."""
        return FracIdeal.from_lattice(order, self.lattice)

    def integral_multiplier(self):
        """Smallest positive integer ``d`` with ``d * I`` inside the order."""
        d = 1
        for r in self.lattice.basis:
            for c in self.order.lattice.solve(r, self.lattice.den):
                d = lcm(d, c.denominator)
        return d

    def __repr__(self):
        rows = "; ".join(",".join(str(x) for x in r) for r in self.lattice.basis)
        return f"FracIdeal([{rows}]/{self.lattice.den})"


def _scale_lattice(K, lat, x):
    num, den = x.num_den()
    rows = [K.mul_vec(num, r) for r in lat.basis]
    return HnfLattice.from_rows(rows, den * lat.den)


def _as_elem(K, g):
    if isinstance(g, FieldElem):
        return g
    if isinstance(g, (int, Fraction)):
        return K.elem([g])
    return K.elem(g)


def unit_ideal(R):
    return FracIdeal(R, R.lattice)


def ideal_generate(R, gens):
    """The ideal ``sum g * R`` over the given generators."""
    K = R.field
    gens = [_as_elem(K, g) for g in gens]
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroIdeal("no nonzero generator")
    nds = [g.num_den() for g in gens]
    d = lcm(*(den for _, den in nds))
    rows = []
    for num, den in nds:
        s = d // den
        scaled = [x * s for x in num]
        rows.extend(K.mul_vec(scaled, b) for b in R.lattice.basis)
    return FracIdeal(R, HnfLattice.from_rows(rows, d * R.lattice.den))


def ideal_product(I, J):
    I._check(J)
    return FracIdeal(I.order, lattice_product(I.field, I.lattice, J.lattice))


def ideal_norm(I):
    return I.norm


def colon_lattice(K, A, B):
    """``{x in K : x * B inside A}`` for full-rank lattices ``A`` and ``B``.

    Each basis element ``b`` of ``B`` contributes the condition
    ``x in b^-1 * A``; the answer is the intersection of those lattices.
    """
    result = None
    for r in B.basis:
        b = K.elem([Fraction(x, B.den) for x in r])
        piece = _scale_lattice(K, A, elem_inv(K, b))
        result = piece if result is None else lattice_intersect(result, piece)
    return result


def colon_ideal(I, J):
    """``(I : J) = {x : x * J inside I}`` as an ideal of the common order."""
    I._check(J)
    return FracIdeal(I.order, colon_lattice(I.field, I.lattice, J.lattice))


def multiplier_ring(I):
    """The order ``{x : x * I inside I}``, re-validated as a ring."""
    lat = colon_lattice(I.field, I.lattice, I.lattice)
    S = Order.from_lattice(I.field, lat)
    assert S.lattice.contains_lattice(I.order.lattice), "multiplier ring misses the order"
    return S


def is_invertible(I):
    R = unit_ideal(I.order)
    return ideal_product(I, colon_ideal(R, I)) == R
