from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from normring import catalog
from normring.errors import CannotCertify, NotClosed, NotMonic, NotUnital, RankDeficient, Reducible
from normring.field import (
    elem_inv,
    elem_mul,
    equation_order,
    field_create,
    order_create,
    order_disc,
)
from normring.lattice import HnfLattice

x = sympy.Symbol("x")


def _sympy_poly(coeffs):
    return sympy.Poly(list(reversed(coeffs)), x)


def test_field_create_examples():
    K = field_create([1, 0, 1])
    assert K.degree == 2
    K4 = field_create([1, 1, 0, 0, 1])
    assert K4.degree == 4
    assert str(K4.certificate) == "irreducible mod 2"
    with pytest.raises(Reducible) as exc:
        field_create([-1, 0, 1])
    assert tuple(exc.value.witness) in {(-1, 1), (1, 1)}


def test_field_create_errors():
    with pytest.raises(NotMonic):
        field_create([1, 0, 2])
    with pytest.raises(ValueError):
        field_create([1, 1])


def test_irreducible_everywhere_locally_needs_fallback():
    # x^4 + 1 is reducible mod every prime but irreducible over Q
    K = field_create([1, 0, 0, 0, 1])
    assert K.certificate.method == "quadratic-divisor-search"
    with pytest.raises(Reducible):
        field_create([1, 0, -3, 0, 1])  # (x^2 + x - 1)(x^2 - x - 1)


def test_assume_irreducible_override():
    # product of two quadratics; degree 6 has no certificate path
    f = [int(c) for c in reversed(_sympy_poly([1, 0, 0, 0, 1]).mul(_sympy_poly([2, 0, 1])).all_coeffs())]
    with pytest.raises(CannotCertify):
        field_create(f)
    K = field_create(f, assume_irreducible=True)
    assert K.certificate.method == "assumed"


def test_elem_examples():
    K = field_create([1, 0, 1])
    two_i = K.elem([0, 2])
    assert elem_mul(K, two_i, two_i).coords == (-4, 0)
    K4 = catalog.quartic_field()
    a = K4.gen
    assert (a**3 * a).coords == (-1, -1, 0, 0)
    with pytest.raises(ZeroDivisionError):
        elem_inv(K4, K4.zero)


def test_order_create_examples():
    K = field_create([1, 0, 1])
    R = order_create(K, [K.one, K.elem([0, 2])])
    assert R == catalog.z2i()
    with pytest.raises(NotClosed):
        order_create(K, [K.one, K.elem([0, Fraction(1, 2)])])
    with pytest.raises(NotUnital):
        order_create(K, [K.elem([2, 0]), K.elem([0, 1])])
    with pytest.raises(RankDeficient):
        order_create(K, [K.one])
    K4 = catalog.quartic_field()
    R2 = order_create(K4, [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]])
    assert R2 == catalog.r2()


def test_equation_order_is_identity():
    for f in ([1, 0, 1], catalog.QUARTIC, catalog.DEDEKIND_CUBIC):
        R = equation_order(field_create(f))
        assert R.lattice == HnfLattice.standard(len(f) - 1)


def test_disc_examples():
    assert order_disc(catalog.gaussian()) == -4
    assert order_disc(catalog.z2i()) == -16
    assert order_disc(catalog.quartic_maximal()) == 229
    assert order_disc(catalog.r2()) == 229 * 2**6


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4))
def test_equation_order_disc_matches_resultant(low):
    f = [*low, 1]
    if not _sympy_poly(f).is_irreducible:
        return
    K = field_create(f, assume_irreducible=True)
    assert order_disc(equation_order(K)) == int(sympy.discriminant(_sympy_poly(f)))


@given(st.sampled_from([catalog.gaussian, catalog.quartic_maximal, catalog.o3]), st.integers(2, 12))
def test_disc_scaling(make, c):
    R = make()
    S = R.suborder(c)
    assert S <= R
    assert order_disc(S) == c ** (2 * (R.degree - 1)) * order_disc(R)


@given(st.integers(2, 12))
def test_disc_scaling_monogenic_suborder(c):
    # Z[c a] has index c^(0+1+2+3) in Z[a]
    K = catalog.quartic_field()
    S = order_create(K, [(K.gen * c) ** k for k in range(4)])
    assert order_disc(S) == c**12 * order_disc(equation_order(K))


def _random_elem(K, rng):
    return K.elem(
        [
            Fraction(int(a), int(b))
            for a, b in zip(rng.integers(-9, 10, K.degree), rng.integers(1, 5, K.degree))
        ]
    )


@given(st.sampled_from([(1, 0, 1), catalog.QUARTIC, catalog.DEDEKIND_CUBIC]), st.integers(0, 2**32))
def test_elem_ring_axioms(f, seed):
    K = field_create(f)
    rng = np.random.default_rng(seed)
    a, b, c = (_random_elem(K, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a != K.zero:
        assert a * elem_inv(K, a) == K.one
        assert (b / a) * a == b


def test_order_basis_coordinates_roundtrip():
    R = catalog.r4()
    for i, b in enumerate(R.basis):
        c = R.coords(b)
        assert c == [int(j == i) for j in range(4)]
    assert R.field.gen not in R
    assert R.field.gen * 2 in R
