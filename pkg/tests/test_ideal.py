from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from normring import catalog
from normring.audit import random_ideal
from normring.errors import OrderMismatch, ZeroIdeal
from normring.ideal import (
    FracIdeal,
    colon_ideal,
    ideal_generate,
    ideal_norm,
    ideal_product,
    is_invertible,
    multiplier_ring,
    unit_ideal,
)
from normring.lattice import HnfLattice
from normring.local import primes_above

ORDERS = [catalog.gaussian, catalog.z2i, catalog.r2, catalog.r3, catalog.r4]


def _diag(*d):
    return HnfLattice.from_rows([[d[i] if i == j else 0 for j in range(len(d))] for i in range(len(d))])


def test_generate_examples():
    R = catalog.z2i()
    assert ideal_generate(R, [2, [0, 2]]).lattice == _diag(2, 2)
    for make in ORDERS:
        S = make()
        assert ideal_generate(S, [1]).lattice == S.lattice
    R2, I, J, M = catalog.degree4_ideals(2)
    assert I.lattice == _diag(2, 2, 4, 4)
    with pytest.raises(ZeroIdeal):
        ideal_generate(R, [0])


def test_product_examples():
    R = catalog.z2i()
    I = ideal_generate(R, [2, [0, 2]])
    assert ideal_product(I, I).lattice == _diag(4, 4)
    assert I * unit_ideal(R) == I
    R2, I, J, M = catalog.degree4_ideals(2)
    assert (I * J).lattice == _diag(4, 4, 4, 4)
    with pytest.raises(OrderMismatch):
        ideal_product(I, unit_ideal(catalog.r4()))


def test_norm_examples():
    R = catalog.z2i()
    I = ideal_generate(R, [2, [0, 2]])
    assert ideal_norm(I) == 2 and ideal_norm(I * I) == 8
    assert ideal_norm(unit_ideal(R)) == 1
    R2, I, J, M = catalog.degree4_ideals(2)
    assert M.norm == 2 and (I * M).norm == 32


def test_norm_of_fractional_ideal():
    R = catalog.gaussian()
    half = ideal_generate(R, [Fraction(1, 2)])
    assert half.norm == Fraction(1, 4)
    assert not half.is_integral


def test_colon_examples():
    R = catalog.z2i()
    I = ideal_generate(R, [2, [0, 2]])
    unit = unit_ideal(R)
    assert colon_ideal(unit, I).lattice == catalog.gaussian().lattice
    assert colon_ideal(I, unit) == I
    assert colon_ideal(unit, unit) == unit


def test_multiplier_ring_examples():
    R = catalog.z2i()
    I = ideal_generate(R, [2, [0, 2]])
    assert multiplier_ring(I) == catalog.gaussian()
    assert multiplier_ring(unit_ideal(R)) == R
    # (2, 2a) in Z + 2Z[a]: a * 2a = 2a^2 is not in I, so nothing larger stabilizes it
    R2, I2, _, M = catalog.degree4_ideals(2)
    assert multiplier_ring(I2) == R2
    assert multiplier_ring(M) == catalog.quartic_maximal()


def test_invertibility_examples():
    R = catalog.z2i()
    assert not is_invertible(ideal_generate(R, [2, [0, 2]]))
    assert is_invertible(ideal_generate(R, [[3, 4]]))
    G = catalog.gaussian()
    assert all(
        is_invertible(ideal_generate(G, [[a, b], [c, 1]])) for a, b, c in [(2, 0, 1), (5, 1, 3), (3, 3, 0)]
    )


# --- properties -----------------------------------------------------------


@pytest.mark.parametrize("make", ORDERS, ids=lambda f: f.__name__)
def test_principal_scaling(make):
    R = make()
    rng = np.random.default_rng(0)
    done = 0
    while done < 200:
        I = random_ideal(R, rng, 6)
        x = R.elem_from_coords([int(c) for c in rng.integers(-6, 7, R.degree)])
        if x == R.field.zero:
            continue
        xR = ideal_generate(R, [x])
        assert xR.norm * I.norm == I.scale(x).norm
        assert I.scale(x) == xR * I
        done += 1


@given(st.sampled_from(ORDERS), st.integers(0, 2**32))
def test_invertible_multiplicativity(make, seed):
    R = make()
    rng = np.random.default_rng(seed)
    I = random_ideal(R, rng, 6)
    J = random_ideal(R, rng, 6)
    if is_invertible(I):
        assert (I * J).norm == I.norm * J.norm


@given(st.sampled_from(ORDERS), st.integers(0, 2**32))
def test_product_algebra(make, seed):
    R = make()
    rng = np.random.default_rng(seed)
    I, J, L = (random_ideal(R, rng, 5, max_gens=2) for _ in range(3))
    assert I * J == J * I
    assert (I * J) * L == I * (J * L)
    assert I * unit_ideal(R) == I
    assert (I + J) * L == I * L + J * L


@given(st.sampled_from(ORDERS), st.integers(0, 2**32))
def test_colon_characterization(make, seed):
    R = make()
    rng = np.random.default_rng(seed)
    I, J = random_ideal(R, rng, 5), random_ideal(R, rng, 5)
    C = colon_ideal(I, J)
    assert C * J <= I
    S = multiplier_ring(I)
    assert S >= R
    assert I.scale(1) * FracIdeal(R, S.lattice) == I


QUADRATICS = [(-1, 2), (-1, 3), (-3, 2), (-3, 6), (2, 3), (5, 4), (-5, 2), (3, 5), (-7, 4), (13, 3)]


@given(st.sampled_from(QUADRATICS), st.integers(0, 2**32))
def test_quadratic_multiplier_invertibility(dc, seed):
    d, c = dc
    R, _ = catalog.quadratic_order(d, c)
    I = random_ideal(R, np.random.default_rng(seed), 8)
    S = multiplier_ring(I)
    assert is_invertible(I.over(S))


def test_maximal_order_ideals_multiplicative():
    G = catalog.gaussian()
    rng = np.random.default_rng(0)
    for _ in range(30):
        I, J = random_ideal(G, rng, 6), random_ideal(G, rng, 6)
        assert is_invertible(I)
        assert (I * J).norm == I.norm * J.norm


def test_maximal_ideal_norm_scaling_in_gaussian():
    G = catalog.gaussian()
    (m,) = primes_above(G, 2)
    I = ideal_generate(G, [[1, 1]])
    assert (m.ideal * I).norm == I.norm * m.norm
