"""Orders and ideals that recur in the worked examples.

>>> R = z2i()
>>> I = ideal_generate(R, [2, [0, 2]])
>>> I.norm, (I * I).norm
(Fraction(2, 1), Fraction(8, 1))
"""

from functools import lru_cache

from sympy import factorint

from .field import Order, equation_order, field_create
from .ideal import ideal_generate
from .lattice import HnfLattice
from .local import residue_preimage
from .normalization import normalize

QUARTIC = (1, 1, 0, 0, 1)  # x^4 + x + 1
DEDEKIND_CUBIC = (-8, -2, -1, 1)  # x^3 - x^2 - 2x - 8, 2 is a common index divisor

__all__ = [
    "QUARTIC",
    "DEDEKIND_CUBIC",
    "gaussian",
    "z2i",
    "quartic_field",
    "quartic_maximal",
    "r2",
    "r4",
    "degree4_ideals",
    "cubic_field",
    "o3",
    "r3",
    "lenstra_ideal",
    "quadratic_order",
    "field_discriminant",
]


@lru_cache(maxsize=None)
def gaussian():
    """``Z[i]``."""
    return equation_order(field_create([1, 0, 1]))


@lru_cache(maxsize=None)
def z2i():
    """``Z[2i] = Z + 2 Z[i]``."""
    return gaussian().suborder(2)


@lru_cache(maxsize=None)
def quartic_field():
    return field_create(QUARTIC)


@lru_cache(maxsize=None)
def quartic_maximal():
    """``Z[a]`` for ``a^4 + a + 1 = 0``; maximal since the discriminant 229 is prime."""
    return equation_order(quartic_field())


@lru_cache(maxsize=None)
def r2(p=2):
    """``Z + p Z[a]`` in the quartic field."""
    return quartic_maximal().suborder(p)


@lru_cache(maxsize=None)
def r4(p=2):
    """``Z + pa Z + pa^2 Z + p^2 a^3 Z``, a local-type order inside ``r2(p)``."""
    K = quartic_field()
    rows = [[1, 0, 0, 0], [0, p, 0, 0], [0, 0, p, 0], [0, 0, 0, p * p]]
    return Order.from_lattice(K, HnfLattice.from_rows(rows))


def degree4_ideals(p=2):
    """The ideals ``I = (p, pa)``, ``J = (p, pa^2)`` and ``M = p Z[a]`` of ``r2(p)``."""
    R = r2(p)
    a = R.field.gen
    I = ideal_generate(R, [p, p * a])
    J = ideal_generate(R, [p, p * a * a])
    M = ideal_generate(R, [p, p * a, p * a**2, p * a**3])
    return R, I, J, M


@lru_cache(maxsize=None)
def cubic_field():
    return field_create(DEDEKIND_CUBIC)


@lru_cache(maxsize=None)
def o3():
    """Maximal order of the Dedekind cubic field, index 2 over ``Z[a]``."""
    return normalize(equation_order(cubic_field()))


@lru_cache(maxsize=None)
def r3():
    """``Z + 2 O_3``: 2 splits completely in ``O_3``."""
    return o3().suborder(2)


def lenstra_ideal():
    """Preimage in ``O_3`` of the subgroup of ``F_2^3`` spanned by (1,0,1), (0,1,1)."""
    return residue_preimage(r3(), o3(), 2, [(1, 0, 1), (0, 1, 1)])


def _squarefree(d):
    return all(e == 1 for e in factorint(abs(d)).values())


def quadratic_order(d, c=1):
    """Order of conductor ``c`` in ``Q(sqrt d)`` for a squarefree ``d != 0, 1``.

    Returns ``(order, maximal order)``.
    """
    if d in (0, 1) or not _squarefree(d):
        raise ValueError(f"{d} is not a squarefree integer other than 0, 1")
    if d % 4 == 1:
        K = field_create([(1 - d) // 4, -1, 1])  # root (1 + sqrt d) / 2
    else:
        K = field_create([-d, 0, 1])
    O = equation_order(K)
    return (O.suborder(c) if c > 1 else O), O


def field_discriminant(d):
    return d if d % 4 == 1 else 4 * d
