"""Exact arithmetic for orders and fractional ideals in number fields.

The package audits super-multiplicativity of the ideal norm ``N(I) = [R : I]``
in non-maximal orders and relates it to the number of generators needed for
ideals, through the local invariant ``dim_k Rt / m Rt``.
"""

from .audit import (
    AuditConfig,
    classify_algebra,
    construct_counterexample,
    dedekind_test,
    supermult_sample,
    theorem11_audit,
)
from .field import (
    FieldElem,
    NumberField,
    Order,
    elem_inv,
    elem_mul,
    equation_order,
    field_create,
    order_create,
    order_disc,
)
from .ideal import (
    FracIdeal,
    colon_ideal,
    ideal_generate,
    ideal_norm,
    ideal_product,
    is_invertible,
    multiplier_ring,
    unit_ideal,
)
from .lattice import (
    HnfLattice,
    hnf,
    kernel_mod_p,
    lattice_index,
    lattice_intersect,
    lattice_sum,
    snf,
)
from .local import (
    FpAlgebra,
    MaximalIdeal,
    conductor,
    find_extension_generator,
    g_global,
    g_local,
    local_norm,
    min_generators_at,
    primes_above,
)
from .normalization import factor_disc, normalize, p_maximal_order, p_radical

__version__ = "0.1.0"

__all__ = [
    "AuditConfig",
    "FieldElem",
    "FpAlgebra",
    "FracIdeal",
    "HnfLattice",
    "MaximalIdeal",
    "NumberField",
    "Order",
    "classify_algebra",
    "colon_ideal",
    "conductor",
    "construct_counterexample",
    "dedekind_test",
    "elem_inv",
    "elem_mul",
    "equation_order",
    "factor_disc",
    "field_create",
    "find_extension_generator",
    "g_global",
    "g_local",
    "hnf",
    "ideal_generate",
    "ideal_norm",
    "ideal_product",
    "is_invertible",
    "kernel_mod_p",
    "lattice_index",
    "lattice_intersect",
    "lattice_sum",
    "local_norm",
    "min_generators_at",
    "multiplier_ring",
    "normalize",
    "order_create",
    "order_disc",
    "p_maximal_order",
    "p_radical",
    "primes_above",
    "snf",
    "supermult_sample",
    "theorem11_audit",
    "unit_ideal",
]
