"""Dedekind's cubic: 2 splits completely although f has no three roots mod 2."""

# %%
from normring import catalog, equation_order, find_extension_generator, g_global, normalize, primes_above
from normring.field import lattice_product

K = catalog.cubic_field()  # x^3 - x^2 - 2x - 8
Z = equation_order(K)
O3 = normalize(Z)
print("disc Z[a] =", Z.disc, " disc O3 =", O3.disc)

# %% Factoring f mod 2 cannot see the splitting; the residue algebra does.
for m in primes_above(O3, 2):
    print("prime above 2 with residue degree", m.res_deg, "idempotent", m.idempotent)

# %% In R3 = Z + 2 O3 the local generator count is 3, one short of forcing a violation.
R3 = catalog.r3()
print("g(R3) per prime:", g_global(R3, O3).per_prime)

# %% The ideal J3 generates O3 but no single element of J3 does so at 2.
J3 = catalog.lenstra_ideal()
print("J3 O3 == O3:", lattice_product(K, J3.lattice, O3.lattice) == O3.lattice)
print("generator inside J3:", find_extension_generator(J3, O3, 2) or "NotFound")
