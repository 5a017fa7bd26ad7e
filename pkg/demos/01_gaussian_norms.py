"""Ideal norms in Z[2i], where the norm stops being multiplicative."""

# %%
from normring import catalog, dedekind_test, ideal_generate, is_invertible, multiplier_ring

R = catalog.z2i()  # Z + 2Z[i]
print("order:", R)
print("disc:", R.disc)

# %% The ideal (2, 2i) has index 2 but its square has index 8, not 4.
I = ideal_generate(R, [2, [0, 2]])
print("N(I)   =", I.norm)
print("N(I^2) =", (I * I).norm)

# %% The failure comes from I not being invertible. Its multiplier ring is Z[i].
print("invertible:", is_invertible(I))
print("multiplier ring:", multiplier_ring(I))

# %% The same lattice is the maximal ideal above 2, so the Dedekind check fails there.
report = dedekind_test(R, p_bound=20)
print(report.verdict)
for row in report.failures:
    print("  prime", row["label"], "N(m)", row["N(m)"], "N(m^2)", row["N(m^2)"])

# %% In the maximal order Z[i] every ideal is invertible and norms multiply.
G = catalog.gaussian()
J = ideal_generate(G, [[1, 1]])
print("Z[i]: N(J)^2 =", J.norm**2, " N(J^2) =", (J * J).norm)
