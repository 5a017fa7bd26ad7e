"""The order Z + 2aZ + 2a^2Z + 4a^3Z: clean when sampled, bad in one step up."""

# %%
from normring import catalog, colon_ideal, g_global, local_norm, primes_above, unit_ideal
from normring.audit import AuditConfig, construct_counterexample, supermult_sample
from normring.lattice import lattice_index

R4 = catalog.r4()
Rt = catalog.quartic_maximal()
(m,) = primes_above(R4, 2)
print("R4 =", R4)
print("g per prime:", g_global(R4, Rt).per_prime)

# %% The colon (R4 : m) sits over R4 with index 2.
print("[(R4:m):R4] =", lattice_index(colon_ideal(unit_ideal(R4), m.ideal).lattice, R4.lattice))

# %% Norms split into local pieces; here everything lives at the prime above 2.
I = m.ideal * m.ideal
print("N(m^2) =", I.norm, " local part at m:", local_norm(I, m))

# %% Sampling R4 itself finds nothing. That is evidence, not proof.
rep = supermult_sample(R4, AuditConfig(trials=300, seed=0), Rt)
print(rep.pairs_checked, "pairs:", rep.verdict)

# %% The extension R4 + m Rt is Z + 2Z[a] again, and there the violation is explicit.
ce = construct_counterexample(R4, m, Rt)
print("extension equals Z + 2Z[a]:", ce.extension == catalog.r2())
print("[IJ:R'] =", ce.index_IJ, " [I:R'][J:R'] =", ce.index_I * ce.index_J)
