"""A quartic order where N(IJ) < N(I)N(J), and where it comes from."""

# %%
from normring import catalog, g_global, primes_above
from normring.audit import AuditConfig, construct_counterexample, supermult_sample

p = 2
R, I, J, M = catalog.degree4_ideals(p)  # R = Z + pZ[a], a^4 + a + 1 = 0
Rt = catalog.quartic_maximal()
print("R =", R)
print("N(I), N(J), N(IJ) =", I.norm, J.norm, (I * J).norm)
print("so N(I)N(J) =", I.norm * J.norm, "exceeds N(IJ)")

# %% With M = pZ[a] the inequality goes the other way.
print("N(I)N(M) =", I.norm * M.norm, " N(IM) =", (I * M).norm)

# %% The residue algebra Z[a]/2Z[a] is F_16, so the local generator count is 4.
G = g_global(R, Rt)
print("g per singular prime:", G.per_prime, "max:", G.max_local)

# %% Any order with a prime of local count >= 4 yields an explicit bad pair.
(m,) = primes_above(R, p)
ce = construct_counterexample(R, m, Rt)
print("witness x, y:", ce.x, ce.y)
print("[I:R'] [J:R'] [IJ:R'] =", ce.index_I, ce.index_J, ce.index_IJ)

# %% Random sampling plus targeted probes finds the same phenomenon.
rep = supermult_sample(R, AuditConfig(trials=50, seed=0), Rt)
print(rep.pairs_checked, "pairs:", rep.verdict)
print("first:", rep.violations[0].source, rep.violations[0].norm_I, rep.violations[0].norm_J, rep.violations[0].norm_IJ)
