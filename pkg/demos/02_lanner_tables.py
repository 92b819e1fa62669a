"""Recompute the maximal finite subgroups of the compact hyperbolic simplex groups."""
# %%
from coxrigid.tables import ERRATA, LANNER4, LANNER5, check_lanner
from coxrigid.topology import nerve, reduced_cohomology, vcd

# %%
for name in ("lanner4", "lanner5"):
    print(name)
    for row in check_lanner(name):
        flag = "ok" if row.match else "MISMATCH"
        note = f"  (printed under {row.erratum})" if row.erratum else ""
        print(f"  {row.label}: {', '.join(row.computed):45s} {flag}{note}")

# %% [markdown]
# Two rows of the rank-5 table carry each other's columns; ERRATA records the swap.

# %%
print(ERRATA)

# %% the nerve of a rank-n simplex group is the boundary of an (n-1)-simplex
g = LANNER4[4].graph
K = nerve(g)
print("faces", len(K.faces), "dimension", K.dimension)
print(reduced_cohomology(K).to_dict())

# %%
print("vcd rank 4:", [vcd(r.graph) for r in LANNER4])
print("vcd rank 5:", [vcd(r.graph) for r in LANNER5])
