"""Bounded genus searches and the vertex bounds that justify them."""
# %%
import time

from coxrigid import (EnumerationConfig, cycle_graph, enumerate_graphs, family_membership,
                      genus_bounds, genus_search, path_graph)

# %% how fast the search space grows
for n in range(1, 5):
    cfg = EnumerationConfig(n, 4, connected_only=True, min_vertices=n)
    t = time.perf_counter()
    print(n, sum(1 for _ in enumerate_graphs(cfg)), f"{time.perf_counter() - t:.2f}s")

# %% an odd path: the bound says at most 5 vertices, and |E| - |V| is fixed
g = path_graph([3, 3, 3])
print(genus_bounds(g, 3).to_dict())
print(family_membership(g).verdict)

# %%
rep = genus_search(g, EnumerationConfig(5, 3, connected_only=True))
print(rep.verdict, rep.examined, "examined")
for cls in rep.classes:
    print([sorted(m for *_, m in h.edges) for h in cls])

# %% an extra-large square
sq = cycle_graph([4, 4, 4, 4])
print(genus_bounds(sq, 4).effective_bound)
print(genus_search(sq, EnumerationConfig(4, 4)).verdict)

# %% dropping fields widens the candidate set
loose = genus_search(path_graph([3, 3]), EnumerationConfig(3, 4), fields=["FA", "odd"])
print(loose.verdict, len(loose.candidates))
