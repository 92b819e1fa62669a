"""Two pairs of graphs: one separated by the invariants, one presenting the same group."""
# %%
from coxrigid import CoxeterGraph, compare, known_iso_normalize, path_graph, star_graph, triangle
from coxrigid.classification import cf_max
from coxrigid.io import render_text

# %% equal maximal finite subgroups, different groups
delta = triangle(4, 4, 6)
omega = CoxeterGraph("abcd", [("a", "b", 4), ("a", "c", 4), ("b", "c", 2), ("c", "d", 3),
                              ("b", "d", 2)])
print(cf_max(delta).group_multiset())
print(cf_max(omega).group_multiset())

rep = compare(delta, omega)
print(rep.overall, "first:", rep.first_distinguishing)
for f in rep.fields:
    if f.differs:
        print(f"  {f.name:22s} {str(f.value1):20s} {str(f.value2):20s} {f.status}")

# %% path and star with labels 3: the Muhlherr pair
p, s = path_graph([3, 3, 3]), star_graph([3, 3, 3])
rep = compare(p, s)
print(rep.overall, "same known class:", rep.same_known_class)
print(render_text(known_iso_normalize(s)))

# %% the other move: a vertex hanging off an odd edge by two commuting edges
print(render_text(known_iso_normalize(triangle(2, 2, 5))))
