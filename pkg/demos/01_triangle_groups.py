"""Triangle groups: spherical, affine and hyperbolic in one sweep."""
# %%
import itertools
from collections import Counter

import numpy as np

from coxrigid import gram_matrix, invariant_vector, triangle
from coxrigid.gram import signature_class

# %% [markdown]
# Delta(p, q, r) is finite, affine or hyperbolic according to the sign of
# 1/p + 1/q + 1/r - 1. The Gram form sees the same split.

# %%
kinds = Counter()
for p, q, r in itertools.combinations_with_replacement(range(2, 8), 3):
    s = signature_class(gram_matrix(triangle(p, q, r)))
    kinds[s.verdict] += 1
print(kinds)

# %%
B = gram_matrix(triangle(2, 3, 7))
print(np.round(B, 4))
print("eigenvalues", np.round(np.linalg.eigvalsh(B), 4))

# %% a hyperbolic, an affine and a spherical triangle side by side
for pqr in [(2, 3, 7), (3, 3, 3), (2, 3, 5)]:
    v = invariant_vector(triangle(*pqr))
    print(pqr, {k: v.flat()[k] for k in ("chi", "ends", "vcd", "hyperbolic", "virtually_surface")})

# %% chi over a grid; the zero level set is the affine family
chi = np.array([[float(invariant_vector(triangle(2, q, r))["chi"]) for r in range(3, 10)]
                for q in range(3, 10)])
print(np.round(chi * 84, 2))
