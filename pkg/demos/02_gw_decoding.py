"""
Linear-algebraic list decoding
==============================

Interpolate, then solve for the affine space of candidate messages.
"""

# %%
import numpy as np
from frslab import FrsCode
from frslab.decode import gw_radius, gw_subspace, brute_force_list, interpolation_degree
from frslab.experiments import planted_word

code = FrsCode(13, 3, 3, 4)
m = 2
print("D =", interpolation_degree(code, m), " guaranteed radius =", gw_radius(code, m))

# %%
rng = np.random.default_rng(0)
f = code.message([4, 0, 7])
y = planted_word(code, rng, [f], noise=0.25)
A = gw_subspace(code, y, m)
print("dim A =", A.dim)

# %%
# everything in the ball is in A
L = brute_force_list(code, y, gw_radius(code, m))
print(L, all(g in A for g in L))
