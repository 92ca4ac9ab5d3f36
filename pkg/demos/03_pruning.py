"""
Pruning a subspace with random certificates
===========================================

Walk random coordinates, slice A by the received symbol, stop when the slice
is a single point.  Points that are reached often are the list.
"""

# %%
from fractions import Fraction
from frslab import FrsCode
from frslab.linalg import affine_hull
from frslab.decode import prune_certificates, brute_force_list, trials_needed

code = FrsCode(13, 3, 3, 4)
f1, f2 = code.message([1, 2, 3]), code.message([5, 0, 9])
w1, w2 = code.encode(f1), code.encode(f2)
y = w1[:2] + w2[2:]          # half from each
A = affine_hull([f1, f2], code.k)

# %%
rho = Fraction(3, 4)
res = prune_certificates(code, y, A, rho, trials=512, seed=7)
print("pruned:", res.codewords)
print("oracle:", brute_force_list(code, y, rho))
print("hit rates:", [round(res.hit_rate(g), 3) for g in res.codewords])

# %%
print("trials for eps=1/4, r=1, eta=1/1000:", trials_needed(Fraction(1, 4), 1, 13, Fraction(1, 1000)))
