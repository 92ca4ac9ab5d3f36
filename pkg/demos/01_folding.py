"""
Folding a Reed-Solomon code
===========================

Build the small code used throughout the tests and look at what a folded
symbol actually is.
"""

# %%
import numpy as np
from frslab import FrsCode, Polynomial

code = FrsCode(13, k=3, s=3, n=4)
print(code.descriptor())
print("gamma =", code.field.gamma, " rate =", code.rate, " distance =", code.distance)

# %%
# a message is a polynomial of degree < k, a symbol is s consecutive evaluations
f = code.message([1, 2, 3])
print(f)
for i, sym in enumerate(code.encode(f)):
    print(i, sym)

# %%
# same symbol, read as a residue: f mod Q_i where Q_i = prod_j (x - alpha_i gamma^j)
print(code.residue(f, 0), "  Q_0 =", code.Q[0])

# %%
# the whole codebook as an array, 13^3 rows
msgs = np.array(np.meshgrid(*[range(13)] * 3, indexing="ij")).reshape(3, -1).T
cb = code.encode_array(msgs)
print(cb.shape)
