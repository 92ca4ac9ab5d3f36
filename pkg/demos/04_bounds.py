"""
Checking list-size bounds
=========================

Each check returns a BoundReport with lhs, rhs and a verdict.  The richer
code (k > s) is where slices stop being single points.
"""

# %%
from fractions import Fraction
import numpy as np
from frslab import FrsCode
from frslab import bounds, experiments

code = FrsCode(17, 4, 2, 8)
rng = np.random.default_rng(1)
A = experiments.random_subspace(code, rng, 2)
y = experiments.sample_word(code, rng, A)

# %%
print(bounds.slice_dims(code, A, y))
print(bounds.check_gk(code, A, y).to_dict())
print(bounds.check_wronskian_multiplicity(code, A, y).to_dict())

# %%
print(bounds.check_srivastava(code, A, y, t=2).to_dict())
print(bounds.check_cz_theorem(code, y, t=1).to_dict())

# %%
for eps in (Fraction(1, 2), Fraction(1, 4)):
    print(eps, bounds.chain_parameters(eps), bounds.check_parameter_chain(eps, Fraction(1, 5)).holds)
