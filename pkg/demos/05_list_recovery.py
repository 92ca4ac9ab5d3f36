"""
A family that defeats list recovery
===================================

Products of the Q_j over a prefix, split by j mod m.  Every member agrees with
a small candidate list on every coordinate, yet there are |B|^m members.
"""

# %%
from frslab import FrsCode
from frslab.recovery import build_counterexample, verify_counterexample

code = FrsCode(13, 5, 2, 6)
fam = build_counterexample(code, 2, [1, 2, 3])
print("p =", fam.p, " basis degrees:", [b.degree for b in fam.basis])

# %%
rep = verify_counterexample(fam)
print(rep.holds, rep.details["G_size"], rep.details["per_coordinate_sizes"])
for j in range(code.n):
    print(j, sorted(fam.candidate_symbols(j)))
