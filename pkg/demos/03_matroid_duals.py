"""
Comatroids from matroid duals
=============================

Taking complements of the independent sets of a matroid gives a comatroid.
A partition matroid with blocks {1,3}, {2,4} and capacity one each yields
exactly the dependence family of the counterexample.
"""

from stingy import MatroidSpec, from_matroid_dual, paper_instance, removable
from stingy.setfn import format_set

spec = MatroidSpec.partition(4, [(1, 3), (2, 4)], (1, 1))
c = from_matroid_dual(spec)
print("dependent sets:", sorted(format_set(m) for m in c.members))
print("same as the counterexample:", c == paper_instance()[1])

for k in range(4):
    u = from_matroid_dual(MatroidSpec.uniform(4, k))
    print(f"uniform rank {k}: girth {u.girth}, {len(u.circuits)} circuits")

X = 0b0111
print("removable from", format_set(X), "->", removable(c, X))
