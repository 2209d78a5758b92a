"""
The four-element counterexample
===============================

Greedy descent starts from U = {1,2,3,4} and drops one element at a time,
always keeping the current set dependent, until a circuit remains.  On this
instance the first step is a four-way tie, and one resolution ends at a
circuit of value 3 while the optimum is 2.
"""

from stingy import (brute_force_opt, enumerate_traces, paper_instance,
                    ratio_report, steepness)
from stingy.setfn import format_set

f, c = paper_instance()

print("circuits:", [format_set(C) for C in c.circuits], "girth", c.girth)
print("steepness:", steepness(f))

# every way of resolving ties
for t in enumerate_traces(f, c):
    print("removal order", t.sequence, "->", format_set(t.final_set),
          "value", f(t.final_set))

opt = brute_force_opt(f, c)
print("optimum", opt.opt_value, "attained at", [format_set(m) for m in opt.all_optima])

for policy in ("best", "worst"):
    r = ratio_report(f, c, policy)
    print(f"{policy:>5}: ratio {r.ratio} vs bound {r.bound} -> violated={r.theorem1_violated}")
