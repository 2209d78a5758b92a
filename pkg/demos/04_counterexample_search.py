"""
Searching random instances
==========================

Coverage, p-median and modular functions on random uniform / partition
duals are audited in bulk.  Findings are instances where greedy beats the
claimed bound or the original per-step inequality fails; the corrected one
never should.
"""

import collections

from stingy import SearchConfig, search_counterexamples

config = SearchConfig(include_paper=True)
found = search_counterexamples(config, seed=1, budget=300, jobs=2)

kinds = collections.Counter(x.label.split("/")[0] for x in found)
print(len(found), "findings out of 301 instances:", dict(kinds))
print("bound violations:", sum(bool(x.theorem1_policies) for x in found))
print("corrected-inequality failures:", sum(x.ineq2_violations for x in found))

first = found[0]
print("first finding:", first.label, "ratio", first.worst.ratio, "bound", first.worst.bound)
