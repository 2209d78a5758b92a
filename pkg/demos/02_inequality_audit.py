"""
Auditing the per-step inequalities
==================================

At step i the proof under scrutiny compares the summed removal costs of
X_{i-1} - OPT with the greedy cost d_{x_i}.  The original factor
|X_{i-1} - OPT| is too large; the corrected factor q - (i - 1) is backed by
exchange witnesses, which are printed alongside.
"""

from stingy import audit_instance, paper_instance
from stingy.setfn import format_set

f, c = paper_instance()
a = audit_instance(f, c)

print(f"{'trace':>5} {'step':>4} {'X':>10} {'OPT':>6} {'lhs':>4} {'orig':>5} {'fixed':>5}  R")
for k, s in a.steps:
    seq = a.traces[k].sequence
    print(f"{str(seq):>5} {s.step:>4} {format_set(s.before):>10} {format_set(s.opt_set):>6} "
          f"{str(s.lhs):>4} {str(s.rhs1):>4}{' ' if s.ineq1_holds else '!'} "
          f"{str(s.rhs2):>4}{' ' if s.ineq2_holds else '!'}  {s.witnesses}")

print("original inequality failures:", a.ineq1_violations)
print("corrected inequality failures:", a.ineq2_violations)
