"""Greedy descent for supermodular minimization over comatroid circuits."""

from .audit import (BoundReport, InstanceAudit, OptResult, SearchConfig, StepAudit,
                    audit_instance, brute_force_opt, check_inequality1,
                    check_inequality2, ratio_report, search_counterexamples)
from .comatroid import (Comatroid, ComatroidError, MatroidSpec, circuits,
                        exchange_witnesses, from_matroid_dual, make_comatroid,
                        removable, validate_comatroid)
from .gen import (CoverageSpec, PMedianSpec, coverage_instance, modular_instance,
                  paper_instance, pmedian_instance, random_instance)
from .greedy import GreedyTrace, TiePolicy, enumerate_traces, greedy_descent
from .setfn import (INFINITE, NoSteepElement, SetFunction, evaluate, marginal,
                    steepness, subset, theorem1_bound, validate_function)

__version__ = "0.1.0"
