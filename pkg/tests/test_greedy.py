from itertools import permutations

import pytest

from stingy.comatroid import MatroidSpec, from_matroid_dual, make_comatroid
from stingy.gen import modular_instance, random_instance
from stingy.greedy import (TiePolicy, TraceLimitExceeded, enumerate_traces,
                           greedy_descent)
from stingy.setfn import SetFunction, size, subset as S


def all_greedy_sequences(f, c):
    """Oracle: scan every ordered q-tuple of distinct elements and keep the
    ones that pass the feasibility and minimum-marginal test at every step."""
    q = c.n - c.girth
    out = []
    for seq in permutations(range(1, c.n + 1), q):
        X = c.full
        ok = True
        for x in seq:
            feas = [y for y in range(1, c.n + 1)
                    if X >> (y - 1) & 1 and X & ~(1 << (y - 1)) in c.members]
            d = {y: f.values[X & ~(1 << (y - 1))] - f.values[X] for y in feas}
            if x not in d or d[x] != min(d.values()):
                ok = False
                break
            X &= ~(1 << (x - 1))
        if ok:
            out.append(seq)
    return out


def check_trace(f, c, t):
    assert len(t.steps) == c.q
    X = c.full
    for st in t.steps:
        assert st.before == X and X in c.members
        assert st.chosen in st.candidates
        assert st.d_value == min(f.values[X & ~(1 << (y - 1))] - f.values[X]
                                 for y in st.candidates)
        assert st.d_value == f.values[X & ~(1 << (st.chosen - 1))] - f.values[X]
        X &= ~(1 << (st.chosen - 1))
    assert t.final_set == X
    assert size(X) == c.girth
    assert X in c.circuits


class TestPaper:
    def test_six_trajectories(self, paper):
        f, c = paper
        traces = enumerate_traces(f, c)
        assert [t.sequence for t in traces] == [(1, 2), (2, 1), (2, 3), (3, 2), (4, 1), (4, 3)]
        ends = sorted(t.final_set for t in traces)
        assert ends == sorted([S(1, 2), S(2, 3), S(3, 4), S(3, 4), S(1, 4), S(1, 4)])
        assert sorted(f(t.final_set) for t in traces) == [2, 2, 2, 2, 3, 3]
        assert [t.sequence for t in traces] == sorted(all_greedy_sequences(f, c))

    def test_first_step_all_tied(self, paper):
        f, c = paper
        first = enumerate_traces(f, c)[0].steps[0]
        assert first.candidates == (1, 2, 3, 4) and first.d_value == 1

    def test_worst(self, paper):
        f, c = paper
        t = greedy_descent(f, c, TiePolicy.WORST)
        assert t.final_set in (S(1, 2), S(2, 3))
        assert f(t.final_set) == 3

    def test_best(self, paper):
        f, c = paper
        assert f(greedy_descent(f, c, "best").final_set) == 2

    def test_lex_policies(self, paper):
        f, c = paper
        assert greedy_descent(f, c, "lex-min").sequence == (1, 2)
        assert greedy_descent(f, c, "lex-max").sequence == (4, 3)

    def test_all_policy_rejected(self, paper):
        f, c = paper
        with pytest.raises(ValueError):
            greedy_descent(f, c, TiePolicy.ALL)

    def test_cap(self, paper):
        f, c = paper
        with pytest.raises(TraceLimitExceeded):
            enumerate_traces(f, c, cap=5)

    def test_cap_from_environment(self, paper, monkeypatch):
        f, c = paper
        monkeypatch.setenv("STINGY_TRACE_CAP", "3")
        with pytest.raises(TraceLimitExceeded):
            enumerate_traces(f, c)


def test_zero_steps_when_only_u_dependent():
    f = modular_instance([1, 2, 3])
    c = make_comatroid(3, [(1, 2, 3)])
    t = greedy_descent(f, c)
    assert t.steps == () and t.final_set == c.full
    assert [x.steps for x in enumerate_traces(f, c)] == [()]


def test_distinct_marginals_give_one_trace():
    f = modular_instance([1, 2, 4, 8])
    c = from_matroid_dual(MatroidSpec.uniform(4, 2))
    traces = enumerate_traces(f, c)
    assert len(traces) == 1
    assert traces[0].sequence == (1, 2)


def test_ground_set_mismatch(paper):
    f, _ = paper
    with pytest.raises(ValueError):
        greedy_descent(f, from_matroid_dual(MatroidSpec.uniform(3, 1)))


def test_check_flag_rejects_bad_function(paper):
    _, c = paper
    bad = SetFunction(4, (0,) * 15 + (1,))
    greedy_descent(bad, c)  # no check requested
    with pytest.raises(ValueError, match="normalized"):
        greedy_descent(bad, c, check=True)


CASES = [(k, n, seed, dual) for k in ("coverage", "pmedian", "modular")
         for n in (4, 5, 6) for seed in range(3) for dual in ("uniform", "partition")]


@pytest.mark.parametrize("kind, n, seed, dual", CASES)
def test_random_against_oracle(kind, n, seed, dual):
    f, c = random_instance(kind, n, seed, dual=dual)
    traces = enumerate_traces(f, c)
    assert [t.sequence for t in traces] == sorted(all_greedy_sequences(f, c))
    for t in traces:
        check_trace(f, c, t)
    for policy in ("lex-min", "lex-max", "best", "worst"):
        t = greedy_descent(f, c, policy)
        check_trace(f, c, t)
        assert t.sequence in {x.sequence for x in traces}
    values = [f(t.final_set) for t in traces]
    assert f(greedy_descent(f, c, "best").final_set) == min(values)
    assert f(greedy_descent(f, c, "worst").final_set) == max(values)


def test_equal_weights_tie_everywhere():
    f = modular_instance([1] * 5)
    c = from_matroid_dual(MatroidSpec.uniform(5, 3))
    traces = enumerate_traces(f, c)
    assert len(traces) == 5 * 4 * 3
    assert {f(t.final_set) for t in traces} == {3}
