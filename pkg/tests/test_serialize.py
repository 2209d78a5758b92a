import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stingy.gen import random_instance
from stingy.serialize import (InstanceError, emit_instance, format_rational,
                              instance_digest, instance_to_dict, parse_instance,
                              parse_rational)
from stingy.setfn import INFINITE


@given(st.fractions())
def test_rational_round_trip(v):
    assert parse_rational(format_rational(v)) == v


def test_rational_formats():
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(-4)) == "-4"
    assert format_rational(INFINITE) == "inf"
    assert parse_rational(7) == 7


@pytest.mark.parametrize("raw", ["1.5", "1e3", " 3", "3/0", "", True, 1.5, None, "1/-2"])
def test_rejects_non_rationals(raw):
    with pytest.raises(InstanceError) as err:
        parse_rational(raw)
    assert err.value.category == "syntax"


def test_paper_round_trip(paper):
    f, c = paper
    text = emit_instance(f, c)
    assert parse_instance(text) == (f, c)
    assert emit_instance(*parse_instance(text)) == text


@pytest.mark.parametrize("seed", range(30))
def test_corpus_round_trip(seed):
    kind = ("coverage", "pmedian", "modular")[seed % 3]
    f, c = random_instance(kind, 4 + seed % 5, seed)
    text = emit_instance(f, c)
    g, d = parse_instance(text)
    assert (g, d) == (f, c)
    assert instance_digest(g, d) == instance_digest(f, c)


def test_matroid_dual_form(paper):
    f, c = paper
    data = instance_to_dict(f, c)
    del data["dependent_sets"]
    data["matroid_dual"] = {"kind": "partition", "blocks": [[1, 3], [2, 4]], "capacities": [1, 1]}
    assert parse_instance(json.dumps(data)) == (f, c)
    data["matroid_dual"] = {"kind": "uniform", "rank": 2}
    g, d = parse_instance(json.dumps(data))
    assert len(d.circuits) == 6


def _err(data, **kw):
    with pytest.raises(InstanceError) as err:
        parse_instance(json.dumps(data) if not isinstance(data, str) else data, **kw)
    return err.value


class TestDiagnostics:
    def test_malformed(self):
        assert _err("{not json").category == "syntax"
        assert _err([1, 2]).category == "syntax"

    def test_length(self, paper):
        data = instance_to_dict(*paper)
        data["f"] = data["f"][:15]
        assert _err(data).category == "length"

    def test_bad_n(self, paper):
        data = instance_to_dict(*paper)
        data["n"] = 0
        assert _err(data).category == "syntax"

    def test_both_dependence_forms(self, paper):
        data = instance_to_dict(*paper)
        data["matroid_dual"] = {"kind": "uniform", "rank": 1}
        assert _err(data).category == "syntax"

    def test_bad_labels(self, paper):
        data = instance_to_dict(*paper)
        data["dependent_sets"].append([5])
        assert _err(data).category == "syntax"

    def test_upward_closure(self, paper):
        data = instance_to_dict(*paper)
        data["dependent_sets"].remove([1, 2, 3])
        e = _err(data)
        assert e.category == "upward-closure"
        assert e.witness == (0b0011, 0b0111)

    def test_bad_matroid(self, paper):
        data = instance_to_dict(*paper)
        del data["dependent_sets"]
        data["matroid_dual"] = {"kind": "uniform", "rank": 4}
        assert _err(data).category == "dependence"
        data["matroid_dual"] = {"kind": "uniform"}
        assert _err(data).category == "syntax"

    def test_function_failure(self, paper):
        data = instance_to_dict(*paper)
        data["f"][-1] = "1"
        e = _err(data)
        assert e.category in {"nonincreasing", "normalized"}
        f, c = parse_instance(json.dumps(data), check_function=False)
        assert f.values[-1] == 1
