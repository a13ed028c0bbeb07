"""Smoke tests for the python bindings."""

import json
from fractions import Fraction

import pytest

import loopmod


def test_arithmetic_functions():
    assert loopmod.euler_phi(12) == 4
    assert loopmod.moebius(6) == 1
    assert loopmod.phi_twisted(2, 4) == Fraction(-2)
    assert loopmod.maj([0, 1, 0]) == 2
    assert loopmod.count_maj_by_residue([2, 1], 3) == [1, 1, 1]
    assert loopmod.closed_count([1, 1], 2, 0) == 1
    assert loopmod.multinomial([2, 2]) == 6


def test_exact_field_strings():
    assert loopmod.field_eval("(1 - q^2)/(1 - q^2)", 2) == "1"
    assert loopmod.reduce_q0("(1 - q^2)/(z - q^2)", 2) == "-1"
    assert loopmod.q_valuation("q^2/(1 + q)", 2) == 2
    assert loopmod.q_valuation("0", 2) is None
    with pytest.raises(loopmod.LoopmodError):
        loopmod.reduce_q0("1/q", 2)


def test_decompose_intro_example():
    report = loopmod.decompose(1, 2, "roots: [[1, -1]]")
    assert report["m"] == 2
    assert len(report["components"]) == 2
    # JSON round trip is stable.
    again = loopmod.decompose(1, 2, "roots: [[1, -1]]")
    assert json.dumps(report, sort_keys=True) == json.dumps(again, sort_keys=True)


def test_eigenspace_dims_match_census():
    for parts, m in [([1, 1], 2), ([2, 1], 3), ([2, 2], 4)]:
        assert loopmod.eigenspace_dims(1, m, parts) == [
            int(c) for c in loopmod.count_maj_by_residue(parts, m)
        ]


def test_component_weight_dim_periodicity():
    for r in range(-2, 3):
        for s in range(2):
            dim = loopmod.component_weight_dim(1, 2, s, [1, 1], r)
            assert dim == 1


def test_character_table_is_clean():
    table = loopmod.character_table(1, 3)
    assert table["discrepancies"] == []
    assert len(table["rows"]) == 4 * 3  # compositions of 3 into 2 parts x residues
    csv = loopmod.character_table_csv(1, 2)
    assert csv.splitlines()[0] == "composition,nu,k,closed,brute,maj"


def test_crystal_graph_and_rules():
    graph = loopmod.crystal_graph(0, 2, 1, 0, 1)
    slices = {0: 0, 1: 0}
    for node in graph["nodes"]:
        slices[node["r"]] += 1
    assert slices == {0: 3, 1: 1}

    step = loopmod.tensor_rule_step("F", 1, [0, 0], 1, 2)
    assert step == ([0, 1], 0)
    assert loopmod.tensor_rule_step("F", 1, [1, 0], 1, 2) is None

    terms = loopmod.kashiwara_mod_q("F", 1, [0, 0], 1, 2, 2)
    assert terms == [([0, 1], "1")]

    assert loopmod.oracle_mismatches(1, 3, 3) == []
    assert loopmod.verify_axioms(1, 2, 2)["passed"] is True

    dot = loopmod.crystal_graph_dot(0, 2, 1, -2, 2)
    assert dot.startswith("digraph crystal {")


def test_tuple_period():
    assert loopmod.tuple_period("roots: [[1, -1]]", 2) == 2
    assert loopmod.tuple_period("coeffs: [[1, 0, 0, -1]]", 3) == 3
    with pytest.raises(loopmod.LoopmodError):
        loopmod.decompose(1, 2, "coeffs: [[1, 0, -1]]")
