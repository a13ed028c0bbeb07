"""Exact decomposition of quantum loop modules, characters and zeta-crystals.

Thin wrapper over the C++ extension: JSON-emitting calls are decoded into
plain dicts, everything else passes through.
"""

import json
from fractions import Fraction

from _loopmod import (  # noqa: F401
    LoopmodError,
    closed_count,
    component_weight_dim,
    count_maj_by_residue,
    crystal_graph_dot,
    character_table_csv,
    eigenspace_dims,
    euler_phi,
    field_eval,
    kashiwara_mod_q,
    maj,
    moebius,
    multinomial,
    oracle_mismatches,
    q_valuation,
    reduce_q0,
    tensor_rule_step,
    tuple_period,
)
import _loopmod


def phi_twisted(k, d):
    num, den = _loopmod.phi_twisted(k, d)
    return Fraction(num, den)


def decompose(n, m, tuple_text="", d=0, jobs=1):
    return json.loads(_loopmod.decompose_json(n, m, tuple_text, d, jobs))


def character_table(n, m, jobs=1):
    return json.loads(_loopmod.character_table_json(n, m, jobs))


def crystal_graph(s, m, n, r_min, r_max):
    return json.loads(_loopmod.crystal_graph_json(s, m, n, r_min, r_max))


def verify_axioms(n, N, zeta_order):
    return json.loads(_loopmod.verify_axioms_json(n, N, zeta_order))


__all__ = [
    "LoopmodError",
    "character_table",
    "character_table_csv",
    "closed_count",
    "component_weight_dim",
    "count_maj_by_residue",
    "crystal_graph",
    "crystal_graph_dot",
    "decompose",
    "eigenspace_dims",
    "euler_phi",
    "field_eval",
    "kashiwara_mod_q",
    "maj",
    "moebius",
    "multinomial",
    "oracle_mismatches",
    "phi_twisted",
    "q_valuation",
    "reduce_q0",
    "tensor_rule_step",
    "tuple_period",
    "verify_axioms",
]
