"""Coupled two-chain cellular automata with cell-state memory."""

from ._actin import (
    Rule,
    block_census,
    classify,
    collide,
    damage,
    entropy,
    enumerate_rules,
    excitability,
    initial_state,
    normalize_memory,
    parse_seed,
    render,
    rule_set,
    run,
    sweep,
    taxonomy,
)

__all__ = [
    "Rule",
    "block_census",
    "classify",
    "collide",
    "damage",
    "entropy",
    "enumerate_rules",
    "excitability",
    "initial_state",
    "normalize_memory",
    "parse_seed",
    "render",
    "rule_set",
    "run",
    "sweep",
    "taxonomy",
]
