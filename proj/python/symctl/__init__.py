"""Symbolic optimal controller synthesis: finite minimax solver, abstraction
pipeline for the built-in sampled systems, and logistic-map oracles."""

from ._symctl import (
    Config,
    FiniteProblem,
    InputError,
    NumericalError,
    ResourceAbort,
    SoundnessAlarm,
    Synthesis,
    dp_operator,
    hypo_distance,
    logistic_sublevels,
    logistic_value,
    shortest_path_problem,
    solve,
    synthesize,
)

__all__ = [
    "Config",
    "FiniteProblem",
    "InputError",
    "NumericalError",
    "ResourceAbort",
    "SoundnessAlarm",
    "Synthesis",
    "dp_operator",
    "hypo_distance",
    "logistic_sublevels",
    "logistic_value",
    "shortest_path_problem",
    "solve",
    "synthesize",
]
