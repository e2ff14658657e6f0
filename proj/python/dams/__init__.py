"""Round-synchronous simulator of distributed adaptive metaheuristic selection.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._core import (
    BitString,
    GainDistribution,
    Graph,
    OneMax,
    OracleTable,
    Rng,
    RunResult,
    SampleSummary,
    SimConfig,
    StrategyConfig,
    StrategyKind,
    TopologyKind,
    build_complete,
    build_cycle,
    build_grid,
    build_oracle_table,
    ea_step,
    expected_ea_gain,
    gain_distribution_exact_b,
    gain_distribution_rate,
    hamming_distance,
    mann_whitney,
    mutate_exact_b,
    mutate_rate,
    oracle_select,
    prob_at_most_five_flips,
    prob_network_gain_exceeds_five,
    random_select,
    run,
    run_batch,
    sbm_select,
    summarize,
)

__all__ = [
    "BitString",
    "GainDistribution",
    "Graph",
    "OneMax",
    "OracleTable",
    "Rng",
    "RunResult",
    "SampleSummary",
    "SimConfig",
    "StrategyConfig",
    "StrategyKind",
    "TopologyKind",
    "build_complete",
    "build_cycle",
    "build_grid",
    "build_oracle_table",
    "ea_step",
    "expected_ea_gain",
    "gain_distribution_exact_b",
    "gain_distribution_rate",
    "hamming_distance",
    "mann_whitney",
    "mutate_exact_b",
    "mutate_rate",
    "oracle_select",
    "prob_at_most_five_flips",
    "prob_network_gain_exceeds_five",
    "random_select",
    "run",
    "run_batch",
    "sbm_select",
    "summarize",
]
