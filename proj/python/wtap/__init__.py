"""Weighted tree augmentation: relative greedy solver, baselines and oracles."""

from ._wtap import (
    BudgetExceeded,
    __version__,
    bench,
    best_ratio,
    decompose,
    exact,
    gen_fig2,
    gen_fig3,
    gen_random,
    max_slack,
    solve,
    validate,
)

__all__ = [
    "BudgetExceeded",
    "__version__",
    "bench",
    "best_ratio",
    "decompose",
    "exact",
    "gen_fig2",
    "gen_fig3",
    "gen_random",
    "max_slack",
    "solve",
    "validate",
]
