"""Exact PMF, moments and shape classification for the Markov binomial distribution."""

from ._core import (
    ConditioningError,
    Params,
    classify,
    classify_exact,
    classify_region,
    classify_values,
    cond_moment,
    conditional_pmf,
    enumerate,
    is_log_concave,
    log_pmf,
    moments,
    pmf,
    sample,
    state_prob,
)

__all__ = [
    "ConditioningError",
    "Params",
    "classify",
    "classify_exact",
    "classify_region",
    "classify_values",
    "cond_moment",
    "conditional_pmf",
    "enumerate",
    "is_log_concave",
    "log_pmf",
    "moments",
    "pmf",
    "sample",
    "state_prob",
]
