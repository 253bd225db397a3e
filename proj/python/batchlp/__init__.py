"""Dense two-phase simplex for batches of small linear programs."""

from ._core import (
    BatchTooLarge,
    Error,
    HeterogeneousBatch,
    ParseError,
    SolveOutcome,
    StandardFormLP,
    UnsupportedFeature,
    batch_solve,
    certify,
    gen_random_lps,
    lp_memory_bytes,
    plan_chunks,
    solve,
    solve_box,
    solve_mps,
)

__all__ = [
    "BatchTooLarge",
    "Error",
    "HeterogeneousBatch",
    "ParseError",
    "SolveOutcome",
    "StandardFormLP",
    "UnsupportedFeature",
    "batch_solve",
    "certify",
    "gen_random_lps",
    "lp_memory_bytes",
    "plan_chunks",
    "solve",
    "solve_box",
    "solve_mps",
]
