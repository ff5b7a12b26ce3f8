"""Multiplicative random-walk model for the bookkeeping numerators.

The c-values of a rational gap trace satisfy c_{n+1}/c_n = 1 - e_n/c_n with
e_n/c_n in [-1/2, 1/2), which motivates modeling them as c_{n+1} = t_n * c_n
with t_n uniform on [1/2, 3/2).  The drift E[log t] = (3/2) ln 3 - ln 2 - 1
is negative, so walks sink toward 1; this module provides the closed form
and a deterministic Monte-Carlo simulator for hitting-time statistics.

Randomness is counter-based so that results are a pure function of
(seed, trial, step) and therefore identical no matter how trials are split
across workers or blocks::

    u(seed, trial, step) = fin(fin((trial << 32) | step) ^ seed) / 2^64
    t = 1/2 + u

where ``fin`` is the SplitMix64 finalizer (add golden gamma, two
xor-multiply rounds, final xor-shift).  This fixed algorithm is named by
``GENERATOR_ID`` in every result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

GENERATOR_ID = "splitmix64-mix-v1"

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64_MASK = (1 << 64) - 1
_TRIAL_CAP = 1 << 32
_STEP_CAP = 1 << 32

__all__ = ["GENERATOR_ID", "WalkStats", "analytic_drift", "simulate_walk", "run_walks"]


@dataclass(frozen=True)
class WalkStats:
    """Summary of a batch of multiplicative random walks.

    ``mean_log_t``/``stderr_log_t`` aggregate every step actually taken
    (samples past a trial's hitting step are not drawn); both are None when
    no step was taken at all (c0 = 1 hits immediately).  ``mean_hit_time``
    averages the first step with c <= 1 over the trials that hit, and is
    None when none did.
    """

    trials: int
    steps: int
    c0: float
    mean_log_t: float | None
    stderr_log_t: float | None
    hit_fraction: float
    mean_hit_time: float | None
    seed: int
    generator_id: str = GENERATOR_ID


def analytic_drift() -> tuple[str, float]:
    """Closed form and float value of E[log t] for t uniform on [1/2, 3/2)."""
    return ("(3/2)*ln(3) - ln(2) - 1", 1.5 * math.log(3.0) - math.log(2.0) - 1.0)


def _finalize(x: np.ndarray) -> np.ndarray:
    x = x + _GAMMA
    x = (x ^ (x >> np.uint64(30))) * _MIX1
    x = (x ^ (x >> np.uint64(27))) * _MIX2
    return x ^ (x >> np.uint64(31))


def _uniform_block(seed: np.uint64, trials: np.ndarray, step_lo: int, n_steps: int) -> np.ndarray:
    """Uniform [0,1) samples for each (trial, step) pair; shape (len(trials), n_steps)."""
    counters = (trials[:, None] << np.uint64(32)) | (
        np.uint64(step_lo) + np.arange(n_steps, dtype=np.uint64)[None, :]
    )
    bits = _finalize(_finalize(counters) ^ seed)
    return bits.astype(np.float64) * 2.0**-64


def run_walks(
    c0: float,
    steps: int,
    trials: int,
    seed: int,
    block: int = 512,
) -> tuple[WalkStats, np.ndarray]:
    """Simulate walks and also return per-trial hitting steps (-1 = no hit)."""
    if c0 < 1:
        raise ValueError(f"c0 must be >= 1, got {c0}")
    if not 1 <= trials < _TRIAL_CAP:
        raise ValueError(f"trials must be in [1, 2^32), got {trials}")
    if not 1 <= steps < _STEP_CAP:
        raise ValueError(f"steps must be in [1, 2^32), got {steps}")
    seed_u = np.uint64(seed & _U64_MASK)

    hit_step = np.full(trials, -1, dtype=np.int64)
    if c0 == 1:
        hit_step[:] = 0
        stats = WalkStats(
            trials=trials,
            steps=steps,
            c0=c0,
            mean_log_t=None,
            stderr_log_t=None,
            hit_fraction=1.0,
            mean_hit_time=0.0,
            seed=seed,
            generator_id=GENERATOR_ID,
        )
        return stats, hit_step

    active = np.arange(trials, dtype=np.uint64)
    log_c = np.full(trials, math.log(c0), dtype=np.float64)
    sum_lt = 0.0
    sum_lt2 = 0.0
    n_lt = 0

    for lo in range(0, steps, block):
        if active.size == 0:
            break
        width = min(block, steps - lo)
        lt = np.log(0.5 + _uniform_block(seed_u, active, lo, width))
        path = log_c[active][:, None] + np.cumsum(lt, axis=1)
        below = path <= 0.0
        hit_any = below.any(axis=1)
        first = np.argmax(below, axis=1)  # valid only where hit_any
        consumed = np.where(hit_any, first + 1, width)
        used = np.arange(width)[None, :] < consumed[:, None]
        sum_lt += float(lt[used].sum())
        sum_lt2 += float((lt[used] ** 2).sum())
        n_lt += int(consumed.sum())

        hit_idx = active[hit_any].astype(np.int64)
        hit_step[hit_idx] = lo + first[hit_any] + 1
        log_c[active[~hit_any].astype(np.int64)] = path[~hit_any, -1]
        active = active[~hit_any]

    mean = sum_lt / n_lt if n_lt else None
    stderr = None
    if n_lt >= 2:
        var = (sum_lt2 - n_lt * mean * mean) / (n_lt - 1)
        stderr = math.sqrt(max(var, 0.0) / n_lt)
    hits = hit_step >= 0
    n_hits = int(hits.sum())
    stats = WalkStats(
        trials=trials,
        steps=steps,
        c0=c0,
        mean_log_t=mean,
        stderr_log_t=stderr,
        hit_fraction=n_hits / trials,
        mean_hit_time=float(hit_step[hits].mean()) if n_hits else None,
        seed=seed,
        generator_id=GENERATOR_ID,
    )
    return stats, hit_step


def simulate_walk(c0: float, steps: int, trials: int, seed: int) -> WalkStats:
    """Deterministic Monte-Carlo run of the multiplicative walk model."""
    stats, _ = run_walks(c0, steps, trials, seed)
    return stats
