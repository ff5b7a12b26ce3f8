"""Reference integer sequences and their doubly exponential growth constant.

Generalized Sylvester numbers s_1(m) = m+1, s_{n+1} = s_n^2 - s_n + 1 (the
classical Sylvester sequence is m = 1), Fibonacci numbers by fast doubling,
and the power-of-two subsequence F_{2^n}.  Terms have roughly 2^n digits, so
depth caps guard against accidental memory blowups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DepthExceeded

SYLVESTER_DEPTH_CAP = 24
FIB2_DEPTH_CAP = 24

__all__ = [
    "SYLVESTER_DEPTH_CAP",
    "FIB2_DEPTH_CAP",
    "sylvester",
    "sylvester_terms",
    "fib",
    "fib_pow2",
    "GrowthEstimate",
    "growth_constant",
]


def sylvester(m: int, n: int, *, depth_cap: int = SYLVESTER_DEPTH_CAP) -> int:
    """n-th generalized Sylvester number s_n(m), by direct recurrence."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > depth_cap:
        raise DepthExceeded(f"n={n} exceeds depth cap {depth_cap}")
    s = m + 1
    for _ in range(n - 1):
        s = s * s - s + 1
    return s


def sylvester_terms(m: int, count: int, *, depth_cap: int = SYLVESTER_DEPTH_CAP) -> list[int]:
    """First ``count`` terms s_1(m) .. s_count(m)."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count > depth_cap:
        raise DepthExceeded(f"count={count} exceeds depth cap {depth_cap}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    out = [m + 1]
    for _ in range(count - 1):
        s = out[-1]
        out.append(s * s - s + 1)
    return out


def fib(n: int) -> int:
    """F_n by fast doubling: F_2k = F_k(2F_{k+1}-F_k), F_{2k+1} = F_k^2+F_{k+1}^2."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    a, b = 0, 1  # F_0, F_1
    for i in range(n.bit_length() - 1, -1, -1):
        c = a * (2 * b - a)
        d = a * a + b * b
        if (n >> i) & 1:
            a, b = d, c + d
        else:
            a, b = c, d
    return a


def fib_pow2(n: int, *, depth_cap: int = FIB2_DEPTH_CAP) -> int:
    """F_{2^n}, the n-th term of the Millin-series denominators."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > depth_cap:
        raise DepthExceeded(f"n={n} exceeds depth cap {depth_cap}")
    return fib(1 << n)


@dataclass(frozen=True)
class GrowthEstimate:
    """Estimate of the constant c(m) with s_n(m) ~ c(m)^(2^n).

    ``c_hat`` is exp(2^-depth * ln s_depth(m)); the logarithm of the big
    integer is taken from its bit length plus the leading 64 bits, which is
    good to ~15 significant decimal digits.  ``residual_bound`` bounds
    |c_hat - c(m)| by the tail estimate c_hat * 2^-depth / s_depth(m),
    rendered in scientific notation (it underflows floats quickly, so it is
    computed in log space).
    """

    m: int
    depth: int
    c_hat: str
    residual_bound: str


def _log_bigint(n: int) -> float:
    """Natural log of a positive big integer from bit length + 64-bit mantissa."""
    bits = n.bit_length()
    if bits <= 64:
        return math.log(n)
    shift = bits - 64
    return math.log(n >> shift) + shift * math.log(2)


def growth_constant(m: int, depth: int) -> GrowthEstimate:
    """Growth-constant estimate c_hat = s_depth(m)^(2^-depth) with error bound."""
    if not 4 <= depth <= 16:
        raise DepthExceeded(f"depth must be in [4, 16], got {depth}")
    s = sylvester(m, depth)
    ln_s = _log_bigint(s)
    c_hat = math.exp(ln_s / 2.0**depth)
    log10_res = math.log10(c_hat) - depth * math.log10(2) - ln_s / math.log(10)
    exp10 = math.floor(log10_res)
    mant = 10.0 ** (log10_res - exp10)
    return GrowthEstimate(
        m=m,
        depth=depth,
        c_hat=f"{c_hat:.12g}",
        residual_bound=f"{mant:.2f}e{exp10:d}",
    )
