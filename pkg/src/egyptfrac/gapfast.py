"""Fast gap-sequence computation via modular residue chains.

Computing the gap sequence of the pseudo-greedy expansion of p/q directly
requires the exact d_n = q*a_1*...*a_{n-1}, which grows doubly
exponentially.  This module instead recomputes, for each n, the residue of
d_k along k = 1..n while only ever storing numbers modulo products of the
small c-values.

Modulus bookkeeping (the load-bearing detail): at outer step n the pass
carries d_k modulo M_k = c_k * c_{k+1} * ... * c_n -- including the leading
factor c_k, not just the product from c_{k+1} on.  The integer d_k - e_k is
exactly divisible by c_k, and both the dividend and the modulus M_k are
multiples of c_k, so the canonical representative of (d_k - e_k) mod M_k is
itself divisible by c_k; dividing it by c_k yields (d_k - e_k)/c_k modulo
M_k / c_k = c_{k+1}...c_n, which is exactly the modulus the next step
needs.  Without the extra factor the quotient would be undefined.

Each outer step n therefore ends with d_n mod c_n, from which the centered
residue e_n in [-c_n/2, c_n/2) and c_{n+1} = c_n - e_n follow.  The outer
loop restarts from d_1 = q every time (cost O(n_max^2) big multiplications);
an incremental scheme is not possible because step n's moduli involve c_n,
which is unknown before step n runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import NotReduced
from .expansion import gap_sequence_naive

__all__ = ["GapTrace", "gap_sequence_fast", "VerifyReport", "verify_fast_vs_naive"]


@dataclass(frozen=True)
class GapTrace:
    """Result of the modular gap computation for one reduced pair p/q.

    ``c`` holds c_1..c_{N+1} and ``e`` holds e_1..e_N where N = ``steps``;
    ``n0`` is the first index with e = 0 when one was found within budget.
    """

    p: int
    q: int
    c: list[int]
    e: list[int]
    eps: list[Fraction]
    terminated: bool
    n0: int | None
    steps: int


def gap_sequence_fast(p: int, q: int, n_max: int, past_zero: int = 0) -> GapTrace:
    """Gap sequence of the pseudo-greedy expansion of p/q, Algorithm-1 style.

    Stops at the first zero gap (``terminated=True``) or after ``n_max``
    steps.  ``past_zero`` extends a terminated trace by that many extra
    steps beyond the first zero, which property tests use to watch the zero
    persist; the zeros are genuinely recomputed, not assumed.
    """
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be >= 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise NotReduced(f"{p}/{q} is not in lowest terms")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if past_zero < 0:
        raise ValueError(f"past_zero must be >= 0, got {past_zero}")

    cs = [p]
    es: list[int] = []
    n0: int | None = None
    n = 0
    while True:
        n += 1
        if n0 is None:
            if n > n_max:
                break
        elif n > n0 + past_zero:
            break

        cn = cs[-1]
        # suffix[i] = cs[i] * cs[i+1] * ... * cs[n-1], i.e. M_{i+1}
        suffix = [1] * (n + 1)
        acc = 1
        for i in range(n - 1, -1, -1):
            acc *= cs[i]
            suffix[i] = acc
        t = q % suffix[0]
        for k in range(n - 1):
            u, rem = divmod((t - es[k]) % suffix[k], cs[k])
            if rem:
                raise AssertionError(
                    f"modulus-chain violation at p={p} q={q} n={n} k={k + 1}: "
                    "tracked residue of d_k - e_k is not divisible by c_k"
                )
            m = suffix[k + 1]
            t = (t % m) * ((u + 1) % m) % m
        # t is now d_n mod c_n; center it into [-c_n/2, c_n/2)
        e = t - cn if 2 * t >= cn else t
        es.append(e)
        cs.append(cn - e)
        if e == 0 and n0 is None:
            n0 = n

    return GapTrace(
        p=p,
        q=q,
        c=cs,
        e=es,
        eps=[Fraction(e_, c_) for e_, c_ in zip(es, cs)],
        terminated=n0 is not None,
        n0=n0,
        steps=len(es),
    )


@dataclass
class VerifyReport:
    q_max: int
    prefix_cap: int
    pairs_checked: int = 0
    mismatches: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_fast_vs_naive(q_max: int, prefix_cap: int) -> VerifyReport:
    """Cross-validate the modular path against the exact-arithmetic oracle.

    For every reduced p/q with p <= q <= q_max, compares (c_n, e_n) of the
    fast trace against ``gap_sequence_naive`` on the first
    min(n0, prefix_cap) terms.  An empty mismatch list means agreement.
    """
    if q_max < 1:
        raise ValueError(f"q_max must be >= 1, got {q_max}")
    if prefix_cap < 1:
        raise ValueError(f"prefix_cap must be >= 1, got {prefix_cap}")
    report = VerifyReport(q_max=q_max, prefix_cap=prefix_cap)
    for q in range(1, q_max + 1):
        for p in range(1, q + 1):
            if gcd(p, q) != 1:
                continue
            report.pairs_checked += 1
            fast = gap_sequence_fast(p, q, prefix_cap)
            naive = gap_sequence_naive(p, q, prefix_cap)
            n_cmp = min(fast.steps, len(naive))
            for i in range(n_cmp):
                if fast.c[i] != naive[i].c or fast.e[i] != naive[i].e:
                    report.mismatches.append(
                        (
                            p,
                            q,
                            f"step {i + 1}: fast (c={fast.c[i]}, e={fast.e[i]}) "
                            f"!= naive (c={naive[i].c}, e={naive[i].e})",
                        )
                    )
                    break
    return report
