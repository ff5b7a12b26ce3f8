"""Unit-fraction expansion engine: greedy, odd-greedy, and pseudo-greedy.

Expansions run over exact values.  The pseudo-greedy rule picks
a_n = round(1/x_n + 1) with ties toward +infinity; the remainder updates as
x_{n+1} = x_n - 1/a_n, and for rational input p/q (reduced first) the engine
additionally tracks the unreduced bookkeeping pair x_n = c_n/d_n together
with the centered residue e_n of d_n mod c_n, so that the gap is the exact
rational eps_n = e_n/c_n.  The pair is deliberately never reduced: the
recurrences c_{n+1} = c_n - e_n and d_{n+1} = d_n * a_n are representation
dependent, and fixing the reduced starting point makes every trace
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import NonPositiveInput, NotReduced, OddGreedyOnIrrational
from .exactnum import QuadraticValue, ceil_value, decimal_digits, nearest_int, sign_of

DEFAULT_DIGIT_CAP = 10**4
NAIVE_DIGIT_LIMIT = 10**5

__all__ = [
    "DEFAULT_DIGIT_CAP",
    "NAIVE_DIGIT_LIMIT",
    "ExpansionKind",
    "ExpansionStatus",
    "ExpansionRecord",
    "Expansion",
    "expand",
    "GapStep",
    "gap_sequence_naive",
]


class ExpansionKind(Enum):
    GREEDY = "greedy"
    ODD_GREEDY = "odd_greedy"
    PSEUDO_GREEDY = "pseudo_greedy"


class ExpansionStatus(Enum):
    EXACT = "exact"          # remainder reached 0: finite expansion
    ZERO_GAP = "zero_gap"    # rational pseudo-greedy hit eps = 0; tail implied
    MAX_TERMS = "max_terms"  # term budget exhausted with no exact end


@dataclass(frozen=True)
class ExpansionRecord:
    """One expansion step: term ``a``, remainder ``x`` before the step.

    For pseudo-greedy over rationals the gap ``eps`` and the unreduced
    bookkeeping ``c``, ``d``, ``e`` are present (``d`` is omitted once its
    decimal length exceeds the digit cap); otherwise they are None.
    """

    n: int
    a: int
    x: Fraction | QuadraticValue
    eps: Fraction | None = None
    c: int | None = None
    d: int | None = None
    e: int | None = None


@dataclass(frozen=True)
class Expansion:
    kind: ExpansionKind
    records: list[ExpansionRecord]
    status: ExpansionStatus
    zero_gap_at: int | None  # first index with eps = 0, when tracked


def _odd_ceil(inv: Fraction) -> int:
    a = -((-inv.numerator) // inv.denominator)
    return a if a % 2 == 1 else a + 1


def expand(
    r,
    kind: ExpansionKind,
    max_terms: int,
    digit_cap: int = DEFAULT_DIGIT_CAP,
    stop_at_first_zero: bool = False,
) -> Expansion:
    """Expand a positive exact value into unit fractions.

    Emits up to ``max_terms`` records; greedy expansions of rationals stop
    early when the remainder hits 0 exactly.  For rational pseudo-greedy,
    ``stop_at_first_zero`` truncates the stream at the first zero gap (the
    rest of the gap sequence is zero by persistence); by default the stream
    runs to the full term budget.
    """
    if isinstance(r, int):
        r = Fraction(r)
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    if digit_cap < 1:
        raise ValueError(f"digit_cap must be >= 1, got {digit_cap}")
    if sign_of(r) <= 0:
        raise NonPositiveInput(f"expansion requires r > 0, got {r}")

    rational = isinstance(r, Fraction)
    if kind is ExpansionKind.ODD_GREEDY and not rational:
        raise OddGreedyOnIrrational("odd-greedy expansion requires a rational input")

    pseudo_book = rational and kind is ExpansionKind.PSEUDO_GREEDY
    records: list[ExpansionRecord] = []
    zero_gap_at: int | None = None
    x = r
    if pseudo_book:
        c, d = r.numerator, r.denominator

    for n in range(1, max_terms + 1):
        if rational and x == 0:
            return Expansion(kind, records, ExpansionStatus.EXACT, zero_gap_at)
        inv = 1 / x if rational else x.inverse()
        if kind is ExpansionKind.PSEUDO_GREEDY:
            a = nearest_int(inv + 1)
        elif kind is ExpansionKind.GREEDY:
            a = ceil_value(inv)
        else:
            a = _odd_ceil(inv)

        if pseudo_book:
            e = d - (a - 1) * c
            eps = Fraction(e, c)
            records.append(
                ExpansionRecord(
                    n=n,
                    a=a,
                    x=x,
                    eps=eps,
                    c=c,
                    d=d if decimal_digits(d) <= digit_cap else None,
                    e=e,
                )
            )
            if e == 0 and zero_gap_at is None:
                zero_gap_at = n
                if stop_at_first_zero:
                    return Expansion(kind, records, ExpansionStatus.ZERO_GAP, zero_gap_at)
            c, d = c - e, d * a
        else:
            records.append(ExpansionRecord(n=n, a=a, x=x))

        x = x - Fraction(1, a)

    if rational and x == 0:
        status = ExpansionStatus.EXACT
    elif zero_gap_at is not None:
        status = ExpansionStatus.ZERO_GAP
    else:
        status = ExpansionStatus.MAX_TERMS
    return Expansion(kind, records, status, zero_gap_at)


class GapStep(NamedTuple):
    c: int
    e: int
    eps: Fraction


def gap_sequence_naive(
    p: int,
    q: int,
    max_terms: int,
    digit_limit: int = NAIVE_DIGIT_LIMIT,
) -> list[GapStep]:
    """Gap sequence of the pseudo-greedy expansion of p/q, by full arithmetic.

    Keeps the exact unreduced d_n, so it serves as the oracle for the
    modular fast path.  d_n roughly squares per step; the walk stops once
    its decimal length exceeds ``digit_limit``, and every emitted step is
    exact.  The input must already be in lowest terms.
    """
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be >= 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise NotReduced(f"{p}/{q} is not in lowest terms")
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")

    out: list[GapStep] = []
    c, d = p, q
    while len(out) < max_terms and decimal_digits(d) <= digit_limit:
        rem = d % c
        e = rem - c if 2 * rem >= c else rem
        out.append(GapStep(c, e, Fraction(e, c)))
        a = (d - e) // c + 1
        c, d = c - e, d * a
    return out
