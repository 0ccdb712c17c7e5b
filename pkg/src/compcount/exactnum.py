"""Exact integer arithmetic for counting: factorials, binomials, Bell and
Stirling numbers, and their composition/partition summation formulas.

Counts are plain Python ints (arbitrary precision). All functions are pure.
Division appears only where a formula guarantees divisibility, and every such
division checks that the remainder is zero; intermediate non-integer sums are
accumulated as exact ``fractions.Fraction`` values, never floats.
"""

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator


def exact_div(numerator: int, divisor: int) -> int:
    """Divide two integers, insisting on a zero remainder."""
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise ArithmeticError(f"{numerator} is not divisible by {divisor}")
    return quotient


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, total over all integers: 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / (p_1! p_2! ... p_m!) for nonnegative parts summing to n.

    A part list that does not sum to n is a structural error, not a zero.
    """
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts sum to {sum(parts)}, expected {n}")
    result = factorial(n)
    for p in parts:
        result = exact_div(result, factorial(p))
    return result


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Number of set partitions of an n-element set; bell(0) == 1."""
    if n < 0:
        return 0
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            above = prev[k] if k < m else 0
            row[k] = k * above + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty blocks, by the standard
    recurrence {n,k} = k*{n-1,k} + {n-1,k-1} with {0,0} = 1."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling2_row(n)[k]


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple[int, ...]:
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            above = prev[k] if k < m else 0
            row[k] = (m - 1) * above + prev[k - 1]
    return tuple(row)


def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind (permutations of n
    elements with k cycles), via [n,k] = (n-1)[n-1,k] + [n-1,k-1]."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling1_row(n)[k]


def _positive_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered k-tuples of positive integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in _positive_compositions(n - first, k - 1):
            yield (first,) + rest


def stirling2_via_compositions(n: int, k: int) -> int:
    """Second-kind Stirling number as a multinomial sum over the ordered ways
    of splitting n into k positive summands, divided (exactly) by k!."""
    if n < 1 or k < 1:
        raise ValueError("requires n >= 1 and k >= 1")
    total = 0
    for parts in _positive_compositions(n, k):
        total += multinomial(n, parts)
    return exact_div(total, factorial(k))


def stirling1_via_compositions(n: int, k: int) -> int:
    """First-kind Stirling number as (n!/k!) times the sum of reciprocal part
    products over the same ordered splittings.

    The reciprocal sum is accumulated as an exact rational; the final product
    must come out an integer.
    """
    if n < 1 or k < 1:
        raise ValueError("requires n >= 1 and k >= 1")
    total = Fraction(0)
    for parts in _positive_compositions(n, k):
        total += Fraction(1, math.prod(parts))
    result = Fraction(factorial(n), factorial(k)) * total
    if result.denominator != 1:
        raise ArithmeticError("reciprocal sum did not yield an integer")
    return result.numerator


def equal_block_partitions(eta: int, kappa: int, lam: int) -> int:
    """Partitions of an eta-set into kappa blocks of equal size lam.

    Zero unless eta == kappa * lam; otherwise eta! / (kappa! * (lam!)^kappa),
    which divides exactly.
    """
    if lam < 1:
        raise ValueError("block size must be positive")
    if eta < 0 or kappa < 0 or eta != kappa * lam:
        return 0
    return exact_div(factorial(eta), factorial(kappa) * factorial(lam) ** kappa)


def _partitions_into_k_parts(n: int, k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonincreasing k-tuples of positive integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    top = n - k + 1 if largest is None else min(largest, n - k + 1)
    for first in range(top, 0, -1):
        if n - first > (k - 1) * first:
            break
        for rest in _partitions_into_k_parts(n - first, k - 1, first):
            yield (first,) + rest


def binomial_via_partition_multiplicities(n: int, k: int) -> int:
    """Binomial(n-1, k-1) recovered as a sum over the partitions of n into
    exactly k parts: each partition with part multiplicities (m_1, m_2, ...)
    contributes k! / (m_1! m_2! ...), the number of its orderings."""
    if n < 1 or k < 1 or k > n:
        return 0
    total = 0
    for parts in _partitions_into_k_parts(n, k):
        total += multinomial(k, Counter(parts).values())
    return total
