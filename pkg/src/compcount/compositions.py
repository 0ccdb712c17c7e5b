"""Counting and enumeration of integer compositions under part constraints.

A composition of n is an ordered tuple of integer parts summing to n; order
is significant, so (1, 2) and (2, 1) are different. ``enumerate_compositions``
lists solutions explicitly and serves as the brute-force oracle for every
counter here; the counters themselves use closed forms, dynamic programs, or
linear recurrences, all in exact integer arithmetic.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import exactnum
from .errors import ResourceLimitError

Composition = tuple[int, ...]

DEFAULT_ENUMERATION_LIMIT = 10_000_000

PARTITIONS_DISTINCT = "partitions-distinct"
COMPOSITIONS_DISTINCT = "compositions-distinct"
TRIANGLE_KINDS = (PARTITIONS_DISTINCT, COMPOSITIONS_DISTINCT)


@dataclass(frozen=True)
class PartBounds:
    """Inclusive part-value bounds; ``upper=None`` means unbounded above."""

    lower: int = 0
    upper: int | None = None

    def __post_init__(self):
        if self.lower < 0:
            raise ValueError("lower part bound must be nonnegative")
        if self.upper is not None and self.upper < self.lower:
            raise ValueError("upper part bound is below the lower bound")


NONNEGATIVE_PARTS = PartBounds(0, None)
POSITIVE_PARTS = PartBounds(1, None)


@dataclass(frozen=True)
class Triangle:
    """Rows 0..R-1 of a distinct-part counting array; rows[n][k] covers k = 0..n."""

    kind: str
    rows: tuple[tuple[int, ...], ...]


def enumerate_compositions(
    n: int,
    k: int,
    bounds: PartBounds = NONNEGATIVE_PARTS,
    predicate: Callable[[Composition], bool] | None = None,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> list[Composition]:
    """List every k-part composition of n within the bounds, in lexicographic
    order, optionally filtered by a predicate on the whole tuple.

    This is the reference oracle for the counters in this module. The number
    of unfiltered solutions is checked against ``limit`` up front and a
    ResourceLimitError is raised if it would be exceeded.
    """
    total = count_restricted(n, k, bounds)
    if total > limit:
        raise ResourceLimitError(
            f"{total} compositions would exceed the enumeration limit of {limit}"
        )
    out: list[Composition] = []
    if n < 0 or k < 0:
        return out
    lo, hi = bounds.lower, bounds.upper

    def rec(remaining: int, parts_left: int, prefix: list[int]) -> None:
        if parts_left == 0:
            if remaining == 0:
                candidate = tuple(prefix)
                if predicate is None or predicate(candidate):
                    out.append(candidate)
            return
        top = remaining if hi is None else min(hi, remaining)
        for part in range(lo, top + 1):
            rest = remaining - part
            if rest < (parts_left - 1) * lo:
                break
            if hi is not None and rest > (parts_left - 1) * hi:
                continue
            prefix.append(part)
            rec(rest, parts_left - 1, prefix)
            prefix.pop()

    rec(n, k, [])
    return out


def count_restricted(n: int, k: int, bounds: PartBounds = NONNEGATIVE_PARTS) -> int:
    """Number of k-part compositions of n with every part inside the bounds.

    Bounds [0, inf) and [1, inf) use the stars-and-bars closed forms
    binomial(n+k-1, k-1) and binomial(n-1, k-1); anything else runs the
    dynamic program over (parts used, running sum). Total: returns 0 whenever
    no solution exists.
    """
    if n < 0 or k < 0:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    if bounds.lower == 0 and bounds.upper is None:
        return exactnum.binomial(n + k - 1, k - 1)
    if bounds.lower == 1 and bounds.upper is None:
        return exactnum.binomial(n - 1, k - 1)
    return _count_by_dp(n, k, bounds.lower, bounds.upper)


def _count_by_dp(n: int, k: int, lower: int, upper: int | None) -> int:
    """General bounded-part count; also the cross-check for the closed forms."""
    top = n if upper is None else upper
    ways = [1] + [0] * n
    for _ in range(k):
        nxt = [0] * (n + 1)
        for total, count in enumerate(ways):
            if count:
                for part in range(lower, min(top, n - total) + 1):
                    nxt[total + part] += count
        ways = nxt
    return ways[n]


@lru_cache(maxsize=None)
def _distinct_rows(last_row: int, ordered: bool) -> tuple[tuple[int, ...], ...]:
    """Rows 0..last_row of the distinct-nonzero-part array.

    Row recurrence: removing one unit from each of the k parts either keeps
    k distinct parts (smallest part was > 1) or leaves k-1 (smallest part was
    exactly 1); for ordered counts the reattached unit part can sit in any of
    the k positions.
    """
    rows: list[tuple[int, ...]] = []
    for m in range(last_row + 1):
        row = [0] * (m + 1)
        if m == 0:
            row[0] = 1
        else:
            for k in range(1, m + 1):
                src = rows[m - k]
                same = src[k] if k < len(src) else 0
                fewer = src[k - 1] if k - 1 < len(src) else 0
                row[k] = same + (k * fewer if ordered else fewer)
        rows.append(tuple(row))
    return tuple(rows)


def count_partitions_distinct(n: int, k: int) -> int:
    """Partitions of n into k distinct nonzero parts."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _distinct_rows(n, False)[n][k]


def count_compositions_distinct(n: int, k: int) -> int:
    """Compositions of n into k distinct nonzero parts; equals
    k! * count_partitions_distinct(n, k)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _distinct_rows(n, True)[n][k]


def count_compositions_distinct_total(n: int) -> int:
    """All compositions of n into distinct nonzero parts, summed over every
    part count k >= 1; in particular the total for n <= 0 is 0 even though
    the k = 0 array entry at n = 0 is 1."""
    if n <= 0:
        return 0
    total = 0
    k = 1
    while k * (k + 1) // 2 <= n:
        total += count_compositions_distinct(n, k)
        k += 1
    return total


def _leading_sequence(limit: int, k: int, weak: bool) -> list[int]:
    """Values 0..limit of the leading-summand count by its linear recurrence.

    f(m) = 2 f(m-1) - f(m-gap) + [m == k] - [m == k+1], zero below m = k,
    where gap is k for the strict variant and k+1 for the weak one.
    """
    gap = k + 1 if weak else k
    values = [0] * (limit + 1)
    for m in range(k, limit + 1):
        acc = 2 * values[m - 1]
        if m - gap >= 0:
            acc -= values[m - gap]
        if m == k:
            acc += 1
        elif m == k + 1:
            acc -= 1
        values[m] = acc
    return values


def count_leading_strict(n: int, k: int) -> int:
    """Compositions of n into positive parts whose first part is exactly k
    and every later part is strictly smaller than k."""
    if k < 1 or n < k:
        return 0
    return _leading_sequence(n, k, weak=False)[n]


def count_leading_weak(n: int, k: int) -> int:
    """Compositions of n into positive parts whose first part is exactly k
    and no later part exceeds k."""
    if k < 1 or n < k:
        return 0
    return _leading_sequence(n, k, weak=True)[n]


def count_leading_strict_total(n: int) -> int:
    """Compositions of n whose first part is strictly larger than the rest."""
    if n < 1:
        return 0
    return sum(count_leading_strict(n, k) for k in range(1, n + 1))


def leading_weak_total(n: int) -> int:
    """Compositions of n whose first part is a (weak) maximum; equals
    count_leading_strict_total(n + 1) for n >= 1."""
    if n < 1:
        return 0
    return sum(count_leading_weak(n, k) for k in range(1, n + 1))


def _avoiding_direct(limit: int, k: int) -> list[int]:
    """Counts of compositions of 0..limit with no part equal to k, by the
    full convolution over the first part. Index 0 holds the empty composition."""
    counts = [0] * (limit + 1)
    counts[0] = 1
    for m in range(1, limit + 1):
        counts[m] = sum(counts[m - j] for j in range(1, m + 1) if j != k)
    return counts


def count_avoiding(n: int, k: int) -> int:
    """Compositions of n into positive parts none of which equals k.

    Seeded with direct counts up to n = k + 1 and continued with the
    four-term recurrence c(m) = 2c(m-1) - c(m-k) + c(m-k-1); the published
    form of this recurrence with +c(m-k+1) as the final term is wrong
    (k = 2, m = 4 gives 5 instead of 4), which the test suite pins down.
    """
    if k < 1:
        raise ValueError("the avoided part must be positive")
    if n < 1:
        return 0
    seeded = min(n, k + 1)
    values = [0] * (n + 1)
    direct = _avoiding_direct(seeded, k)
    for m in range(1, seeded + 1):
        values[m] = direct[m]
    for m in range(k + 2, n + 1):
        values[m] = 2 * values[m - 1] - values[m - k] + values[m - k - 1]
    return values[n]


def count_containing(n: int, k: int) -> int:
    """Compositions of n into positive parts with at least one part equal to
    k: the complement of count_avoiding within all 2^(n-1) compositions."""
    if k < 1:
        raise ValueError("the required part must be positive")
    if n < 1:
        return 0
    return (1 << (n - 1)) - count_avoiding(n, k)


def fibonacci_higher(m: int, n: int) -> int:
    """Order-m Fibonacci number: compositions of n into parts of size at most
    m, with value 1 at n = 0 (the empty composition)."""
    if m < 1:
        raise ValueError("the part-size bound must be positive")
    if n < 0:
        return 0
    values = [0] * (n + 1)
    values[0] = 1
    for j in range(1, n + 1):
        values[j] = sum(values[j - i] for i in range(1, min(m, j) + 1))
    return values[n]


def triangle(kind: str, rows: int) -> Triangle:
    """The first ``rows`` rows of the distinct-part partition or composition
    array, row n holding entries for k = 0..n."""
    if kind not in TRIANGLE_KINDS:
        raise ValueError(f"unknown triangle kind {kind!r}; expected one of {TRIANGLE_KINDS}")
    if rows < 1:
        raise ValueError("need at least one row")
    return Triangle(kind, _distinct_rows(rows - 1, kind == COMPOSITIONS_DISTINCT))
