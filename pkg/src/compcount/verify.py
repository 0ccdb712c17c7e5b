"""Self-check suites behind the ``verify`` CLI subcommand.

Every check recomputes a family of values by at least two independent routes
(closed form vs dynamic program, recurrence vs series expansion vs explicit
enumeration) and compares them exactly. Randomized checks draw from a seeded
generator so runs are reproducible.
"""

from random import Random

from . import compositions, exactnum, graphcomp, series
from .compositions import PartBounds

SUITES = ("all", "compositions", "series", "graphs")

Check = tuple[str, bool, str]


def run_suite(suite: str, max_n: int = 10, seed: int = 0, cap: int | None = None) -> list[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if max_n < 1:
        raise ValueError("max_n must be positive")
    checks: list[Check] = []
    if suite in ("all", "compositions"):
        checks.extend(_composition_checks(max_n))
    if suite in ("all", "series"):
        checks.extend(_series_checks(max_n))
    if suite in ("all", "graphs"):
        checks.extend(_graph_checks(max_n, seed, cap))
    return checks


def _check(name: str, mismatches: list[str]) -> Check:
    return (name, not mismatches, "; ".join(mismatches[:3]))


def _all_compositions(n: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for parts in range(1, n + 1):
        out.extend(compositions.enumerate_compositions(n, parts, compositions.POSITIVE_PARTS))
    return out


def _composition_checks(max_n: int) -> list[Check]:
    checks = []
    top = min(max_n, 12)

    bad: list[str] = []
    bounds_cases = [
        PartBounds(0, None),
        PartBounds(1, None),
        PartBounds(1, 2),
        PartBounds(2, 5),
        PartBounds(0, 3),
    ]
    for n in range(top + 1):
        for k in range(min(n, 8) + 2):
            for bounds in bounds_cases:
                want = len(compositions.enumerate_compositions(n, k, bounds))
                got = compositions.count_restricted(n, k, bounds)
                if want != got:
                    bad.append(f"n={n} k={k} {bounds}: {got} != {want}")
    checks.append(_check("restricted counts match enumeration", bad))

    bad = []
    distinct = lambda parts: len(set(parts)) == len(parts)
    for n in range(top + 1):
        for k in range(n + 1):
            listed = compositions.enumerate_compositions(
                n, k, compositions.POSITIVE_PARTS, predicate=distinct
            )
            if compositions.count_compositions_distinct(n, k) != len(listed):
                bad.append(f"ordered n={n} k={k}")
            unordered = {tuple(sorted(c)) for c in listed}
            if compositions.count_partitions_distinct(n, k) != len(unordered):
                bad.append(f"unordered n={n} k={k}")
    checks.append(_check("distinct-part recurrences match enumeration", bad))

    bad = []
    for n in range(2 * max_n + 1):
        for k in range(n + 1):
            lhs = compositions.count_compositions_distinct(n, k)
            rhs = exactnum.factorial(k) * compositions.count_partitions_distinct(n, k)
            if lhs != rhs:
                bad.append(f"n={n} k={k}")
    checks.append(_check("ordered distinct counts are k! times unordered", bad))

    bad = []
    for n in range(1, top + 1):
        everything = _all_compositions(n)
        for k in range(1, min(n, 6) + 1):
            strict = sum(1 for c in everything if c[0] == k and all(x < k for x in c[1:]))
            weak = sum(1 for c in everything if c[0] == k and all(x <= k for x in c[1:]))
            if compositions.count_leading_strict(n, k) != strict:
                bad.append(f"strict n={n} k={k}")
            if compositions.count_leading_weak(n, k) != weak:
                bad.append(f"weak n={n} k={k}")
    checks.append(_check("leading-summand counters match enumeration", bad))

    bad = []
    for n in range(1, 4 * max_n):
        if compositions.count_leading_strict_total(n + 1) != compositions.leading_weak_total(n):
            bad.append(f"n={n}")
    checks.append(_check("strict total at n+1 equals weak total at n", bad))

    bad = []
    for n in range(1, top + 1):
        everything = _all_compositions(n)
        for k in range(1, min(n, 6) + 1):
            avoiding = sum(1 for c in everything if k not in c)
            if compositions.count_avoiding(n, k) != avoiding:
                bad.append(f"avoid n={n} k={k}")
            if compositions.count_containing(n, k) != len(everything) - avoiding:
                bad.append(f"contain n={n} k={k}")
            if compositions.count_avoiding(n, k) + compositions.count_containing(n, k) != 1 << (n - 1):
                bad.append(f"complement n={n} k={k}")
    checks.append(_check("avoid/contain counters match enumeration and sum to 2^(n-1)", bad))

    bad = []
    for m in range(1, 5):
        for n in range(min(max_n, 10) + 1):
            want = len(
                compositions.enumerate_compositions(n, 0)
            ) if n == 0 else sum(
                len(compositions.enumerate_compositions(n, parts, PartBounds(1, m)))
                for parts in range(1, n + 1)
            )
            if compositions.fibonacci_higher(m, n) != want:
                bad.append(f"m={m} n={n}")
    checks.append(_check("bounded-part totals match enumeration", bad))

    bad = []
    for n in range(top + 1):
        for k in range(min(n, 6) + 1):
            previous = None
            for upper in range(n + 2):
                value = compositions.count_restricted(n, k, PartBounds(0, upper))
                if previous is not None and value < previous:
                    bad.append(f"n={n} k={k} upper={upper}")
                previous = value
    checks.append(_check("counts grow with the upper part bound", bad))

    return checks


def _series_checks(max_n: int) -> list[Check]:
    checks = []
    order = max(40, 2 * max_n)

    bad: list[str] = []
    for k in range(1, 7):
        strict = series.gf_leading_strict(k).expand(order)
        weak = series.gf_leading_weak(k).expand(order)
        for n in range(order + 1):
            if strict[n] != compositions.count_leading_strict(n, k):
                bad.append(f"strict k={k} n={n}")
            if weak[n] != compositions.count_leading_weak(n, k):
                bad.append(f"weak k={k} n={n}")
    checks.append(_check("leading-summand series match the recurrences", bad))

    bad = []
    for k in range(1, 7):
        avoid = series.gf_avoiding(k).expand(order)
        contain = series.gf_containing(k).expand(order)
        for n in range(order + 1):
            if avoid[n] != compositions.count_avoiding(n, k):
                bad.append(f"avoid k={k} n={n}")
            if contain[n] != compositions.count_containing(n, k):
                bad.append(f"contain k={k} n={n}")
    checks.append(_check("avoid/contain series match the counters", bad))

    bad = []
    total = series.gf_distinct_total(order)
    for n in range(order + 1):
        if total[n] != compositions.count_compositions_distinct_total(n):
            bad.append(f"n={n}")
    checks.append(_check("distinct-part total series matches the counter", bad))

    bad = []
    strict_sum = series.TruncatedSeries.zero(order)
    weak_sum = series.TruncatedSeries.zero(order)
    for k in range(1, order + 1):
        strict_sum = strict_sum + series.gf_leading_strict(k).expand(order)
        weak_sum = weak_sum + series.gf_leading_weak(k).expand(order)
    z = series.TruncatedSeries((0, 1) + (0,) * (order - 1))
    if weak_sum.shifted(1) != strict_sum - z:
        bad.append("series identity failed")
    checks.append(_check("weak total series shifted by z equals strict total minus z", bad))

    bad = []
    for k in range(2, 7):
        direct = series.RationalGF((0,) * k + (1,), (1,) + (-1,) * (k - 1)).expand(order)
        if direct != series.gf_leading_strict(k).expand(order):
            bad.append(f"k={k}")
    checks.append(_check("both denominator forms of the strict gf agree", bad))

    return checks


def _graph_checks(max_n: int, seed: int, cap: int | None) -> list[Check]:
    checks = []
    rng = Random(seed)

    bad: list[str] = []
    cases = [("path", range(0, min(max_n, 16) + 1)),
             ("tree", range(0, min(max_n, 14) + 1)),
             ("complete", range(0, min(max_n, 12) + 1)),
             ("complete_minus_edge", range(2, min(max_n, 12) + 1)),
             ("cycle", range(3, min(max_n, 16) + 1)),
             ("ladder", range(1, min(max_n, 7) + 1))]
    for family, sizes in cases:
        for n in sizes:
            built = graphcomp.build_family(family, n)
            if graphcomp.count_compositions_graph(built, cap) != graphcomp.family_count(family, n):
                bad.append(f"{family} n={n}")
    checks.append(_check("family closed forms match the subset DP", bad))

    bad = []
    for n in range(min(max_n, 7) + 1):
        for graph in (
            graphcomp.build_family("path", n),
            graphcomp.build_family("complete", n),
            graphcomp.random_graph(rng, n, 0.4),
        ):
            if graphcomp.count_compositions_graph(graph, cap) != len(
                graphcomp.enumerate_graph_compositions(graph)
            ):
                bad.append(f"n={n} edges={sorted(graph.edges)}")
    checks.append(_check("subset DP matches partition enumeration", bad))

    bad = []
    for _ in range(25):
        n = rng.randint(1, min(max_n, 10))
        graph = graphcomp.random_connected_graph(rng, n, rng.uniform(0.0, 0.4))
        count = graphcomp.count_compositions_graph(graph, cap)
        if not (1 << (n - 1) if n else 1) <= count <= exactnum.bell(n):
            bad.append(f"n={n} count={count}")
    checks.append(_check("connected counts sit between path and complete", bad))

    bad = []
    for _ in range(15):
        n = rng.randint(2, min(max_n, 12))
        graph = graphcomp.random_graph(rng, n, rng.uniform(0.1, 0.4))
        if graphcomp.reduce_and_count(graph, cap) != graphcomp.count_compositions_graph(graph, cap):
            bad.append(f"n={n} edges={sorted(graph.edges)}")
    checks.append(_check("decomposition product matches the subset DP", bad))

    bad = []
    for n in range(1, 51):
        if graphcomp.ladder_binet(n) != graphcomp.family_count("ladder", n):
            bad.append(f"n={n}")
    checks.append(_check("ladder closed form matches the recurrence", bad))

    bad = []
    for _ in range(8):
        n = rng.randint(1, min(max_n, 12))
        tree = graphcomp.random_tree(rng, n)
        if graphcomp.count_compositions_graph(tree, cap) != (1 << (n - 1)):
            bad.append(f"n={n} edges={sorted(tree.edges)}")
    checks.append(_check("tree counts do not depend on tree shape", bad))

    bad = []
    for _ in range(10):
        n = rng.randint(2, min(max_n, 9))
        graph = graphcomp.random_graph(rng, n, 0.3)
        missing = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in graph.edges
        ]
        if not missing:
            continue
        extra = rng.choice(missing)
        bigger = graphcomp.LabeledGraph(n, graph.edges | {extra})
        if graphcomp.count_compositions_graph(bigger, cap) < graphcomp.count_compositions_graph(graph, cap):
            bad.append(f"n={n} edge={extra}")
    checks.append(_check("adding an edge never lowers the count", bad))

    return checks
