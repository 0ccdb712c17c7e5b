"""Exact counting and enumeration of integer compositions and graph compositions.

Counts are plain Python ints, so every result is exact at any magnitude.
The library pairs each counting formula or recurrence with an independent
brute-force route (explicit enumeration or a separate dynamic program) and
the ``verify`` CLI subcommand cross-checks them.
"""

from .compositions import (
    COMPOSITIONS_DISTINCT,
    NONNEGATIVE_PARTS,
    PARTITIONS_DISTINCT,
    POSITIVE_PARTS,
    Composition,
    PartBounds,
    Triangle,
    count_avoiding,
    count_compositions_distinct,
    count_compositions_distinct_total,
    count_containing,
    count_leading_strict,
    count_leading_strict_total,
    count_leading_weak,
    count_partitions_distinct,
    count_restricted,
    enumerate_compositions,
    fibonacci_higher,
    leading_weak_total,
    triangle,
)
from .errors import ResourceLimitError
from .exactnum import (
    bell,
    binomial,
    binomial_via_partition_multiplicities,
    equal_block_partitions,
    exact_div,
    factorial,
    multinomial,
    stirling1,
    stirling1_via_compositions,
    stirling2,
    stirling2_via_compositions,
)
from .graphcomp import (
    DEFAULT_VERTEX_CAP,
    FAMILIES,
    GraphParseError,
    LabeledGraph,
    build_family,
    count_compositions_graph,
    enumerate_graph_compositions,
    family_count,
    format_edge_list,
    is_connected,
    ladder_binet,
    parse_edge_list,
    random_connected_graph,
    random_graph,
    random_tree,
    reduce_and_count,
)
from .series import (
    RationalGF,
    TruncatedSeries,
    gf_all_compositions,
    gf_avoiding,
    gf_containing,
    gf_distinct_total,
    gf_leading_strict,
    gf_leading_weak,
    series_from_rational,
)

__all__ = [
    "COMPOSITIONS_DISTINCT",
    "NONNEGATIVE_PARTS",
    "PARTITIONS_DISTINCT",
    "POSITIVE_PARTS",
    "Composition",
    "DEFAULT_VERTEX_CAP",
    "FAMILIES",
    "GraphParseError",
    "LabeledGraph",
    "PartBounds",
    "RationalGF",
    "ResourceLimitError",
    "Triangle",
    "TruncatedSeries",
    "bell",
    "binomial",
    "binomial_via_partition_multiplicities",
    "build_family",
    "count_avoiding",
    "count_compositions_distinct",
    "count_compositions_distinct_total",
    "count_compositions_graph",
    "count_containing",
    "count_leading_strict",
    "count_leading_strict_total",
    "count_leading_weak",
    "count_partitions_distinct",
    "count_restricted",
    "enumerate_compositions",
    "enumerate_graph_compositions",
    "equal_block_partitions",
    "exact_div",
    "factorial",
    "family_count",
    "fibonacci_higher",
    "format_edge_list",
    "gf_all_compositions",
    "gf_avoiding",
    "gf_containing",
    "gf_distinct_total",
    "gf_leading_strict",
    "gf_leading_weak",
    "is_connected",
    "ladder_binet",
    "leading_weak_total",
    "multinomial",
    "parse_edge_list",
    "random_connected_graph",
    "random_graph",
    "random_tree",
    "reduce_and_count",
    "series_from_rational",
    "stirling1",
    "stirling1_via_compositions",
    "stirling2",
    "stirling2_via_compositions",
    "triangle",
]
