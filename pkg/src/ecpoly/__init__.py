"""Exact edge cover polynomials of small simple graphs."""

from .canon import canonical_code
from .engines import (
    count_covers,
    count_covers_brute,
    count_covers_dp,
    count_covers_ie,
    edge_cover_polynomial,
    enumerate_minimum_covers,
)
from .graph import (
    DegreeStats,
    Graph,
    corona_empty,
    degree_stats,
    disjoint_union,
    edge_cover_number,
    from_edge_list,
    maximum_matching_size,
    parse_graph6,
    petersen,
    to_graph6,
)
from .polynomial import CoverTable, ECPolynomial, binomial, evaluate, from_cover_table, multiply

__version__ = "0.1.0"
