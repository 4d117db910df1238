"""Farey maps modulo n: the quotients of the Farey tessellation by the
principal congruence subgroups, as combinatorial maps with their invariants."""

__version__ = "0.1.0"

from .errors import (
    FareyMapError,
    InvalidLevel,
    InvalidVertex,
    LevelMismatch,
    NotPrime,
    PreconditionViolated,
    TooLarge,
    UnsupportedFormat,
)
from .modular_arith import (
    MapStatistics,
    euler_phi,
    fibonacci_semiperiod,
    genus,
    mu,
    statistics,
    vertex_count,
)
from .projective_line import (
    FareyFraction,
    adjacent,
    enumerate_vertices,
    lift_to_unimodular,
    make_fraction,
    parse_fraction,
    unit_shift,
)
from .psl2 import Psl2Element, act_on_vertex, element, enumerate_group, multiply, stabilizer_of_infinity
from .map_builder import CombinatorialMap, build_map, faces, star, underlying_graph
from .petrie import fibonacci_vertex, petrie_length, petrie_path_from
from .metrics import (
    DistanceClass,
    bfs_distance,
    classify_distance_prime,
    diameter,
    distance2_criterion,
    poles,
    star_decomposition,
)
