"""Bruhat intervals, inversion arrangements and NBC sets in finite Coxeter groups."""

from .arrangement import (
    InversionArrangement,
    characteristic_polynomial,
    circuits,
    inversion_arrangement,
    lexmax_preimage,
    nbc_sets,
    phi,
    phi_check,
    region_count_charpoly,
)
from .bruhat import (
    broken_rhombi,
    bruhat_graph,
    bruhat_leq,
    degree,
    directed_distance,
    distance_condition,
    edge_set_at,
    ideal,
    is_regular_bg,
    meet_point,
)
from .coxeter import (
    CoxeterDatum,
    CoxeterSystem,
    Element,
    absolute_length_bfs,
    absolute_length_carter,
    build_system,
    coxeter_length,
    independent_roots,
    inverse,
    inversions,
    multiply,
    reduced_word,
)
from .typea import Permutation, check_collection, to_element, to_permutation

__version__ = "0.1.0"
