"""Primitive sets, roots and intersections of submonoids of free monoids."""

from .biroot import BiRoot, biroots, unique_small_biroot
from .codes import (code_witness, combinatorial_rank, dependency_graph,
                    free_hull, free_rank, is_code)
from .errors import InvariantViolation, MalformedWitness, PreconditionError
from .intersection import intersect, intersect_2maximal
from .maximality import is_primitive_pair, is_primitive_set, pair_root
from .theta import ThetaMap, is_theta_primitive, theta_root
from .words import commute, is_primitive, parse_over, primitive_root

__all__ = [
    "BiRoot", "InvariantViolation", "MalformedWitness", "PreconditionError", "ThetaMap",
    "biroots", "code_witness", "combinatorial_rank", "commute", "dependency_graph",
    "free_hull", "free_rank", "intersect", "intersect_2maximal", "is_code",
    "is_primitive", "is_primitive_pair", "is_primitive_set", "is_theta_primitive",
    "pair_root", "parse_over", "primitive_root", "theta_root", "unique_small_biroot",
]
