"""Precoloring extension when precolored vertices may be close to each other."""

from .colorgraph import OrderedPartition, build_partition, find_good_matching, one_factorization, weight
from .extend2 import GuaranteeNotApplicable, extend_distance2
from .extend3 import extend_distance3
from .graph import Graph, extends, is_proper, pairs_within, validate_precoloring
from .instances import Instance, gen_random, gen_sharpness_even, gen_sharpness_odd

__all__ = [
    "Graph",
    "GuaranteeNotApplicable",
    "Instance",
    "OrderedPartition",
    "build_partition",
    "extend_distance2",
    "extend_distance3",
    "extends",
    "find_good_matching",
    "gen_random",
    "gen_sharpness_even",
    "gen_sharpness_odd",
    "is_proper",
    "one_factorization",
    "pairs_within",
    "validate_precoloring",
    "weight",
]
