"""Orbit cyclic graphs of finite groups under automorphism actions.

The vertex set is the action's orbits on nonidentity elements; two orbits
are adjacent when some cross pair generates a cyclic subgroup.  The trivial
action recovers the enhanced power graph, the inner action the cyclic
conjugacy class graph.
"""

from .actions import (
    AutAction,
    Automorphism,
    OrbitPartition,
    close_action,
    element_orbits,
    explicit_automorphism,
    from_conjugator,
    full_aut_brute,
    inner_generators,
    normalizer_transitive_on_cyclic,
    order_class_transitive,
    subgroup_orbits_order_p,
    trivial_action,
)
from .delta import (
    AnalysisReport,
    DeltaGraph,
    analyze,
    build_ccc_cyclic,
    build_delta,
    build_enhanced_power,
    distance,
    quotient_of_enhanced,
)
from .errors import AutocycError
from .perm import (
    FiniteGroup,
    Permutation,
    compose,
    enumerate_group,
    inverse,
    load_group,
)
from .props import (
    FrobeniusWitness,
    GroupProfile,
    abelian_type,
    all_elements_prime_order,
    cyc_set,
    frobenius_witness,
    is_generalized_quaternion,
    is_homocyclic,
    is_p_group,
    kernel_k,
    minimal_subgroups,
    normal_subgroups,
    profile,
    unique_subgroup_of_order_p,
)
from .verify import CorpusPair, SuiteResult, Verdict, run_suite

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "AutAction",
    "Automorphism",
    "AutocycError",
    "CorpusPair",
    "DeltaGraph",
    "FiniteGroup",
    "FrobeniusWitness",
    "GroupProfile",
    "OrbitPartition",
    "Permutation",
    "SuiteResult",
    "Verdict",
    "abelian_type",
    "all_elements_prime_order",
    "analyze",
    "build_ccc_cyclic",
    "build_delta",
    "build_enhanced_power",
    "close_action",
    "compose",
    "cyc_set",
    "distance",
    "element_orbits",
    "enumerate_group",
    "explicit_automorphism",
    "frobenius_witness",
    "from_conjugator",
    "full_aut_brute",
    "inner_generators",
    "inverse",
    "is_generalized_quaternion",
    "is_homocyclic",
    "is_p_group",
    "kernel_k",
    "load_group",
    "minimal_subgroups",
    "normal_subgroups",
    "normalizer_transitive_on_cyclic",
    "order_class_transitive",
    "profile",
    "quotient_of_enhanced",
    "run_suite",
    "subgroup_orbits_order_p",
    "trivial_action",
    "unique_subgroup_of_order_p",
]
