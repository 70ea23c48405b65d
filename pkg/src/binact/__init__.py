"""Binary actions of finite groups on finite carriers.

Validated Cayley-table groups, the star monoid of binary operations,
binary-action axioms and distributivity, orbits and orbit-space quotients,
finite-topology theorem checks, and an exhaustive pruned enumerator with
canonical forms and counterexample mining.
"""

from .actions import (
    BinaryAction,
    OrdinaryAction,
    action_from_json,
    action_to_json,
    all_biequivariant_maps,
    biequivariance_implies_equivariance_check,
    conjugation_coset_action,
    from_ordinary,
    induced_action,
    is_biequivariant,
    is_distributive,
    is_equivariant,
    make_ordinary_action,
    morphism_to_monoid,
    ordinary_from_json,
    ordinary_to_json,
    trivial_action,
    validate_action,
)
from .binops import (
    BinaryOp,
    identity_op,
    invertible_group,
    is_invertible,
    make_binary_op,
    op_from_json,
    op_to_json,
    star,
    try_invert,
)
from .groups import (
    FiniteGroup,
    all_subgroups,
    builtin_group,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    group_from_json,
    group_to_json,
    is_abelian,
    klein_four,
    make_group,
    quaternion_group,
    restrict,
    subgroup_closure,
    symmetric,
)
from .orbits import (
    CarrierMap,
    FunctorLawsReport,
    OrbitSpace,
    bi_invariant_closure_trace,
    delta,
    functor_laws_check,
    induced_quotient_map,
    is_bi_invariant,
    k_set,
    minimal_bi_invariant,
    orbit,
    orbit_report_json,
    orbit_space,
)
from .search import (
    EnumerationResult,
    EnumerationTask,
    WitnessReport,
    all_ordinary_actions,
    canonicalize,
    enumerate_actions,
    greedy_generators,
    mine_counterexamples,
    permutation_homomorphisms,
)
from .topology import (
    FiniteTopology,
    ProbeRecord,
    TopologicalBinaryGSpace,
    all_topologies,
    check_gaa_closed,
    check_guu_open,
    check_ka_closed,
    check_projection_closed_proper,
    check_quotient_hausdorff_compact,
    closure,
    discrete_topology,
    indiscrete_topology,
    interior,
    is_compact,
    is_continuous,
    is_continuous_map,
    is_discrete,
    is_hausdorff,
    is_locally_compact,
    make_space,
    minimal_neighborhoods,
    points_of,
    quotient_topology,
    run_topology_battery,
    topology_from_json,
    topology_to_json,
    validate_topology,
)

__version__ = "0.1.0"
