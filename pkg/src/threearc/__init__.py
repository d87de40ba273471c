"""3-arc graphs: construction, domination bounds and recognition at desk scale."""

from .arcs import (
    LabeledGraph,
    all_three_arcs,
    build_X,
    build_X_directed,
    is_self_paired,
    is_three_arc,
    iterate_X,
)
from .constructions import (
    ArcDominationPlan,
    AuxiliaryJ,
    SWUPartition,
    arcs_dominate,
    build_AD,
    build_AS,
    lemma2a_construct,
    lemma2b_construct,
    lemma2c_construct,
    partition_swu,
    theorem3_bound,
    theorem3_construct,
    theorem4_bounds,
    theorem4b_construct,
    theorem5_clawfree_construct,
)
from .domination import (
    DominationCertificate,
    all_gamma_sets,
    gamma,
    gamma_exact,
    greedy_dominating,
    is_dominating,
    vi_set,
)
from .errors import (
    GenerationFailed,
    MalformedInputError,
    PreconditionError,
    ResourceLimitError,
    ThreeArcError,
    ValidationError,
    VerificationError,
)
from .families import family_A, is_corona
from .graph import (
    DiGraph,
    Graph,
    components,
    find_claw,
    from_edge_list,
    from_graph6,
    is_claw_free,
    is_connected,
    parse_graph,
    to_edge_list,
    to_graph6,
)
from .iso import check_isomorphism, find_isomorphism, is_isomorphic
from .recognition import (
    CharacterizationCertificate,
    construct_H,
    derive_certificate,
    embed_in_cone_check,
    recognize_small,
    verify_certificate,
)

__version__ = "0.1.0"
