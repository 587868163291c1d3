"""Geodesic, monophonic, and gated convexity in finite connected graphs:
hulls, shadows, imprints, semispaces, separation axioms, and halfspace
separation solvers, with exhaustive oracles for validation.
"""

from .graph import (
    ConditionWitness,
    DisconnectedError,
    EmptyGraphError,
    Graph,
    GraphError,
    LoopEdgeError,
    MetricTriangle,
    TooLarge,
    VertexSet,
    build_graph,
    check_metric_condition,
    dismantling_order,
    find_induced,
    format_edge_list,
    interval,
    is_bipartite,
    is_meshed,
    is_weakly_modular,
    maximal_cliques,
    metric_triangle_of,
    parse_edge_list,
)
from .convexity import (
    EmptyInput,
    NotPointedMaximalClique,
    ShadowSpec,
    check_pasch,
    check_peano,
    check_sandglass,
    convex_hull,
    equidistant,
    extended_shadow,
    imprint,
    is_convex,
    is_locally_convex,
    is_pointed_maximal_clique,
    join,
    shadow,
    union_shadow,
    w_partition,
)
from .altconvexity import (
    KINDS,
    ConvexityKind,
    gate,
    gated_hull,
    hull_by_kind,
    is_convex_by_kind,
    is_delta_closed,
    is_gated,
    is_monophonic_convex,
    monophonic_hull,
)
from .proximal import (
    ModeRequiresS3,
    PointedClique,
    PreconditionViolated,
    Semispace,
    enumerate_semispaces_tc,
    is_max_proximal,
    is_proximal,
    is_semispace,
    max_proximal_sets,
    pointed_maximal_cliques,
    proximal_leq,
)
from .oracles import (
    caratheodory_number,
    enumerate_convex_sets,
    enumerate_semispaces_bruteforce,
    helly_number,
    radon_number,
)
from .separation import (
    HalfspacePair,
    HereditaryDismantlingFailed,
    SeparationResult,
    StrategyInapplicable,
    TwoSatInstance,
    enumerate_halfspaces,
    greedy_separation,
    separate_gated,
    separate_monophonic,
    shadow_closure,
    three_step_separation,
    two_sat_solve,
)
from .axioms import (
    S3Verdict,
    check_convex_clique_shadows,
    check_s2,
    check_s3,
    check_s4,
    is_partial_cube,
)
from .families import BadParams, GAMMA_LABELS, generate

__version__ = "0.1.0"
