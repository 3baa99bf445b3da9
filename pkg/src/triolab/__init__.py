"""Critical product sets in finite groups: deficiency, trios, classification."""

from triolab.groups import (
    FiniteGroup,
    QuotientMap,
    Subgroup,
    SubgroupFacts,
    center,
    construct_group,
    quotient,
    subgroup_predicates,
    subgroups,
)
from triolab.incidence import (
    CollisionError,
    Cross,
    DuetView,
    DuetWeights,
    HamidouneBlock,
    IncidenceChorus,
    SabidussiRealization,
    TrioView,
    associated_trio,
    block_closure,
    blocks_of,
    cayley_chorus,
    cayley_duet,
    cayley_trio,
    cross_from_point,
    cross_from_sets,
    hamidoune_block,
    purify,
    sabidussi_realize,
    satisfies_olson_bound,
    trio_deficiency_inc,
    trio_is_maximal,
    uncross,
    weak_purify,
    weights,
)
from triolab.graphs import (
    DerivedSets,
    EquitableRecord,
    GraphAutomorphisms,
    SimpleGraph,
    VideoSpec,
    build_video,
    cut_classify,
    cycle_graph,
    cycles_with_vertices,
    derived_sets,
    enumerate_small_cuts,
    graph_automorphisms,
    graphic_duet,
    is_equitable,
    line_graph,
    named_graph,
    paths_with_vertices,
)
from triolab.octahedral import (
    OctahedralConfiguration,
    OctType,
    UnclassifiedConfigError,
    classify_config,
    enumerate_maximal_critical_configs,
    is_maximal_config,
    maximalize_config,
    to_cayley_oct_chorus,
    validate_config,
    verify_oct_type,
)
from triolab.progressions import (
    DihedralPrechord,
    DihedralProgression,
    GeometricProgression,
    build_prechord,
    detect_dihedral,
    detect_geometric,
    dihedral_form,
    dihedral_product,
)
from triolab.setops import (
    GroupSubset,
    SubsetTrio,
    deficiency_pair,
    product_set,
    rep_min,
    similarity_orbit,
    stabilizers,
    trio_close,
    trio_from_pair,
)

__version__ = "0.1.0"
