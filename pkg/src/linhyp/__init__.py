"""Exact toolkit for 3-uniform linear hypergraphs: matchings with
augmenting-set certificates, structural decompositions, extremal family
generators, and a verification harness for the size bounds."""

from .core import (
    Edge,
    Family,
    FamilyFormatError,
    SimpleGraph,
    degree,
    edges_meeting,
    family_from_json,
    family_to_json,
    graph_as_family,
    is_linear,
    is_uniform,
    max_degree,
    relabel,
    remove_vertex_star,
)
from .matching import (
    augment,
    find_augmenting_set,
    is_augmenting_set,
    is_matching,
    maximum_matching,
    nu,
)
from .structure import (
    APEX_D1_THRESHOLD,
    DPartition,
    FamilyPartition,
    MatchingPartition,
    NestedDecomposition,
    StructureViolation,
    d2_pair,
    d2_triple,
    d3_triple,
    d_partition,
    family_partition,
    g_d2,
    matching_partition,
    nested_decomposition,
    s_f,
    structure_summary,
)
from .generators import (
    chvatal_hanson_graph,
    enumerate_families,
    graph_lift,
    random_linear_family,
    steiner_triple_system,
    sunflower_family,
)
from .verdict import (
    BoundRecord,
    BoundReport,
    SweepReport,
    evaluate_family,
    packing_nu,
    s_f_by_enumeration,
    search_remark_777,
    search_unique_8_config,
    sweep,
)

__version__ = "0.1.0"
