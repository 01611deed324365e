"""Test whether every cycle of a profile's evaluation graph is covered by one voter."""

from .condition import (
    ConditionReport,
    DictatorAssignment,
    Failure,
    check_condition1,
    local_dictators,
    maximal_cycle_incomparability,
    union_graph,
    voter_graph,
)
from .errors import (
    ConditionViolated,
    DuplicateLabel,
    ParamInvalid,
    ParseError,
    ProfileError,
    ProfileInvalid,
    SelfLoop,
    TooLarge,
    UnknownVoter,
)
from .formats import emit_report, parse_edge_list, parse_profile, serialize_profile
from .gen import GenParams, random_connected_graph, random_profile
from .graph import (
    BiconnectedComponent,
    Decomposition,
    Graph,
    articulation_vertices,
    biconnected_components,
    cycle_vertices,
    graph_from_edge_list,
    is_clique,
)
from .profile import Profile

__version__ = "0.1.0"
