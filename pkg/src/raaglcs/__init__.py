"""Lower central series depth in graph groups via truncated trace series,
with a crossing-sequence transfer from surface group words."""

from .graph import Graph, load_graph, parse_graph
from .lab import (DepthFunctionRow, VerifyReport, commutator_witness,
                  depth_function, enumerate_elements, verify_depth_bound)
from .magnus import (DepthResult, in_dimension_subgroup, lcs_depth, mu,
                     syllable_factor)
from .series import TruncatedSeries
from .surface import (ComponentCheck, Dissection, InjectivityReport,
                      SurfaceDepthReport, check_injectivity_criterion,
                      check_relator, derive_intersections, format_dissection,
                      intersection_graph, load_dissection, parse_dissection,
                      phi, relator_syllables, standard_dissection,
                      surface_depth_check)
from .words import GroupWord, Trace, commutator, parse_syllables, parse_word

__all__ = [
    "ComponentCheck",
    "DepthFunctionRow",
    "DepthResult",
    "Dissection",
    "Graph",
    "GroupWord",
    "InjectivityReport",
    "SurfaceDepthReport",
    "Trace",
    "TruncatedSeries",
    "VerifyReport",
    "check_injectivity_criterion",
    "check_relator",
    "commutator",
    "commutator_witness",
    "depth_function",
    "derive_intersections",
    "enumerate_elements",
    "format_dissection",
    "in_dimension_subgroup",
    "intersection_graph",
    "lcs_depth",
    "load_dissection",
    "load_graph",
    "mu",
    "parse_dissection",
    "parse_graph",
    "parse_syllables",
    "parse_word",
    "phi",
    "relator_syllables",
    "standard_dissection",
    "surface_depth_check",
    "syllable_factor",
    "verify_depth_bound",
]
