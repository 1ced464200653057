"""Exact inertia, girth, balance and switching for signed graphs."""

from .graph import GraphError, Inertia, SignedGraph, add_twin, add_vertex, build, negate, switch, switch_set
from .inertia import (
    determinant_exact,
    inertia_by_pendant_reduction,
    inertia_cycle_closed_form,
    inertia_exact,
    inertia_path_closed_form,
)
from .invariants import girth, is_balanced, is_connected, switching_equivalent
from .canon import canonical_certificate, switching_isomorphic
from .constructors import (
    make_canonical_unicyclic,
    make_complete_bipartite,
    make_complete_multipartite,
    make_cycle,
    make_cycle_star_join,
    make_path,
    make_theta,
)
from .enumeration import EnumerationSpec, LimitError, enumerate_signed
from .families import classify_negative_inertia, classify_nullity, classify_positive_inertia
from .catalog import ExtremalCatalog
from .verify import derive_catalog, verify_theorem
from .fileio import parse_signed_graph, read_signed_graph, write_signed_graph

__version__ = "0.1.0"

__all__ = [
    "EnumerationSpec",
    "ExtremalCatalog",
    "GraphError",
    "Inertia",
    "LimitError",
    "SignedGraph",
    "add_twin",
    "add_vertex",
    "build",
    "canonical_certificate",
    "classify_negative_inertia",
    "classify_nullity",
    "classify_positive_inertia",
    "derive_catalog",
    "determinant_exact",
    "enumerate_signed",
    "girth",
    "inertia_by_pendant_reduction",
    "inertia_cycle_closed_form",
    "inertia_exact",
    "inertia_path_closed_form",
    "is_balanced",
    "is_connected",
    "make_canonical_unicyclic",
    "make_complete_bipartite",
    "make_complete_multipartite",
    "make_cycle",
    "make_cycle_star_join",
    "make_path",
    "make_theta",
    "negate",
    "parse_signed_graph",
    "read_signed_graph",
    "switch",
    "switch_set",
    "switching_equivalent",
    "switching_isomorphic",
    "verify_theorem",
    "write_signed_graph",
]
