"""Injective colorings of sparse graphs with Delta + 2 colors."""

from __future__ import annotations

from .density import DensityWitness, mad_bruteforce, mad_exact, satisfies_hypothesis
from .discharge import (ChargeLedger, average_degree_certificate, discharge, discharge_lemma6,
                        discharge_thm2, discharge_two_phase)
from .errors import InjColorError
from .formats import emit_graph, parse_graph
from .graph import Coloring, Graph, girth, neighboring_graph, verify_injective
from .listcolor import chi_exact, degree_choosable_color, extend_surplus, is_gallai_structure, list_color_exact
from .reduce import (Case, build_aux_H, color_via_K, component_surplus, extend, find_config, peel,
                     plan_k_subgraph)
from .solver import BOUND_DELTA3, BOUND_GENERAL, Report, color_injective

__version__ = "0.1.0"

__all__ = [
    "BOUND_DELTA3", "BOUND_GENERAL", "Case", "ChargeLedger", "Coloring", "DensityWitness", "Graph",
    "InjColorError", "Report", "average_degree_certificate", "build_aux_H", "chi_exact",
    "color_injective", "color_via_K", "component_surplus", "degree_choosable_color", "discharge",
    "discharge_lemma6", "discharge_thm2", "discharge_two_phase", "emit_graph", "extend",
    "extend_surplus", "find_config", "girth", "is_gallai_structure", "list_color_exact",
    "mad_bruteforce", "mad_exact", "neighboring_graph", "parse_graph", "peel", "plan_k_subgraph",
    "satisfies_hypothesis", "verify_injective",
]
