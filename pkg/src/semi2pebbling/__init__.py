"""Exact t-fold pebbling numbers of trees, 2-paths and semi-2-trees.

The closed forms live in :mod:`semi2pebbling.formulas`, the brute-force
ground truth in :mod:`semi2pebbling.oracle`.
"""

from __future__ import annotations

from .formulas import PebblingAnswer, classify_root, pebbling_number, pebbling_number_at
from .graph import Configuration, Graph, parse_configuration, parse_graph
from .oracle import exact_pebbling_number, is_solvable
from .reductions import extremal_config
from .structure import RecognitionError, recognize_semi_two_tree

__all__ = [
    "Configuration",
    "Graph",
    "PebblingAnswer",
    "RecognitionError",
    "classify_root",
    "exact_pebbling_number",
    "extremal_config",
    "is_solvable",
    "parse_configuration",
    "parse_graph",
    "pebbling_number",
    "pebbling_number_at",
    "recognize_semi_two_tree",
]

__version__ = "0.1.0"
