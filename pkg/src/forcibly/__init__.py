"""Forcibly tree, unicyclic and bicyclic graphic sequences.

Closed-form classifiers, an exhaustive realization oracle to check them
against, and the switching constructions and disconnected gadgets that
separate the two.
"""

__version__ = "0.1.0"

from .classifier import (
    ForciblyVerdict,
    classify,
    classify_forcibly_bicyclic,
    classify_forcibly_tree,
    classify_forcibly_unicyclic,
    cross_check,
)
from .enumeration import (
    check_forcibly,
    enumerate_labeled,
    enumerate_nonisomorphic,
    oracle_forcibly_bicyclic,
    oracle_forcibly_tree,
    oracle_forcibly_unicyclic,
)
from .graph import Graph, bicyclic_core, degree_sequence
from .sequence import DegreeSequence, class_by_edge_count, havel_hakimi_realize, is_graphic, parse_sequence, render_sequence
from .witness import disconnected_witness
