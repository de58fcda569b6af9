"""Exact generalized inverses in rings with involution.

Carriers are matrix rings over the rationals, the Gaussian rationals and the
integers mod n. The library computes Moore-Penrose, {1,3}, group, Drazin,
core and weighted core inverses exactly, checks reverse-order laws for the
core inverse on concrete inputs, and mines finite carriers for
counterexamples.
"""

from .errors import *  # noqa: F401,F403
from .geninv import (InverseKind, InverseResult, Kind, characterize_core, classify_element,
                     compute, compute_core, compute_drazin, compute_group, compute_mp,
                     compute_one_three, compute_weighted_core, verify_inverse)
from .laws import LAWS, check_law, get_law
from .search import MiningJob, MiningReport, classify_carrier, enumerate_carrier, mine
from .starring import (CarrierSpec, Element, RingElement, format_element, make_element, one,
                       parse_element, zero)
from .verdict import LawVerdict, Status

__version__ = "0.1.0"

__all__ = [
    "CarrierSpec", "Element", "RingElement", "make_element", "parse_element", "format_element", "zero", "one",
    "Kind", "InverseKind", "InverseResult", "compute", "compute_core", "compute_mp",
    "compute_one_three", "compute_group", "compute_drazin", "compute_weighted_core",
    "verify_inverse", "characterize_core", "classify_element",
    "LAWS", "get_law", "check_law", "LawVerdict", "Status",
    "MiningJob", "MiningReport", "mine", "enumerate_carrier", "classify_carrier",
]
