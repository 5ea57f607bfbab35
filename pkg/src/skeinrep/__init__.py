"""Exact SU(2) quantum representations of mapping class groups from skein theory."""

from .colorings import TrivalentGraph, enumerate_admissible, standard_graph, verlinde_dim, verlinde_formula
from .cyclotomic import CycField, CycNum, cyclotomic_field, quantum_int
from .pairing import GramForm, gram_form, hopf_matrix, theta
from .representation import RepMatrix, commutant_dimension, genus1_rep, genus2_rep, interpolation_Q
from .temperley_lieb import TLElement, jones_wenzl

__version__ = "0.1.0"

__all__ = [
    "CycField",
    "CycNum",
    "GramForm",
    "RepMatrix",
    "TLElement",
    "TrivalentGraph",
    "commutant_dimension",
    "cyclotomic_field",
    "enumerate_admissible",
    "genus1_rep",
    "genus2_rep",
    "gram_form",
    "hopf_matrix",
    "interpolation_Q",
    "jones_wenzl",
    "quantum_int",
    "standard_graph",
    "theta",
    "verlinde_dim",
    "verlinde_formula",
]
