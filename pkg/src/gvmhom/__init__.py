"""Generalized Verma module homomorphisms on the Dirac-operator orbit in type B."""

from .dirac import HomGraph, OrbitReport, analyze_orbit, dirac_weight, embed_i, embed_j, sk_graph
from .homs import (
    HomVerdict, NotPDominant, operator_order, orbit_p_dominant, standard_hom_nonzero,
    verma_hom_exists,
)
from .weights import (
    HalfInt, ParabolicContext, Root, Weight, delta, dominant_rep, grading_eval,
    is_p_dominant_integral_shifted, is_singular, pairing, parse_weight, reflect,
)
from .weyl import (
    WeylElem, apply, bruhat_leq, bruhat_leq_oracle, elem_taking, in_wp, length,
    min_coset_rep, parabolic_hasse,
)

__version__ = "0.1.0"
