"""Exact twisted Reidemeister torsion of links in S^3 from diagram data.

The package computes Wada's invariant of a link from a Wirtinger
presentation by Fox calculus, over exact coefficient rings (integers,
rationals, prime fields), and mechanically verifies the Torres condition
relating the torsion of a link to the torsion of the sublink obtained by
deleting one component.
"""

__version__ = "0.1.0"

from .algebra import (
    LaurentPoly, Monomial, PolyMatrix, RationalFunction, Ring,
    eq_up_to_units, parse_poly, render_poly, unit_normalize)
from .diagram import (
    DeletionResult, LinkDiagram, PDCode, WirtingerPresentation, braid_to_pd,
    delete_component, linking_number, longitude_word, monomial_T,
    orient_and_sign, parse_pd, wirtinger)
from .foxcalc import (
    AlexanderMatrix, TensorEvaluator, alexander_matrix, fox_derivative,
    fox_identity_defect)
from .reps import (
    InducedPair, Representation, induce, load_rep, longitude_image,
    rep_from_json, rep_to_json, ring_from_name, ring_name, save_rep,
    search_reps, trivial_rep, validate)
from .torsion import (
    DegenerateError, TorresReport, TorsionValue, corollary_check,
    report_to_json, rhs_factor, specialize_last, torres_check, wada)

__all__ = [
    "AlexanderMatrix", "DegenerateError", "DeletionResult", "InducedPair",
    "LaurentPoly", "LinkDiagram", "Monomial", "PDCode", "PolyMatrix",
    "RationalFunction", "Representation", "Ring", "TensorEvaluator",
    "TorresReport", "TorsionValue", "WirtingerPresentation",
    "alexander_matrix", "braid_to_pd", "corollary_check", "delete_component",
    "eq_up_to_units", "fox_derivative", "fox_identity_defect", "induce",
    "linking_number", "load_rep", "longitude_image", "longitude_word",
    "monomial_T", "orient_and_sign", "parse_pd", "parse_poly",
    "rep_from_json", "rep_to_json", "report_to_json", "render_poly",
    "rhs_factor", "ring_from_name", "ring_name", "save_rep", "search_reps",
    "specialize_last", "torres_check", "trivial_rep", "unit_normalize",
    "validate", "wada", "wirtinger",
]
