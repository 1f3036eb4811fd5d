"""Edge ideals of graphs: Betti tables through Hochster's formula,
independence polynomials, a-invariants, suspensions and discrete Morse
matchings, all in exact integer arithmetic."""

from .betti import BettiTable, full_suspension_betti_predict, hochster_betti_table, homological_invariants
from .complexes import HomologyProfile, SimplicialComplex, independence_complex, reduced_homology
from .graph import Graph, build_graph, family, full_suspension, suspend
from .indpoly import IntPolynomial, a_invariant, h_polynomial, independence_polynomial
from .morse import MorseMatching, greedy_acyclic_matching, verify_acyclic_matching
from .suspension import MonomialIdeal, cover_profile, edge_ideal
from .theorems import THEOREM_IDS, VerificationReport, VerifyParams, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "Graph", "HomologyProfile", "IntPolynomial", "MonomialIdeal", "MorseMatching",
    "SimplicialComplex", "THEOREM_IDS", "VerificationReport", "VerifyParams",
    "a_invariant", "build_graph", "cover_profile", "edge_ideal", "family", "full_suspension",
    "full_suspension_betti_predict", "greedy_acyclic_matching", "h_polynomial",
    "hochster_betti_table", "homological_invariants", "independence_complex",
    "independence_polynomial", "reduced_homology", "suspend", "verify_acyclic_matching",
    "verify_theorem",
]
