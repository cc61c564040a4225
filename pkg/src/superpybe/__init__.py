"""Exact arithmetic for Poisson superalgebras, their representations, O-operators
and the Poisson Yang-Baxter equation."""

from .graded import (GradedSpace, GradingError, LinearMap, SpaceMismatch, TensorElement,
                     TripleTensor, Vector, dual_space, koszul_sign, parity_shift, twist)
from .operators import OOperator, is_o_operator, verify_o_operator
from .representation import (Representation, coregular_rep, dual_rep, parity_reversed_rep,
                             regular_rep, verify_representation)
from .superalgebra import (DefectReport, SuperAlgebra, Witness, family_1dim1, semidirect_product,
                           verify_associativity, verify_coherence, verify_leibniz, verify_lie)
from .yang_baxter import (build_solution, check_pybe, check_theorem_tr, map_to_tensor,
                          tensor_to_map)

__all__ = [
    "GradedSpace", "GradingError", "LinearMap", "SpaceMismatch", "TensorElement", "TripleTensor",
    "Vector", "dual_space", "koszul_sign", "parity_shift", "twist",
    "OOperator", "is_o_operator", "verify_o_operator",
    "Representation", "coregular_rep", "dual_rep", "parity_reversed_rep", "regular_rep",
    "verify_representation",
    "DefectReport", "SuperAlgebra", "Witness", "family_1dim1", "semidirect_product",
    "verify_associativity", "verify_coherence", "verify_leibniz", "verify_lie",
    "build_solution", "check_pybe", "check_theorem_tr", "map_to_tensor", "tensor_to_map",
]
