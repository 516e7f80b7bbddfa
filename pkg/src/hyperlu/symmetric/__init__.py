"""Permutation-invariant hypergraph states: Dicke/Majorana analysis and
discrete tensor-power symmetries."""

from .majorana import (DickeCoeffs, MajoranaConfig, MajoranaPolynomial, cross_ratio,
                       dicke_coeffs, is_hypergraph_dicke, is_permutation_invariant,
                       majorana_config, majorana_polynomial, polynomial_roots,
                       reciprocal_pairing, roots_to_bloch, symmetrized_state)
from .parity import (XSymmetry, binom_parity, pauli_family, sizes_from_pattern,
                     x_symmetry_class, y_symmetric)
from .rotations import Rotation, find_point_symmetries, tensor_symmetry_phase, verify_tensor_symmetry

__all__ = [
    "DickeCoeffs", "MajoranaConfig", "MajoranaPolynomial", "Rotation", "XSymmetry",
    "binom_parity", "cross_ratio", "dicke_coeffs", "pauli_family", "find_point_symmetries",
    "is_hypergraph_dicke", "is_permutation_invariant", "majorana_config",
    "majorana_polynomial", "polynomial_roots", "reciprocal_pairing", "roots_to_bloch",
    "sizes_from_pattern", "symmetrized_state", "tensor_symmetry_phase",
    "verify_tensor_symmetry", "x_symmetry_class", "y_symmetric",
]
