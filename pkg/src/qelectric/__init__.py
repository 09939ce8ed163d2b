"""Exact computations for q-electric algebras and their categorification.

Scalars live in Q(q) and are represented exactly; residues may be symbolic
(``delta_k + n``) so that generic charge vectors need no numeric choice.
"""

from .charges import ChargeVector, GenericityError, Residue, parse_charges, parse_residue
from .fock import (
    FockVector,
    MultiFockVector,
    act_generator,
    act_word,
    bar_fock,
    bar_vector,
    multi_act,
    pairing,
    sigma_word,
    tau_fock,
)
from .klr import PsiElement, degree_half, degree_psi, eklr_act, graded_hom_dim, projective_in_standards
from .partitions import Box, Step, content, dual_residue, residue
from .scalars import ONE, ZERO, LaurentPoly, Scalar, q_pow, qint
from .tableaux import UpDownTableau, count, enumerate_tableaux, sum_of_squares
from .tensor_ops import F, E, K, apply_H, apply_Hstar, coideal_element, verify_suite

__version__ = "0.1.0"

__all__ = [
    "Box", "ChargeVector", "E", "F", "FockVector", "GenericityError", "K", "LaurentPoly", "MultiFockVector",
    "ONE", "PsiElement", "Residue", "Scalar", "Step", "UpDownTableau", "ZERO", "act_generator", "act_word",
    "apply_H", "apply_Hstar", "bar_fock", "bar_vector", "coideal_element", "content", "count", "degree_half",
    "degree_psi", "dual_residue", "eklr_act", "enumerate_tableaux", "graded_hom_dim", "multi_act", "pairing",
    "parse_charges", "parse_residue", "projective_in_standards", "q_pow", "qint", "residue", "sigma_word",
    "sum_of_squares", "tau_fock", "verify_suite",
]
