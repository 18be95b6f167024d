"""Diophantine tuples with a shift k: exact verification, Pell-equation
reductions, extension search, and modular non-extendability certificates."""

from .arith import is_perfect_square, isqrt, legendre, mod_pow
from .extension import (
    ExtensionCandidate,
    ModularCertificate,
    SearchReport,
    brute_force_search,
    find_certificate,
    pell_extension_search,
    search_and_certify,
    verify_certificate,
)
from .pell import (
    CFExpansion,
    PellClass,
    PellProblem,
    PellSolution,
    fundamental_solution,
    solve_general,
    sqrt_cf,
    unit_sequence,
)
from .tuples import (
    ConditionWitness,
    DiophTuple,
    PairCheck,
    PairReduction,
    VerificationReport,
    is_regular,
    mod4_quadruple_obstruction,
    reduce_pair,
    residue_obstruction,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "CFExpansion",
    "ConditionWitness",
    "DiophTuple",
    "ExtensionCandidate",
    "ModularCertificate",
    "PairCheck",
    "PairReduction",
    "PellClass",
    "PellProblem",
    "PellSolution",
    "SearchReport",
    "VerificationReport",
    "brute_force_search",
    "find_certificate",
    "fundamental_solution",
    "is_perfect_square",
    "is_regular",
    "isqrt",
    "legendre",
    "mod4_quadruple_obstruction",
    "mod_pow",
    "pell_extension_search",
    "reduce_pair",
    "residue_obstruction",
    "search_and_certify",
    "solve_general",
    "sqrt_cf",
    "unit_sequence",
    "verify",
    "verify_certificate",
]
