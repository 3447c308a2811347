"""
condensation-kit: condensación de Chio y teorema matriz-árbol en aritmética exacta.

Determinantes exactos sobre Z, Z/m y Z[x1_1, ...], la condensación pivotal
de Chio y sus generalizaciones a mapas n-potentes, y el conteo y la
enumeración de arborescencias de digrafos ponderados.
"""
from .config import settings
from .ring import ZZ, IntegerRing, ModularRing, Ring, RingValue, ring_from_spec
from .polynomial import PolynomialRing
from .matrix import Matrix, Permutation, chio_condense, chio_det, det, leibniz_det
from .funcmap import EndoMap, RootedTree, enumerate_n_potent, is_n_potent, map_to_tree, tree_to_map
from .identities import verify_chio, verify_chio_gen, verify_supergen
from .arborescence import WeightedDigraph, build_laplacian, count_arborescences, enumerate_arborescences, verify_matrix_tree
from .verification_service import VerificationService
from .fuzz_service import FuzzService
from .models import (
    CondensationReport,
    VerificationSummary,
    FuzzCaseResult,
    FuzzSummary,
    Command,
)

__version__ = "1.0.0"
__all__ = [
    "settings",
    "ZZ",
    "IntegerRing",
    "ModularRing",
    "PolynomialRing",
    "Ring",
    "RingValue",
    "ring_from_spec",
    "Matrix",
    "Permutation",
    "chio_condense",
    "chio_det",
    "det",
    "leibniz_det",
    "EndoMap",
    "RootedTree",
    "enumerate_n_potent",
    "is_n_potent",
    "map_to_tree",
    "tree_to_map",
    "verify_chio",
    "verify_chio_gen",
    "verify_supergen",
    "WeightedDigraph",
    "build_laplacian",
    "count_arborescences",
    "enumerate_arborescences",
    "verify_matrix_tree",
    "VerificationService",
    "FuzzService",
    "CondensationReport",
    "VerificationSummary",
    "FuzzCaseResult",
    "FuzzSummary",
    "Command",
]
