"""Exact computations for the Howe duality between quantum gl(2) acting on tensor
products of Verma modules and quantum gl(n), and for the Lawrence-Krammer-Bigelow
representations that it produces."""

from .braid import BraidWord, Partition, colored_read, handlebody_colors, parse_word, rmatrix_step
from .errors import ConsistencyError, ModeError, ParseError, PurityError, SpecializationSingular
from .gtbasis import DetMonomial, GTPattern, casimir_check, gt_vector
from .lkb import commutant_dimension, lkb_basis, pure_generators, simplicity_report, word_matrix
from .qgroup import GlnGenerator, highest_weight_basis
from .scalar import (
    FieldElement,
    GeneratorSet,
    Specialization,
    SpecializedQuantum,
    SymbolicClassical,
    SymbolicQuantum,
    parse_scalar,
)
from .verma import Monomial, tensor_basis

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "Partition", "colored_read", "handlebody_colors", "parse_word", "rmatrix_step",
    "ConsistencyError", "ModeError", "ParseError", "PurityError", "SpecializationSingular",
    "DetMonomial", "GTPattern", "casimir_check", "gt_vector",
    "commutant_dimension", "lkb_basis", "pure_generators", "simplicity_report", "word_matrix",
    "GlnGenerator", "highest_weight_basis",
    "FieldElement", "GeneratorSet", "Specialization", "SpecializedQuantum", "SymbolicClassical",
    "SymbolicQuantum", "parse_scalar",
    "Monomial", "tensor_basis",
]
