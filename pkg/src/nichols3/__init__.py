"""Exact verification engine for rank-3 braided vector spaces.

Builds the ten catalogued R-matrix families as braidings, discovers the
relations of their Nichols algebras through quantum symmetrizers and skew
derivations, and checks the tabulated relation ideals, graded dimensions
and basis counts at finite degree, all in exact rational arithmetic.
"""

from .braiding import (Braiding, BraidingFileError, DualExchange,
                       check_braid_equation, check_qybe, dual_exchange,
                       format_braiding, inverse, lift, parse_braiding_text,
                       read_braiding, rigidity, write_braiding)
from .catalog import (BasisDescriptor, CatalogError, ConstraintError,
                      ExpectedOutcome, FAMILY_NAMES, TranscriptionError,
                      UnknownFamilyError, build, expected, family_parameters,
                      list_families, pbw_count, pbw_counts, rows_for,
                      sample_params)
from .ideals import (GeneratorSet, WordOrder, check_identity_mod_ideal,
                     colex_compare, ideal_contains, ideal_slice, max_term,
                     quotient_hilbert)
from .linalg import (Scalar, SparseMatrix, Subspace, contains,
                     det_fraction_free, kernel_basis, rank)
from .nichols import (DEFAULT_DEGREE_CAP, DegreeCapError, HilbertData,
                      RelationSet, derive_left, derive_left_shuffle,
                      derive_right, hilbert, is_relation,
                      kernel_via_derivations, quadratic_relations,
                      relations_at_degree)
from .operators import Operator
from .symmetrizer import (delta_left, delta_right, lift_word, reduced_word,
                          symmetrizer, symmetrizer_naive)
from .tensors import Tensor, format_element, parse_element
from . import r12

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
