"""Certified completion of unimodular rows and projective-module elements.

Exact arithmetic over small commutative ring constructions, elementary-matrix
words with ideal-relative membership classes, fiber-product patching of
congruent rows, and an end-to-end pipeline carrying unimodular elements of
A + P to (1, 0) -- every certificate re-verified by evaluation.
"""

from .rings import (
    CongruenceError,
    Elem,
    FiberProductRing,
    Fp,
    Ideal,
    IntegerRing,
    ModularRing,
    NonMemberError,
    NonUnitError,
    PolynomialQuotientRing,
    PolynomialRing,
    PrimeField,
    QuotientRing,
    RingMismatchError,
    SizeGuardError,
    UndecidableError,
    Zmod,
    Zring,
    fiber,
    fiber_lift,
    payload_key,
    elem_from_json,
    elem_to_json,
    poly_quot,
    poly_ring,
    polynomial_presentation_check,
    quotient,
    ring_from_json,
    ring_to_json,
    xgcd,
)
from .linalg import (
    Matrix,
    RowVector,
    ShapeError,
    det,
    elementary,
    identity,
    mat_mul,
    mat_vec,
    matrix_from_json,
    matrix_to_json,
    row_act,
    row_from_json,
    row_to_json,
    unit_row,
)
from .elemgroup import (
    FirstColRow,
    FirstRowCol,
    Full,
    Letter,
    Level,
    Relative,
    RelativeWord,
    Word,
    classify,
    commutator_split,
    conjugate_into_level,
    discrepancy_telescope,
    gen,
    letter_from_json,
    letter_to_json,
    level_to_firstcolrow,
    level_to_firstrowcol,
    relative_to_level,
    relative_word_from_json,
    relative_word_to_json,
    whitehead,
    word_from_json,
    word_to_json,
)
from .unimodular import (
    EuclideanGcd,
    FiniteBFS,
    Inconclusive,
    NilpotencyError,
    NoCompletionError,
    NonUnimodular,
    OrbitReport,
    UmVector,
    VerificationError,
    apply_word_to_um,
    complete,
    iter_completions,
    nil_lift_row,
    orbit,
    verify_um,
)
from .fiberpatch import (
    PatchedRow,
    RelativeCompletion,
    StageRecord,
    complete_relative_row,
    patch_rows,
    split_word,
)
from .projmod import (
    Delta,
    DivisibilityError,
    Gamma,
    LetterClassError,
    LindelData,
    LindelReport,
    ModuleCompletion,
    ModuleWord,
    ProjPresentation,
    apply_module_word,
    complete_module_element,
    row_word_to_module_word,
    transvection_form,
    verify_lindel,
)
from .transcript import Stage, Transcript, canonical_dumps, sha256_digest

__version__ = "0.1.0"
