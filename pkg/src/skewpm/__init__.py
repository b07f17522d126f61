"""Principal-minor equivalence of skew-symmetric matrices via HL-clan reversals."""

from .digraph_orient import (
    Orientation,
    apex_det_triple,
    converse,
    digraph_invert,
    from_skew,
    is_clan,
    to_skew,
    triple_class,
    triples_hemimorphic,
)
from .equivalence import (
    EquivVerdict,
    Status,
    bfs_reversal_equivalent,
    conjecture_scan,
    decide_equivalence,
    decide_equivalence_mn,
    in_class_mn,
    normalize_first_row,
    reversal_orbit,
    verify_certificate,
)
from .hlclan import (
    ReversalCertificate,
    enumerate_hl_clans,
    invert,
    invert_checked,
    is_hl_clan,
    remark1_pair,
)
from .matrix_core import (
    Matrix,
    SkewMatrix,
    determinant,
    new_skew,
    parse_matrix,
    pfaffian,
    rank,
    submatrix,
)
from .minor_engine import fingerprint, fingerprints_equal, minors_of_order, principal_minor
from .similarity import (
    find_diagonal_similarity,
    find_similarity_up_to_transpose,
    loewy_condition,
    similarity_to_reversal_sequence,
)
from .subsets import from_indices, to_indices

__version__ = "0.1.0"

__all__ = [
    "EquivVerdict",
    "Matrix",
    "Orientation",
    "ReversalCertificate",
    "SkewMatrix",
    "Status",
    "apex_det_triple",
    "bfs_reversal_equivalent",
    "conjecture_scan",
    "converse",
    "decide_equivalence",
    "decide_equivalence_mn",
    "determinant",
    "digraph_invert",
    "enumerate_hl_clans",
    "find_diagonal_similarity",
    "find_similarity_up_to_transpose",
    "fingerprint",
    "fingerprints_equal",
    "from_indices",
    "from_skew",
    "in_class_mn",
    "invert",
    "invert_checked",
    "is_clan",
    "is_hl_clan",
    "loewy_condition",
    "minors_of_order",
    "new_skew",
    "normalize_first_row",
    "parse_matrix",
    "pfaffian",
    "principal_minor",
    "rank",
    "remark1_pair",
    "reversal_orbit",
    "similarity_to_reversal_sequence",
    "submatrix",
    "to_indices",
    "to_skew",
    "triple_class",
    "triples_hemimorphic",
    "verify_certificate",
]
