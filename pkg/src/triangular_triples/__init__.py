"""D(m^2)-triples of triangular numbers: construction, closed forms, verification, search."""

from .bigmath import (
    SquareCertificate,
    isqrt,
    square_certificate,
    tri_index_of,
    tri_shift_identity,
    triangular,
)
from .construction import (
    ConstructionParams,
    ConstructionState,
    InvariantViolation,
    Provenance,
    TripleRecord,
    closed_form_N,
    closed_form_s,
    closed_form_t,
    family_triple,
    identity_check_s,
    identity_check_t,
    initial_extension,
    iter_triples,
    pair_root,
    step,
    triple_at,
)
from .quadring import InexactError, QuadElem
from .search import (
    SearchReport,
    classify,
    d_square_pairs,
    find_triples,
    second_element_remark_check,
)
from .verify import VerifyReport, extension_candidate, verify_raw_tuple, verify_tuple

__version__ = "0.1.0"
