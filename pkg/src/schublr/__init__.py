"""Exact Schubert calculus: Pieri chains, two-row structure constants, scans."""

from .errors import SchublrError
from .perms import (
    Partition,
    Permutation,
    apply_transposition,
    code_to_permutation,
    grassmannian_to_partition,
    is_grassmannian,
    lehmer_code,
    length,
    parse_partition,
    parse_permutation,
    partition_to_grassmannian,
    symmetric_group,
)
from .poly import SparsePolynomial
from .schubert import (
    complete_homogeneous,
    elementary,
    expand_in_schubert_basis,
    schubert,
    schur_jacobi_trudi_two_row,
    schur_ssyt,
)
from .pieri import (
    CaseSignature,
    PieriChain,
    chains_equivalent,
    classify_chain,
    enumerate_case_signatures,
    enumerate_chains,
    is_pieri_step,
    less_minimal_partition,
    pieri_expand,
)
from .lr import (
    ScanReport,
    case_census,
    lr_two_row,
    product_h_h,
    scan_cell,
    scan_conjecture,
    verify_theorem_1,
    verify_theorem_2,
)

__version__ = "0.1.0"
