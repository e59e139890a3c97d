"""Kostka numbers and Littlewood-Richardson coefficients in exact integer arithmetic."""

from .kostant import kostant_partition
from .lr_engine import (
    king_embedding,
    lr_coefficient,
    lr_matching,
    lr_signed_kostka,
    lr_steinberg,
    schur_product_expand,
)
from .partitions import (
    PartitionError,
    SizeError,
    distinct_rearrangements,
    enumerate_dominated,
    is_dominated,
    sort_with_sign,
    staircase,
)
from .symfunc import (
    SparsePolynomial,
    cauchy_truncated_check,
    complete_homogeneous,
    multiply,
    schur_decompose,
    schur_polynomial,
)
from .tableaux import Tableau, construct_ssyt, kostka_kostant, kostka_ssyt, lr_rule_count

__version__ = "0.1.0"
