"""Minimal polynomials of linearly recurrent sequences over exact fields."""

from .berlekamp import (
    EuclidState,
    bm_modified,
    bm_usual,
    euclid_init,
    euclid_run,
    euclid_step,
    reversed_series,
)
from .errors import (
    BadInitLength,
    BadInput,
    DegreeTooSmall,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    InsufficientTerms,
    NonInvertibleDenominator,
    NotLinearlyRecurrent,
    NotMonic,
    OracleExhausted,
    ParseError,
    SeqMinPolyError,
    ZeroDenominator,
)
from .field import GF, QQ, Field, PrimeField, RationalField, field_from_text
from .hankel import (
    DenseMatrix,
    first_failing_window,
    hankel,
    is_generating,
    matrix_rank,
    minpoly_hankel,
    solve,
)
from .lazy import (
    AnnihilationVerifier,
    GeneratingVerifier,
    LazyState,
    Verifier,
    default_verifier,
    lazy_advance,
    lazy_extend,
    lazy_init,
    lazy_minpoly,
    matrix_verifier,
)
from .polynomial import NEG_INF, Poly
from .sequences import (
    KrylovOracle,
    ListOracle,
    RecurrenceOracle,
    SequenceOracle,
    SparseMatrix,
    block_diagonal,
    companion,
    dot,
    format_vector,
    from_list,
    from_recurrence,
    krylov_oracle,
    parse_matrix,
    parse_vector,
    spmv,
)

__version__ = "0.1.0"
