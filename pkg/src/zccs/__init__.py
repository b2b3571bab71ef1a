"""Type-II Z-complementary code sets from Kronecker products of complete complementary codes."""

__version__ = "0.1.0"

from ._backend import NAME as BACKEND
from .analysis import (
    column_pmepr_report,
    length_coverage,
    out_of_zone_profile,
    pmepr_bound,
    pmepr_numeric,
    pmepr_report,
    set_size_bound_check,
    verify_zccs,
)
from .ccc import ccc_dft, ccc_table1, verify_ccc
from .construct import (
    ZccsBuildRecipe,
    barker_weight,
    build_zccs,
    build_zcp,
    build_zcs,
    expand_set,
)
from .errors import DimensionError, DocumentError, DomainError, PreconditionError, ZccsError
from .kernels import (
    BarkerSequence,
    GolayPair,
    OrthogonalFamily,
    barker,
    barker_transform,
    check_orthogonal_family,
    composite_barker,
    gcp,
    hadamard,
    is_barker,
    tail_conditions,
)
from .sequences import (
    CodeMatrix,
    CodeSet,
    CorrelationProfile,
    PhaseSequence,
    accs,
    code_accs,
    correlation_profile,
    fft_correlation_profile,
    kron,
    kron_correlation_profile,
    phase_rotate,
)
