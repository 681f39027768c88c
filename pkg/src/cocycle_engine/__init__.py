"""Exact rational Chevalley-Eilenberg cohomology of the Witt and
Virasoro algebras: windowed dimension scans, the algebraic
Godbillon-Vey cocycle with verifiers, and the constructive
decomposition of degree-zero 3-cocycles."""

from .algebra import (
    CENTRAL,
    GeneratorId,
    InvalidGenerator,
    LieAlgebraSpec,
    ModuleTag,
    bracket,
    check_jacobi,
    e,
    module_action,
    virasoro,
    virasoro_alpha,
    witt,
    witt_gen,
)
from .cochains import (
    CochainKey,
    CochainShapeError,
    CoeffId,
    HomogeneousCochain,
    LazyCochain,
    coboundary,
    coboundary_view,
    cocycle_residuals,
    coefficient_coords,
    delta_value,
    zero_cochain,
)
from .cohomology import (
    CohomologyReport,
    CohomologySetup,
    InclusionViolation,
    ReportRow,
    WindowConfig,
    coboundary_generators,
    cohomology_dim,
    condition_matrix,
    crosscheck_sequences,
    default_ladder,
    default_source_window,
    stabilization_scan,
    window,
)
from .knowncocycles import (
    GODBILLON_VEY,
    GODBILLON_VEY_HAT,
    VIRASORO_ALPHA,
    NamedCocycle,
    godbillon_vey,
    gv_cochain,
    verify_cocycle,
    verify_nontrivial,
)
from .linsolve import (
    RationalSparseMatrix,
    kernel_basis,
    rank,
    read_matrix_market,
    solve_or_none,
    write_matrix_market,
)
from .normalizer import (
    CoefficientTable,
    DecompositionResult,
    FinalRelations,
    NotACocycle,
    ProfileViolation,
    RecursionGap,
    ResidualNonZero,
    SeedForm,
    build_normalizing_cochain,
    central_profile_check,
    decompose,
    gv_coefficient,
    propagate_recursions,
    subtract_gv,
    symbolic_table,
    verify_final_relations,
)

__version__ = "0.1.0"
