"""ybekit: braid and Temperley-Lieb representations, Yang-Baxter R-matrix
families, the factorized three-body scattering matrix in tensor and
fusion-space forms, and l1-norm / entropy landscapes with their GHZ and W
critical points."""

__version__ = "0.1.0"

from .braiding import (
    BraidRep,
    TLRep,
    bell_braid,
    braid_from_tl,
    check_braid_relations,
    check_tl_relations,
    permutation_matrix,
    quantum_dimension,
    tl_type1_local,
    tl_type2_local,
)
from .entanglement import (
    binary_entropy,
    classify_slocc,
    entanglement_report,
    fusion_entropy,
    fusion_l1,
    l1_norm,
    three_body_l1,
    three_tangle,
    von_neumann_entropy,
    wigner_l1,
)
from .fusionbasis import (
    FusionBasis,
    fusion_basis_type1,
    fusion_basis_type2,
    reduce_operator,
    verify_basis_reduction,
)
from .landscape import (
    AxisSpec,
    CriticalPoint,
    LandscapeGrid,
    find_critical_points_1d,
    find_critical_points_2d,
    sample_curve,
    sample_surface,
    section,
)
from .rmatrix import (
    RMatrixFamily,
    bundled_families,
    check_ybe,
    conjugate_by_v,
    phi_from_theta,
    phi_from_three_thetas,
    type1_r_4x4,
    type2_r_4x4,
    wigner_d_half,
)
from .tensor import (
    expm_involutive,
    expm_series,
    is_unitary,
    ket,
    kron,
    kron_all,
    max_diff_up_to_phase,
    partial_trace,
)
from .threebody import (
    AngleTriple,
    BETA_STAR,
    ConstraintViolation,
    ScatterParams,
    angles_to_params,
    closed_form,
    constrained_triple,
    fusion_form,
    product_form,
    random_constrained_triple,
    state_from_params,
)
