"""Lorentz boosts of three-particle spin-momentum states and the
entanglement structure they preserve: Wigner rotations, boosted reduced
spin states with ensemble certificates, a GHZ-type witness, and
partition entanglement measures."""

from .boost import (
    BoostUnitary,
    SpinEnsemble,
    boost_mixed,
    boost_pure,
    boosted_spin_density_fast,
    build_boost_unitary,
    composite_spin_ensemble,
    permutation_spin_ensemble,
)
from .classcheck import (
    CertificateReport,
    ClassCertificate,
    InvarianceReport,
    LocalUnitarySample,
    check_condition1,
    haar_state,
    random_local_unitary,
    sample_biseparable,
    verify_certificate,
)
from .constants import COMPOSITE_DIMS, SPIN_DIMS
from .errors import (
    InputError,
    NumericError,
    ShapeError,
    SpinboostError,
    StateFileError,
    ValidationError,
)
from .kinematics import (
    BoostScenario,
    MomentumGeometry,
    default_geometry,
    local_unitary,
    rapidity,
    rotation_axis,
    spin_rotation,
    wigner_angle,
)
from .linalg import (
    DensityCheck,
    hermitian_eigen,
    is_density_matrix,
    kron,
    partial_trace,
    purity,
)
from .measures import (
    PartitionMeasure,
    WitnessReport,
    ghz_witness,
    gme_lower_bound,
    m_concurrence_pure,
    three_tangle,
)
from .states import (
    CompositeState,
    MixedState,
    PartitionSpec,
    antisymmetric_coeffs,
    antisymmetric_momentum,
    basis_momentum,
    bipartition,
    compose,
    ghz_alpha,
    ghz_state,
    particle_partition,
    permutation_momentum,
    read_state,
    singletons_partition,
    spins_vs_momenta_partition,
    w_state,
    write_state,
)

__version__ = "0.1.0"

__all__ = [
    "BoostScenario",
    "BoostUnitary",
    "CertificateReport",
    "ClassCertificate",
    "CompositeState",
    "COMPOSITE_DIMS",
    "DensityCheck",
    "InputError",
    "InvarianceReport",
    "LocalUnitarySample",
    "MixedState",
    "MomentumGeometry",
    "NumericError",
    "PartitionMeasure",
    "PartitionSpec",
    "ShapeError",
    "SpinboostError",
    "SpinEnsemble",
    "StateFileError",
    "ValidationError",
    "WitnessReport",
    "antisymmetric_coeffs",
    "antisymmetric_momentum",
    "basis_momentum",
    "bipartition",
    "boost_mixed",
    "boost_pure",
    "boosted_spin_density_fast",
    "build_boost_unitary",
    "check_condition1",
    "compose",
    "composite_spin_ensemble",
    "default_geometry",
    "ghz_alpha",
    "ghz_state",
    "ghz_witness",
    "gme_lower_bound",
    "haar_state",
    "hermitian_eigen",
    "is_density_matrix",
    "kron",
    "local_unitary",
    "m_concurrence_pure",
    "partial_trace",
    "particle_partition",
    "permutation_momentum",
    "permutation_spin_ensemble",
    "purity",
    "random_local_unitary",
    "rapidity",
    "read_state",
    "rotation_axis",
    "sample_biseparable",
    "singletons_partition",
    "spin_rotation",
    "spins_vs_momenta_partition",
    "three_tangle",
    "verify_certificate",
    "w_state",
    "wigner_angle",
    "write_state",
    "SPIN_DIMS",
]
