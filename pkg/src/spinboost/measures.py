"""Genuine-multipartite-entanglement witness and entanglement measures.

The witness targets GHZ-type entanglement of three qubits.  Writing
rho07 for the coherence <uuu|rho|ddd> and rho_jj for the sigma_z-basis
populations (index bits: up=0, down=1), biseparable states obey

    |rho07| <= sqrt(rho_11 rho_66) + sqrt(rho_22 rho_55)
               + sqrt(rho_44 rho_33)

so the reported value

    value = 2|rho07| - 2 sqrt(rho_11 rho_66) - 2 sqrt(rho_22 rho_55)
            - 2 sqrt(rho_44 rho_33)

is nonpositive on every biseparable state and reaches 1 on the GHZ
state.  Everything is measurable with nine local settings: the eight
X/Y Pauli strings below determine Re rho07 and Im rho07, one
computational-basis measurement determines the populations.

variant="as_printed" replaces the third pairing by sqrt(rho_44 rho_44)
= rho_44.  It is kept for comparison but is NOT sound as a witness: for
(sqrt(.9)|u> + sqrt(.1)|d>) (x) (|uu>+|dd>)/sqrt(2) it evaluates to
+0.2 on a manifestly biseparable state.  The default variant is the
symmetric pairing, and only that variant feeds the GME bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constants import (
    ATOL_PHYSICS,
    COMPOSITE_DIM,
    COMPOSITE_DIMS,
    PAULI_X,
    PAULI_Y,
    PROJ_DOWN,
    PROJ_UP,
    RADICAND_NOISE,
    SPIN_DIM,
    SPIN_DIMS,
)
from .errors import InputError, NumericError, ShapeError, ValidationError
from .linalg import is_density_matrix, kron
from .states import CompositeState, PartitionSpec

WITNESS_PATHS = ("matrix_elements", "pauli_settings")
WITNESS_VARIANTS = ("symmetric", "as_printed")

# The eight local measurement settings behind the coherence terms:
# 8 Re rho07 = <XXX> - <XYY> - <YXY> - <YYX> and
# 8 Im rho07 = <YYY> - <XXY> - <YXX> - <XYX>.
_RE_STRINGS = (
    (PAULI_X, PAULI_X, PAULI_X, +1.0),
    (PAULI_X, PAULI_Y, PAULI_Y, -1.0),
    (PAULI_Y, PAULI_X, PAULI_Y, -1.0),
    (PAULI_Y, PAULI_Y, PAULI_X, -1.0),
)
_IM_STRINGS = (
    (PAULI_Y, PAULI_Y, PAULI_Y, +1.0),
    (PAULI_X, PAULI_X, PAULI_Y, -1.0),
    (PAULI_Y, PAULI_X, PAULI_X, -1.0),
    (PAULI_X, PAULI_Y, PAULI_X, -1.0),
)
_RE_OPS = tuple((kron([a, b, c]), s) for a, b, c, s in _RE_STRINGS)
_IM_OPS = tuple((kron([a, b, c]), s) for a, b, c, s in _IM_STRINGS)

# Projector triples for the population pairs: (up,up,down)&(down,down,up),
# (up,down,up)&(down,up,down), (down,up,up)&(up,down,down).
_POP_PAIRS_OPS = tuple(
    (kron([pa, pb, pc]), kron([qa, qb, qc]))
    for (pa, pb, pc), (qa, qb, qc) in (
        ((PROJ_UP, PROJ_UP, PROJ_DOWN), (PROJ_DOWN, PROJ_DOWN, PROJ_UP)),
        ((PROJ_UP, PROJ_DOWN, PROJ_UP), (PROJ_DOWN, PROJ_UP, PROJ_DOWN)),
        ((PROJ_DOWN, PROJ_UP, PROJ_UP), (PROJ_UP, PROJ_DOWN, PROJ_DOWN)),
    )
)
# Population index pairs in the flat spin basis, same order as above.
_POP_PAIRS_IDX = ((1, 6), (2, 5), (4, 3))


@dataclass(frozen=True)
class WitnessReport:
    """Witness evaluation with its pieces: value = offdiag_term - sum of
    population_terms (each already carrying its factor of two)."""

    value: float
    offdiag_term: float
    population_terms: tuple[float, float, float]
    offdiag_real: float
    offdiag_imag: float
    path: str
    variant: str

    @property
    def detected(self) -> bool:
        """True when genuine multipartite entanglement is certified."""
        return self.value > 0.0


def _sqrt_pop_product(a: float, b: float) -> float:
    # populations may dip an epsilon below zero on valid densities
    return math.sqrt(max(a, 0.0) * max(b, 0.0))


def _expect(rho: np.ndarray, op: np.ndarray) -> float:
    return float(np.trace(rho @ op).real)


def ghz_witness(
    rho: np.ndarray,
    path: str = "matrix_elements",
    variant: str = "symmetric",
    validate: bool = True,
) -> WitnessReport:
    """Evaluate the GHZ-type witness on an 8x8 spin density matrix.

    path="matrix_elements" reads the coherence and populations straight
    from the matrix; path="pauli_settings" reconstructs them from the
    nine local measurement settings.  Both agree to 1e-10 on any valid
    density matrix.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (SPIN_DIM, SPIN_DIM):
        raise ShapeError(f"witness needs an 8x8 density matrix, got {rho.shape}")
    if path not in WITNESS_PATHS:
        raise InputError(f"unknown path {path!r}, expected one of {WITNESS_PATHS}")
    if variant not in WITNESS_VARIANTS:
        raise InputError(
            f"unknown variant {variant!r}, expected one of {WITNESS_VARIANTS}"
        )
    if validate:
        check = is_density_matrix(rho, ATOL_PHYSICS)
        if not check:
            raise ValidationError(f"not a density matrix: {check}")

    if path == "pauli_settings":
        re2 = 0.25 * sum(s * _expect(rho, op) for op, s in _RE_OPS)  # = 2 Re rho07
        im2 = 0.25 * sum(s * _expect(rho, op) for op, s in _IM_OPS)  # = 2 Im rho07
        pops = [
            (_expect(rho, p), _expect(rho, q)) for p, q in _POP_PAIRS_OPS
        ]
    else:
        re2 = 2.0 * float(rho[0, 7].real)
        im2 = 2.0 * float(rho[0, 7].imag)
        diag = rho.diagonal().real
        pops = [(float(diag[i]), float(diag[j])) for i, j in _POP_PAIRS_IDX]

    offdiag = math.hypot(re2, im2)  # = 2 |rho07|
    if variant == "as_printed":
        pops[2] = (pops[2][0], pops[2][0])
    terms = tuple(2.0 * _sqrt_pop_product(a, b) for a, b in pops)
    value = offdiag - sum(terms)
    return WitnessReport(
        value=value,
        offdiag_term=offdiag,
        population_terms=terms,
        offdiag_real=re2,
        offdiag_imag=im2,
        path=path,
        variant=variant,
    )


def gme_lower_bound(rho: np.ndarray, validate: bool = True) -> float:
    """max(0, witness value): a lower bound on genuine multipartite
    entanglement, tight (= 1) on the GHZ state.  Uses the sound symmetric
    variant only."""
    report = ghz_witness(rho, variant="symmetric", validate=validate)
    return max(0.0, report.value)


@dataclass(frozen=True)
class PartitionMeasure:
    """An m-concurrence value tagged with the partition it refers to."""

    partition: PartitionSpec
    value: float


def _subset_purity(tensor: np.ndarray, keep: tuple[int, ...]) -> float:
    # Purity of the reduction of a pure state onto `keep`: reshape the
    # amplitude tensor into (kept, rest) and take ||gram||_F^2 of the
    # smaller gram matrix.
    n = tensor.ndim
    rest = [i for i in range(n) if i not in keep]
    mat = tensor.transpose(list(keep) + rest)
    dk = int(np.prod(mat.shape[: len(keep)])) if keep else 1
    mat = mat.reshape(dk, -1)
    if mat.shape[0] <= mat.shape[1]:
        gram = mat @ mat.conj().T
    else:
        gram = mat.conj().T @ mat
    return float(np.vdot(gram, gram).real)


def _sqrt_radicand(x: float) -> float:
    if x < -RADICAND_NOISE:
        raise NumericError(f"negative radicand {x} beyond noise threshold")
    return math.sqrt(max(x, 0.0))


def m_concurrence_pure(
    state,
    partition: PartitionSpec,
    dims: Sequence[int] | None = None,
) -> float:
    """Generalized concurrence of a pure state across an m-part partition.

    C = 2^(1-m/2) sqrt((2^m - 2) - sum_g Tr rho_g^2), the sum running
    over the 2^m - 2 reductions onto proper nonempty unions of parts.
    Vanishes iff the state is a product across some split of the
    partition; invariant under per-factor unitaries.
    """
    if isinstance(state, CompositeState):
        vec = state.vector
        dims = COMPOSITE_DIMS
    else:
        vec = np.asarray(state, dtype=np.complex128).ravel()
        if dims is None:
            if vec.size == COMPOSITE_DIM:
                dims = COMPOSITE_DIMS
            elif vec.size == SPIN_DIM:
                dims = SPIN_DIMS
            else:
                raise ShapeError(
                    f"cannot infer factor dims for a state of size {vec.size}"
                )
    dims = tuple(int(d) for d in dims)
    if int(np.prod(dims)) != vec.size:
        raise ShapeError(f"state size {vec.size} does not match dims {dims}")
    if partition.num_factors != len(dims):
        raise ShapeError(
            f"partition covers {partition.num_factors} factors, state has {len(dims)}"
        )
    norm = np.linalg.norm(vec)
    if abs(norm - 1.0) > ATOL_PHYSICS:
        raise ValidationError(f"state is not normalized: |psi| = {norm}")
    tensor = vec.reshape(dims)
    m = partition.num_parts
    total = 2**m - 2
    acc = sum(_subset_purity(tensor, keep) for keep in partition.proper_subsets())
    return 2.0 ** (1.0 - m / 2.0) * _sqrt_radicand(total - acc)


def three_tangle(state) -> float:
    """Residual three-qubit tangle of a pure spin state (degree-4
    polynomial invariant); 1 on GHZ, 0 on W and on any product state,
    unchanged by local unitaries."""
    vec = np.asarray(
        state.vector if isinstance(state, CompositeState) else state,
        dtype=np.complex128,
    ).ravel()
    if vec.size != SPIN_DIM:
        raise ShapeError(f"three_tangle needs an 8-amplitude state, got {vec.size}")
    if abs(np.linalg.norm(vec) - 1.0) > ATOL_PHYSICS:
        raise ValidationError("state is not normalized")
    a = vec.reshape(2, 2, 2)
    d1 = (
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
        + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
        + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
    )
    d2 = (
        a[0, 0, 0] * a[1, 1, 1] * a[0, 1, 1] * a[1, 0, 0]
        + a[0, 0, 0] * a[1, 1, 1] * a[1, 0, 1] * a[0, 1, 0]
        + a[0, 0, 0] * a[1, 1, 1] * a[1, 1, 0] * a[0, 0, 1]
        + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
        + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
        + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1]
    )
    d3 = (
        a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1]
        + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0]
    )
    return float(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3))
