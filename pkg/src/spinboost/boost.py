"""Applying momentum-controlled Wigner rotations to three-particle states.

The boost acts on each particle as sum_p |p><p| (x) U(p, delta): the
momentum label is kept (the observer relabels all momenta coherently,
so amplitudes ride along with their labels) while the spin is rotated
about that label's axis.  Three equivalent routes are provided:

* build_boost_unitary / boost_pure — the full 216x216 unitary, used as
  the brute-force reference;
* permutation_spin_ensemble — the six-term mixture the reduced spin
  state collapses to when the momentum part lives on the six
  label-assignment kets and the spin factorizes;
* composite_spin_ensemble / boost_mixed — the general route, expanding
  any state over the 27 momentum basis kets.

Every route also yields a SpinEnsemble: the explicit list of
(weight, local rotation, base projector) terms whose mixture is the
reduced spin state.  Because each term applies a *local* unitary to a
pure spin state, the ensemble certifies that boosting cannot move a
state between local-unitary entanglement classes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import (
    ATOL_PHYSICS,
    COMPOSITE_DIM,
    MOMENTUM_DIM,
    PERMUTATIONS,
    SPIN_DIM,
)
from .errors import ShapeError, ValidationError
from .kinematics import BoostScenario, local_unitary
from .linalg import kron, projector
from .states import CompositeState, MixedState, _as_state_vector

_NEGLIGIBLE_WEIGHT = 1e-30


@dataclass(frozen=True)
class BoostUnitary:
    """The full boost operator on the 216-dim composite space."""

    matrix: np.ndarray
    scenario: BoostScenario

    def __call__(self, state: CompositeState) -> CompositeState:
        return CompositeState(self.matrix @ state.vector)


@dataclass(frozen=True)
class SpinEnsemble:
    """Mixture certificate for a reduced spin state.

    Term k contributes weights[k] * U_k |phi_k><phi_k| U_k^H where U_k =
    unitaries[k] is a product of three single-qubit rotations and
    bases[k] = |phi_k><phi_k| (base_vectors holds the phi_k).
    """

    weights: np.ndarray
    unitaries: np.ndarray
    bases: np.ndarray
    base_vectors: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).ravel()
        u = np.asarray(self.unitaries, dtype=np.complex128)
        b = np.asarray(self.bases, dtype=np.complex128)
        vecs = np.asarray(self.base_vectors, dtype=np.complex128)
        k = w.size
        if u.shape != (k, SPIN_DIM, SPIN_DIM) or b.shape != (k, SPIN_DIM, SPIN_DIM):
            raise ShapeError("ensemble arrays have inconsistent shapes")
        if vecs.shape != (k, SPIN_DIM):
            raise ShapeError("base_vectors shape inconsistent with weights")
        if k == 0:
            raise ShapeError("empty ensemble")
        if np.any(w <= 0.0):
            raise ValidationError("ensemble weights must be positive")
        if abs(w.sum() - 1.0) > ATOL_PHYSICS:
            raise ValidationError(f"ensemble weights sum to {w.sum()}, not 1")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "unitaries", u)
        object.__setattr__(self, "bases", b)
        object.__setattr__(self, "base_vectors", vecs)

    def __len__(self) -> int:
        return int(self.weights.size)

    def mix(self) -> np.ndarray:
        """The 8x8 density matrix sum_k w_k U_k sigma_k U_k^H."""
        out = np.zeros((SPIN_DIM, SPIN_DIM), dtype=np.complex128)
        for w, u, b in zip(self.weights, self.unitaries, self.bases):
            out += w * (u @ b @ u.conj().T)
        return out


def build_boost_unitary(scenario: BoostScenario) -> BoostUnitary:
    """Assemble the 216x216 boost: per particle, a block-diagonal 6x6
    momentum-controlled spin rotation, tensored over the three particles."""
    block = np.zeros((6, 6), dtype=np.complex128)
    for p in range(3):
        block[2 * p : 2 * p + 2, 2 * p : 2 * p + 2] = scenario.rotation(p)
    return BoostUnitary(matrix=kron([block, block, block]), scenario=scenario)


def boost_pure(state: CompositeState, scenario: BoostScenario) -> CompositeState:
    """Brute-force route: apply the full boost unitary to a pure state."""
    if not isinstance(state, CompositeState):
        state = CompositeState(np.asarray(state))
    return build_boost_unitary(scenario)(state)


def permutation_spin_ensemble(
    coeffs, spin, scenario: BoostScenario
) -> SpinEnsemble:
    """Fast route for momenta on the six label-assignment kets.

    For sum_i c_i |Pi_i(A,B,C)> (x) |phi>, tracing the boosted state over
    momentum gives sum_i |c_i|^2 U_i |phi><phi| U_i^H with U_i the product
    of the three rotations the i-th assignment dictates.
    """
    c = np.asarray(coeffs, dtype=np.complex128).ravel()
    if c.size != 6:
        raise ShapeError(f"expected 6 permutation coefficients, got {c.size}")
    if abs(np.linalg.norm(c) - 1.0) > ATOL_PHYSICS:
        raise ValidationError("permutation coefficients are not normalized")
    phi = _as_state_vector(spin, SPIN_DIM, "spin state")
    base = projector(phi)
    weights, unitaries = [], []
    for ci, perm in zip(c, PERMUTATIONS):
        w = float(abs(ci) ** 2)
        if w <= _NEGLIGIBLE_WEIGHT:
            continue
        weights.append(w)
        unitaries.append(local_unitary(perm, scenario))
    k = len(weights)
    return SpinEnsemble(
        weights=np.array(weights),
        unitaries=np.array(unitaries),
        bases=np.broadcast_to(base, (k, SPIN_DIM, SPIN_DIM)).copy(),
        base_vectors=np.broadcast_to(phi, (k, SPIN_DIM)).copy(),
    )


def boosted_spin_density_fast(coeffs, spin, scenario: BoostScenario) -> np.ndarray:
    """Reduced 8x8 spin density after the boost, via the six-term mixture."""
    return permutation_spin_ensemble(coeffs, spin, scenario).mix()


def _momentum_basis_labels(k: int) -> tuple[int, int, int]:
    return (k // 9, (k // 3) % 3, k % 3)


def composite_spin_ensemble(
    state: CompositeState, scenario: BoostScenario
) -> SpinEnsemble:
    """General route: expand a pure composite state over the 27 momentum
    basis kets.  Each ket |m1 m2 m3> with amplitude weight a_k^2 carries
    its own spin component phi_k and local rotation U(m1) (x) U(m2) (x)
    U(m3); the reduced boosted spin state is the resulting mixture."""
    if not isinstance(state, CompositeState):
        state = CompositeState(np.asarray(state))
    m = state.momentum_spin_matrix()  # (27, 8), rows are momentum kets
    weights, unitaries, bases, vecs = [], [], [], []
    for k in range(MOMENTUM_DIM):
        w = float(np.vdot(m[k], m[k]).real)
        if w <= _NEGLIGIBLE_WEIGHT:
            continue
        phi = m[k] / np.sqrt(w)
        weights.append(w)
        unitaries.append(local_unitary(_momentum_basis_labels(k), scenario))
        bases.append(projector(phi))
        vecs.append(phi)
    return SpinEnsemble(
        weights=np.array(weights),
        unitaries=np.array(unitaries),
        bases=np.array(bases),
        base_vectors=np.array(vecs),
    )


def boost_mixed(
    mixed: MixedState, scenario: BoostScenario
) -> tuple[MixedState, np.ndarray, SpinEnsemble]:
    """Boost a mixture member by member.

    Returns the boosted mixture, its reduced 8x8 spin density, and the
    combined SpinEnsemble certificate whose terms carry weights
    q_i * |a_k^i|^2 over members i and momentum kets k.
    """
    if isinstance(mixed, CompositeState):
        mixed = MixedState(np.array([1.0]), (mixed,))
    unit = build_boost_unitary(scenario)
    boosted_states = tuple(unit(st) for st in mixed.states)
    weights, unitaries, bases, vecs = [], [], [], []
    for q, st in zip(mixed.weights, mixed.states):
        member = composite_spin_ensemble(st, scenario)
        weights.extend(q * member.weights)
        unitaries.extend(member.unitaries)
        bases.extend(member.bases)
        vecs.extend(member.base_vectors)
    cert = SpinEnsemble(
        weights=np.array(weights),
        unitaries=np.array(unitaries),
        bases=np.array(bases),
        base_vectors=np.array(vecs),
    )
    boosted = MixedState(mixed.weights, boosted_states)
    return boosted, cert.mix(), cert
