"""Entanglement quantifiers: GHZ witness, m-concurrence, three-tangle."""

import math

import numpy as np
import pytest

from spinboost import (
    CompositeState,
    InputError,
    PartitionSpec,
    ShapeError,
    ValidationError,
    antisymmetric_momentum,
    bipartition,
    compose,
    ghz_alpha,
    ghz_state,
    ghz_witness,
    gme_lower_bound,
    m_concurrence_pure,
    singletons_partition,
    three_tangle,
    w_state,
)
from spinboost.classcheck import haar_state, random_local_unitary
from spinboost.linalg import projector
from spinboost.measures import _sqrt_radicand
from spinboost.errors import NumericError

SQRT_3_2 = math.sqrt(1.5)  # singletons m-concurrence of the GHZ state
SQRT_4_3 = math.sqrt(4.0 / 3.0)  # ... of the W state


def random_density(dim, rng, rank=None):
    rank = rank or dim
    a = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def one_vs_pair_product(a, b, c_amps):
    """(a|0> + b|1>) on qubit 1 times a two-qubit state on qubits 2,3."""
    one = np.array([a, b], dtype=np.complex128)
    pair = np.asarray(c_amps, dtype=np.complex128)
    vec = np.kron(one, pair)
    return vec / np.linalg.norm(vec)


def test_witness_ghz_is_one():
    rho = projector(ghz_state())
    for path in ("matrix_elements", "pauli_settings"):
        for variant in ("symmetric", "as_printed"):
            rep = ghz_witness(rho, path=path, variant=variant)
            assert abs(rep.value - 1.0) < 1e-12
            assert rep.detected
    assert abs(gme_lower_bound(rho) - 1.0) < 1e-12


def test_witness_w_state_is_zero():
    rep = ghz_witness(projector(w_state()))
    assert abs(rep.value) < 1e-14
    assert not rep.detected
    assert gme_lower_bound(projector(w_state())) == 0.0


def test_witness_alpha_family_sine_law():
    for alpha in np.linspace(0.0, math.pi, 31):
        rho = projector(ghz_alpha(alpha))
        rep = ghz_witness(rho)
        assert abs(rep.value - abs(math.sin(2 * alpha))) < 1e-12


def test_witness_report_terms():
    rho = projector(ghz_state())
    rep = ghz_witness(rho)
    assert abs(rep.offdiag_term - 1.0) < 1e-14  # 2 |rho_07| = 1
    assert np.allclose(rep.population_terms, 0.0, atol=1e-14)
    assert rep.path == "matrix_elements"
    assert rep.variant == "symmetric"


def test_witness_paths_agree_on_random_densities():
    rng = np.random.default_rng(10)
    worst = 0.0
    for _ in range(50):
        rho = random_density(8, rng, rank=int(rng.integers(1, 9)))
        for variant in ("symmetric", "as_printed"):
            a = ghz_witness(rho, path="matrix_elements", variant=variant).value
            b = ghz_witness(rho, path="pauli_settings", variant=variant).value
            worst = max(worst, abs(a - b))
    assert worst < 1e-12


def test_witness_complex_coherence_uses_modulus():
    # rotate the GHZ coherence into the imaginary plane; the witness must
    # not change
    phase = np.exp(0.37j)
    vec = ghz_state().astype(complex)
    vec[7] *= phase
    rep = ghz_witness(projector(vec))
    assert abs(rep.value - 1.0) < 1e-12
    assert abs(rep.offdiag_imag) > 0.1  # genuinely complex now


def test_witness_symmetric_sound_where_as_printed_is_not():
    # one-vs-rest product with strongly asymmetric single-flip populations:
    # the symmetric pairing sqrt(rho44 rho33) cancels the coherence exactly,
    # the as-printed pairing sqrt(rho44 rho44) undercounts and goes positive
    a, b = math.sqrt(0.9), math.sqrt(0.1)
    pair = np.array([math.sqrt(0.1), 0.0, 0.0, math.sqrt(0.9)])
    vec = one_vs_pair_product(a, b, pair)
    rho = projector(vec)
    sym = ghz_witness(rho, variant="symmetric").value
    printed = ghz_witness(rho, variant="as_printed").value
    assert sym <= 1e-12
    assert printed > 0.1


def test_witness_validation():
    with pytest.raises(ShapeError):
        ghz_witness(np.eye(4))
    with pytest.raises(ValidationError):
        ghz_witness(np.eye(8))  # trace 8
    ghz_witness(np.eye(8), validate=False)  # skips the density check
    with pytest.raises(InputError):
        ghz_witness(np.eye(8) / 8.0, path="nope")
    with pytest.raises(InputError):
        ghz_witness(np.eye(8) / 8.0, variant="nope")


def test_gme_lower_bound_clamps_at_zero():
    rng = np.random.default_rng(11)
    rho = random_density(8, rng)  # generic mixed state, witness < 0
    val = ghz_witness(rho).value
    bound = gme_lower_bound(rho)
    assert bound == max(0.0, val)


def test_m_concurrence_frozen_three_qubit_values():
    singles = singletons_partition(3)
    assert abs(m_concurrence_pure(ghz_state(), singles) - SQRT_3_2) < 1e-12
    assert abs(m_concurrence_pure(w_state(), singles) - SQRT_4_3) < 1e-12
    cut = bipartition((0,), 3)
    assert abs(m_concurrence_pure(ghz_state(), cut) - 1.0) < 1e-12
    assert abs(m_concurrence_pure(w_state(), cut) - math.sqrt(8.0) / 3.0) < 1e-12


def test_m_concurrence_vanishes_on_products():
    up = np.zeros(8)
    up[0] = 1.0
    assert m_concurrence_pure(up, singletons_partition(3)) < 1e-7
    # product across one cut only: Bell pair on qubits 2,3
    vec = one_vs_pair_product(1.0, 0.0, [1 / math.sqrt(2), 0, 0, 1 / math.sqrt(2)])
    assert m_concurrence_pure(vec, bipartition((0,), 3)) < 1e-7
    # ... but not across the others
    assert m_concurrence_pure(vec, bipartition((1,), 3)) > 0.9


def test_m_concurrence_two_qubit_closed_form():
    # across a single cut of two qubits the measure reduces to the
    # standard concurrence 2 |ad - bc|
    rng = np.random.default_rng(12)
    cut = bipartition((0,), 2)
    for _ in range(25):
        v = haar_state(4, rng)
        expected = 2.0 * abs(v[0] * v[3] - v[1] * v[2])
        got = m_concurrence_pure(v, cut, dims=(2, 2))
        assert abs(got - expected) < 1e-10


def test_m_concurrence_local_unitary_invariance():
    rng = np.random.default_rng(13)
    specs = [singletons_partition(3), bipartition((1,), 3)]
    for trial in range(20):
        v = haar_state(8, rng)
        lu = random_local_unitary((2, 2, 2), int(rng.integers(0, 2**31)))
        w = lu.apply(v)
        for spec in specs:
            a = m_concurrence_pure(v, spec, dims=(2, 2, 2))
            b = m_concurrence_pure(w, spec, dims=(2, 2, 2))
            assert abs(a - b) < 1e-10


def test_m_concurrence_composite_state_and_dim_inference():
    rng = np.random.default_rng(14)
    state = compose(antisymmetric_momentum(), ghz_state())
    spec = PartitionSpec(((1, 3, 5), (0, 2, 4)))
    val = m_concurrence_pure(state, spec)
    assert val < 1e-7  # product across the spin/momentum cut
    # raw 216 vector infers the composite factorization
    val2 = m_concurrence_pure(state.vector, spec)
    assert abs(val - val2) < 1e-13
    # raw 8 vector infers three qubits
    assert abs(
        m_concurrence_pure(ghz_state(), singletons_partition(3)) - SQRT_3_2
    ) < 1e-12


def test_m_concurrence_partition_mismatch_raises():
    with pytest.raises((ShapeError, InputError)):
        m_concurrence_pure(ghz_state(), singletons_partition(4))
    with pytest.raises((ShapeError, InputError)):
        m_concurrence_pure(np.ones(5) / math.sqrt(5.0), singletons_partition(3))


def test_three_tangle_frozen_values():
    assert abs(three_tangle(ghz_state()) - 1.0) < 1e-12
    assert three_tangle(w_state()) < 1e-12
    for alpha in np.linspace(0, math.pi / 2, 11):
        tau = three_tangle(ghz_alpha(alpha))
        assert abs(tau - math.sin(2 * alpha) ** 2) < 1e-12


def test_three_tangle_vanishes_on_biseparable():
    rng = np.random.default_rng(15)
    for _ in range(10):
        pair = haar_state(4, rng)
        one = haar_state(2, rng)
        vec = np.kron(one, pair)  # qubit 1 unentangled with 2,3
        assert three_tangle(vec) < 1e-12


def test_three_tangle_local_unitary_invariant_and_bounded():
    rng = np.random.default_rng(16)
    for trial in range(25):
        v = haar_state(8, rng)
        tau = three_tangle(v)
        assert -1e-12 <= tau <= 1.0 + 1e-12
        lu = random_local_unitary((2, 2, 2), trial)
        assert abs(three_tangle(lu.apply(v)) - tau) < 1e-10


def test_sqrt_radicand_noise_policy():
    assert _sqrt_radicand(4.0) == 2.0
    assert _sqrt_radicand(-1e-13) == 0.0  # numerical noise clamps to zero
    with pytest.raises(NumericError):
        _sqrt_radicand(-1e-6)
