"""End-to-end acceptance checks.

Ten headline guarantees, one test each; every test prints a single
[PASS]/[FAIL] line with the measured numbers.  Expected constants were
computed by hand or with an independent high-precision evaluation before
being frozen here.
"""

import math
import time

import numpy as np

from spinboost import (
    BoostScenario,
    ClassCertificate,
    antisymmetric_coeffs,
    antisymmetric_momentum,
    basis_momentum,
    bipartition,
    boost_pure,
    boosted_spin_density_fast,
    build_boost_unitary,
    check_condition1,
    compose,
    composite_spin_ensemble,
    ghz_alpha,
    ghz_state,
    ghz_witness,
    gme_lower_bound,
    haar_state,
    hermitian_eigen,
    m_concurrence_pure,
    particle_partition,
    permutation_momentum,
    sample_biseparable,
    singletons_partition,
    three_tangle,
    verify_certificate,
    w_state,
    wigner_angle,
)
from spinboost.classcheck import SPIN_BIPARTITIONS
from spinboost.kinematics import local_unitary, rapidity
from spinboost.linalg import frob, partial_trace, projector

# Wigner angle for observer and particle speeds both 0.8: rapidity
# eta = atanh(0.8) gives sinh = 4/3, cosh = 5/3, so
# tan(delta) = (4/3)^2 / (2 * 5/3) = 8/15 and delta = atan(8/15).
WIGNER_08 = 0.4899573262537283

SQRT_3_2 = 1.2247448713915890  # sqrt(3/2)
SQRT_4_3 = 1.1547005383792515  # sqrt(4/3)


def _report(ok, label, detail=""):
    tag = "PASS" if ok else "FAIL"
    line = f"[{tag}] {label}" + (f" ({detail})" if detail else "")
    print(line)
    assert ok, line


def _random_density(dim, rng, rank):
    a = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def test_wigner_angle_closed_form_and_limits():
    t0 = time.perf_counter()
    eta = rapidity(0.8)
    delta = wigner_angle(eta, eta)
    ok_value = abs(delta - WIGNER_08) <= 1e-5
    ok_tan = abs(math.tan(delta) - 8.0 / 15.0) <= 1e-12

    ok_zero = wigner_angle(0.0, 1.3) == 0.0 and wigner_angle(0.0, 20.0) == 0.0

    rng = np.random.default_rng(100)
    sym_dev = max(
        abs(wigner_angle(a, b) - wigner_angle(b, a))
        for a, b in rng.uniform(0.0, 12.0, size=(200, 2))
    )
    ok_sym = sym_dev <= 1e-12

    gap = math.pi / 2.0 - wigner_angle(20.0, 20.0)
    ok_limit = 0.0 <= gap <= 1e-6

    elapsed = time.perf_counter() - t0
    _report(
        ok_value and ok_tan and ok_zero and ok_sym and ok_limit and elapsed < 1.0,
        "wigner angle: closed form, zero/symmetric/ultrarelativistic limits",
        f"delta(0.8,0.8)={delta:.12f}, sym dev={sym_dev:.2e}, "
        f"pi/2 gap={gap:.2e}, {elapsed:.2f}s",
    )


def test_witness_exact_values_and_biseparable_soundness():
    t0 = time.perf_counter()
    ok_ghz = abs(ghz_witness(projector(ghz_state())).value - 1.0) <= 1e-9
    ok_w = abs(ghz_witness(projector(w_state())).value) <= 1e-9

    alphas = np.linspace(0.0, math.pi, 61)
    vals = np.array(
        [ghz_witness(projector(ghz_alpha(a))).value for a in alphas]
    )
    ok_law = np.max(np.abs(vals - np.abs(np.sin(2.0 * alphas)))) <= 1e-9
    peaks = set(np.flatnonzero(vals >= vals.max() - 1e-12).tolist())
    ok_peaks = peaks == {15, 45}  # alpha = pi/4 and 3 pi/4 exactly

    worst = -np.inf
    for i in range(1000):
        spec = SPIN_BIPARTITIONS[i % 3] if i % 4 else None
        rho = sample_biseparable(spec, n_terms=1 + i % 4, seed=i)
        worst = max(worst, ghz_witness(rho, validate=False).value)
    ok_sound = worst <= 1e-9

    elapsed = time.perf_counter() - t0
    _report(
        ok_ghz and ok_w and ok_law and ok_peaks and ok_sound and elapsed < 10.0,
        "witness: GHZ=1, W=0, |sin 2a| law with exact peaks, nonpositive on "
        "1000 biseparable samples",
        f"max biseparable value={worst:.2e}, {elapsed:.2f}s",
    )


def test_witness_measurement_settings_match_matrix_elements():
    rng = np.random.default_rng(200)
    worst = 0.0
    for i in range(1000):
        rho = _random_density(8, rng, rank=1 + i % 8)
        a = ghz_witness(rho, path="matrix_elements", validate=False).value
        b = ghz_witness(rho, path="pauli_settings", validate=False).value
        worst = max(worst, abs(a - b))
    _report(
        worst <= 1e-10,
        "witness: nine-setting measurement decomposition equals direct "
        "matrix elements on 1000 random densities",
        f"max path deviation={worst:.2e}",
    )


def test_boost_fast_path_equals_brute_force():
    t0 = time.perf_counter()
    rng = np.random.default_rng(300)
    worst = 0.0
    for _ in range(100):
        coeffs = haar_state(6, rng)
        spin = haar_state(8, rng)
        sc = BoostScenario.from_angle(rng.uniform(0.0, math.pi / 2.0))
        fast = boosted_spin_density_fast(coeffs, spin, sc)
        state = compose(permutation_momentum(coeffs), spin)
        brute = build_boost_unitary(sc)(state).spin_density()
        worst = max(worst, frob(fast - brute))
    elapsed = time.perf_counter() - t0
    _report(
        worst <= 1e-10 and elapsed < 30.0,
        "boost: ensemble fast path equals 216x216 unitary + partial trace "
        "on 100 random scenarios",
        f"max Frobenius distance={worst:.2e}, {elapsed:.2f}s",
    )


def _spin_invariants(vec):
    parts = [singletons_partition(3)] + list(SPIN_BIPARTITIONS)
    vals = [three_tangle(vec)]
    vals += [m_concurrence_pure(vec, p, dims=(2, 2, 2)) for p in parts]
    rho = projector(vec)
    for q in range(3):
        w, _ = hermitian_eigen(partial_trace(rho, (2, 2, 2), (q,)))
        vals.extend(w)
    return np.array(vals)


def test_measures_invariant_under_local_unitaries():
    rng = np.random.default_rng(400)
    states = [ghz_state(), w_state()] + [haar_state(8, rng) for _ in range(50)]
    worst = 0.0
    ok = True
    for i, state in enumerate(states):
        rep = check_condition1(state, (2, 2, 2), trials=100, seed=4000 + i,
                               atol=1e-9)
        ok = ok and rep.passed
        worst = max(worst, rep.max_tangle_deviation,
                    rep.max_concurrence_deviation)

    # boosts of momentum-definite states act as local unitaries on the
    # spin sector and so preserve every invariant
    boost_dev = 0.0
    assignments = [(0, 1, 2), (2, 0, 1), (1, 1, 0), (2, 2, 2)]
    for i in range(10):
        spin = haar_state(8, rng)
        labels = assignments[i % len(assignments)]
        sc = BoostScenario.from_angle(rng.uniform(0.0, math.pi / 2.0))
        rho = boost_pure(compose(basis_momentum(labels), spin), sc).spin_density()
        rotated = local_unitary(labels, sc) @ spin
        boost_dev = max(boost_dev, frob(rho - projector(rotated)))
        boost_dev = max(
            boost_dev,
            np.abs(_spin_invariants(rotated) - _spin_invariants(spin)).max(),
        )
    ok = ok and boost_dev <= 1e-9

    _report(
        ok,
        "invariance: tangle and m-concurrences unchanged by 100 local "
        "unitaries on 52 states; momentum-definite boosts act locally",
        f"max LU deviation={worst:.2e}, max boost deviation={boost_dev:.2e}",
    )


def test_boost_certificates_reconstruct_and_match_class():
    rng = np.random.default_rng(500)
    ok = True
    worst_rec = 0.0
    worst_inv = 0.0
    for _ in range(50):
        momentum = haar_state(27, rng)
        spin = haar_state(8, rng)
        sc = BoostScenario.from_angle(rng.uniform(0.0, math.pi / 2.0))
        state = compose(momentum, spin)
        rho = boost_pure(state, sc).spin_density()
        cert = ClassCertificate(spin, composite_spin_ensemble(state, sc))
        rep = verify_certificate(
            cert, rho, reconstruction_atol=1e-10, invariant_atol=1e-9
        )
        ok = ok and rep.passed
        worst_rec = max(worst_rec, rep.reconstruction_error)
        worst_inv = max(worst_inv, rep.max_spectrum_deviation,
                        rep.max_tangle_deviation)
    _report(
        ok,
        "certificates: every boosted product state decomposes into "
        "local-unitary copies of its own spin state (50 scenarios)",
        f"max reconstruction={worst_rec:.2e}, max invariant "
        f"deviation={worst_inv:.2e}",
    )


def test_particle_partition_measure_is_boost_invariant():
    particles = particle_partition()
    momentum = antisymmetric_momentum()
    deltas = np.linspace(0.0, math.pi / 2.0, 121)
    worst = 0.0
    for spin in (ghz_state(), w_state()):
        state = compose(momentum, spin)
        base = m_concurrence_pure(state, particles)
        for delta in deltas:
            boosted = boost_pure(state, BoostScenario.from_angle(delta))
            worst = max(
                worst, abs(m_concurrence_pure(boosted, particles) - base)
            )
    _report(
        worst <= 1e-9,
        "particle partition: per-particle m-concurrence constant across the "
        "full boost sweep for GHZ and W inputs",
        f"max drift={worst:.2e}",
    )


def test_entanglement_bound_never_grows_with_boost():
    coeffs = antisymmetric_coeffs()
    alphas = np.linspace(0.0, math.pi, 61)
    deltas = np.linspace(0.0, math.pi / 2.0, 61)
    ok_monotone = True
    for alpha in alphas:
        spin = ghz_alpha(alpha)
        base = gme_lower_bound(
            boosted_spin_density_fast(coeffs, spin, BoostScenario.from_angle(0.0)),
            validate=False,
        )
        for delta in deltas:
            rho = boosted_spin_density_fast(
                coeffs, spin, BoostScenario.from_angle(delta)
            )
            if gme_lower_bound(rho, validate=False) > base + 1e-9:
                ok_monotone = False

    bound_peak = gme_lower_bound(
        boosted_spin_density_fast(
            coeffs, ghz_alpha(math.pi / 4.0), BoostScenario.from_angle(0.0)
        ),
        validate=False,
    )
    ok_peak = abs(bound_peak - 1.0) <= 1e-9
    ok_zero = all(
        gme_lower_bound(
            boosted_spin_density_fast(
                coeffs, ghz_alpha(0.0), BoostScenario.from_angle(d)
            ),
            validate=False,
        )
        == 0.0
        for d in deltas
    )
    _report(
        ok_monotone and ok_peak and ok_zero,
        "witness surface: detected entanglement never exceeds its rest-frame "
        "value on the 61x61 grid; peak 1 at alpha=pi/4, zero row at alpha=0",
        f"bound(pi/4, 0)={bound_peak:.12f}",
    )


def test_closed_form_measure_spot_checks():
    singles = singletons_partition(3)
    cut = bipartition((0,), 3)
    checks = [
        ("GHZ three-part concurrence", m_concurrence_pure(ghz_state(), singles),
         SQRT_3_2),
        ("GHZ one-vs-two concurrence", m_concurrence_pure(ghz_state(), cut), 1.0),
        ("W three-part concurrence", m_concurrence_pure(w_state(), singles),
         SQRT_4_3),
        ("GHZ tangle", three_tangle(ghz_state()), 1.0),
        ("W tangle", three_tangle(w_state()), 0.0),
    ]
    worst = max(abs(got - want) for _, got, want in checks)
    _report(
        worst <= 1e-9,
        "closed forms: GHZ/W concurrences sqrt(3/2), 1, sqrt(4/3); tangles 1, 0",
        f"max deviation={worst:.2e}",
    )


def test_eigensolver_reconstruction_and_unitarity():
    rng = np.random.default_rng(600)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 17))
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = (a + a.conj().T) / 2.0
        w, v = hermitian_eigen(h)
        worst = max(worst, frob(v @ np.diag(w) @ v.conj().T - h))
        worst = max(worst, frob(v.conj().T @ v - np.eye(n)))
    _report(
        worst <= 1e-10,
        "eigensolver: reconstruction and unitarity to 1e-10 on 100 random "
        "Hermitian matrices up to 16x16",
        f"max Frobenius error={worst:.2e}",
    )
