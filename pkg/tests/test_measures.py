import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entmono.linalg import reduced_state
from entmono.measures import (
    Bipartition,
    binary_entropy,
    concurrence_pure,
    convex_roof_upper_bound,
    eof_from_squared_concurrence,
    eof_pure,
    eof_two_qubit_mixed,
    von_neumann_entropy,
    wootters_concurrence,
)
from entmono.states import (
    SeededSampler,
    basis_state,
    generalized_schmidt,
    ghz_state,
    haar_random_pure,
    random_mixed,
    w_state,
)

# 50-digit reference evaluations, rounded to float64
H_TWO_THIRDS = 0.9182958340544895
EOF_W_PAIR = 0.5500477595827574

_YY = np.kron([[0.0, -1.0j], [1.0j, 0.0]], [[0.0, -1.0j], [1.0j, 0.0]]).real


def _wootters_by_eigenvalues(rho):
    """Textbook route: eigenvalues of the non-Hermitian product rho rho~."""
    flipped = _YY @ rho.conj() @ _YY
    lam = np.linalg.eigvals(rho @ flipped)
    mu = np.sort(np.sqrt(np.clip(lam.real, 0.0, None)))[::-1]
    return max(0.0, mu[0] - mu[1] - mu[2] - mu[3])


def _bell():
    return np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) / np.sqrt(2)


def test_binary_entropy_endpoints_and_center():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert math.copysign(1.0, binary_entropy(1.0)) > 0  # no -0.0 leaking out
    assert abs(binary_entropy(0.5) - 1.0) < 1e-15
    assert abs(binary_entropy(2 / 3) - H_TWO_THIRDS) < 1e-14


def test_binary_entropy_arrays_and_domain():
    vals = binary_entropy(np.array([0.0, 0.5, 1.0]))
    np.testing.assert_allclose(vals, [0.0, 1.0, 0.0], atol=1e-15)
    assert binary_entropy(-1e-11) == 0.0  # inside tolerance, clipped
    with pytest.raises(ValueError):
        binary_entropy(-1e-3)
    with pytest.raises(ValueError):
        binary_entropy(1.001)


@settings(max_examples=60, deadline=None)
@given(p=st.floats(0.0, 1.0))
def test_binary_entropy_symmetry(p):
    assert abs(binary_entropy(p) - binary_entropy(1.0 - p)) < 1e-12


def test_eof_curve_values():
    assert eof_from_squared_concurrence(0.0) == 0.0
    assert abs(eof_from_squared_concurrence(1.0) - 1.0) < 1e-15
    assert abs(eof_from_squared_concurrence(8 / 9) - H_TWO_THIRDS) < 1e-14
    assert abs(eof_from_squared_concurrence(4 / 9) - EOF_W_PAIR) < 1e-14
    with pytest.raises(ValueError):
        eof_from_squared_concurrence(1.1)


@settings(max_examples=60, deadline=None)
@given(x=st.floats(0.0, 1.0), y=st.floats(0.0, 1.0))
def test_eof_curve_monotone(x, y):
    lo, hi = sorted((x, y))
    assert eof_from_squared_concurrence(hi) >= eof_from_squared_concurrence(lo) - 1e-12


def test_von_neumann_entropy():
    assert von_neumann_entropy(np.diag([1.0, 0.0])) == 0.0
    assert abs(von_neumann_entropy(np.eye(2) / 2) - 1.0) < 1e-12
    assert abs(von_neumann_entropy(np.diag([2 / 3, 1 / 3])) - H_TWO_THIRDS) < 1e-12


def test_von_neumann_entropy_basis_invariant():
    rng = np.random.default_rng(4)
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    rho = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
    assert abs(von_neumann_entropy(q @ rho @ q.conj().T) - von_neumann_entropy(rho)) < 1e-10


def test_concurrence_pure_known_states():
    assert concurrence_pure(basis_state(3, 0), (0,)) == 0.0
    assert abs(concurrence_pure(ghz_state(3), (0,)) - 1.0) < 1e-12
    assert abs(concurrence_pure(_bell(), (0,)) - 1.0) < 1e-12
    flat = generalized_schmidt((math.sqrt(5) / 5,) * 5)
    assert abs(concurrence_pure(flat, (0,)) - 2 * math.sqrt(3) / 5) < 1e-12


def test_concurrence_pure_accepts_bipartition():
    cut = Bipartition.of((0,), 3)
    assert abs(concurrence_pure(ghz_state(3), cut) - 1.0) < 1e-12
    with pytest.raises(ValueError):
        concurrence_pure(ghz_state(3), Bipartition((0,), (1,)))  # does not cover qubit 2


def test_concurrence_pure_two_qubit_determinant_identity():
    # for two qubits the purity route must agree with 2|ad - bc|
    for seed in range(40):
        psi = haar_random_pure(2, SeededSampler(seed))
        det = 2.0 * abs(psi[0] * psi[3] - psi[1] * psi[2])
        assert abs(concurrence_pure(psi, (0,)) - det) < 1e-12


def test_concurrence_pure_wide_cut_range():
    # a two-qubit side of a pure state can push past 1, capped by sqrt(3/2)
    psi = haar_random_pure(4, SeededSampler(123))
    c = concurrence_pure(psi, (0, 1))
    assert 0.0 <= c <= math.sqrt(1.5) + 1e-12
    assert abs(concurrence_pure(ghz_state(4), (0, 1)) - 1.0) < 1e-12


def test_wootters_concurrence_known_states():
    rho_bell = np.outer(_bell(), _bell().conj())
    assert abs(wootters_concurrence(rho_bell) - 1.0) < 1e-12
    assert wootters_concurrence(np.eye(4) / 4) == 0.0
    assert abs(wootters_concurrence(reduced_state(w_state(3), (0, 1))) - 2 / 3) < 1e-12
    assert abs(wootters_concurrence(reduced_state(w_state(4), (0, 1))) - 0.5) < 1e-12


def test_wootters_concurrence_werner_family():
    # p |Phi+><Phi+| + (1-p) I/4 has concurrence max(0, (3p - 1)/2)
    rho_bell = np.outer(_bell(), _bell().conj())
    for p in (0.0, 0.2, 1 / 3, 0.5, 0.8, 1.0):
        rho = p * rho_bell + (1.0 - p) * np.eye(4) / 4
        assert abs(wootters_concurrence(rho) - max(0.0, (3 * p - 1) / 2)) < 1e-12


def test_wootters_concurrence_matches_eigenvalue_route():
    # the non-Hermitian eigensolve is the noisier route; it sets the tolerance
    for i in range(60):
        rho = random_mixed(2, i % 3, SeededSampler(1000 + i))
        a = wootters_concurrence(rho)
        b = _wootters_by_eigenvalues(rho)
        assert abs(a - b) < 1e-7, (i, a, b)


def test_wootters_concurrence_rejects_bad_input():
    with pytest.raises(ValueError):
        wootters_concurrence(np.eye(8) / 8)
    with pytest.raises(ValueError):
        wootters_concurrence(np.eye(4))
    bad = np.zeros((4, 4), dtype=complex)
    bad[0, 1] = 1.0
    with pytest.raises(ValueError):
        wootters_concurrence(bad)


def test_eof_two_qubit_mixed():
    rho_bell = np.outer(_bell(), _bell().conj())
    assert abs(eof_two_qubit_mixed(rho_bell) - 1.0) < 1e-12
    assert eof_two_qubit_mixed(np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex)) == 0.0
    assert abs(eof_two_qubit_mixed(reduced_state(w_state(3), (0, 1))) - EOF_W_PAIR) < 1e-14


def test_eof_pure():
    assert abs(eof_pure(w_state(3), (0,)) - H_TWO_THIRDS) < 1e-12
    for seed in (5, 6):
        psi = haar_random_pure(3, SeededSampler(seed))
        expect = von_neumann_entropy(reduced_state(psi, (0,)))
        assert abs(eof_pure(psi, (0,)) - expect) < 1e-12


def test_convex_roof_recovers_pure_values():
    rho_bell = np.outer(_bell(), _bell().conj())
    assert abs(convex_roof_upper_bound(rho_bell, trials=50) - 1.0) < 1e-9
    assert abs(convex_roof_upper_bound(rho_bell, measure="eof", trials=50) - 1.0) < 1e-9
    sep = np.outer(basis_state(2, 0), basis_state(2, 0).conj())
    assert convex_roof_upper_bound(sep, trials=50) < 1e-9


def test_convex_roof_is_deterministic():
    rho = np.eye(4, dtype=complex) / 4
    a = convex_roof_upper_bound(rho, trials=200, seed=7)
    b = convex_roof_upper_bound(rho, trials=200, seed=7)
    assert a == b
    assert a >= -1e-12


def test_convex_roof_upper_bounds_closed_forms():
    for i in range(12):
        rho = random_mixed(2, 1 + i % 2, SeededSampler(77 + i))
        roof_c = convex_roof_upper_bound(rho, trials=120, seed=i)
        assert roof_c >= wootters_concurrence(rho) - 1e-8
        roof_e = convex_roof_upper_bound(rho, measure="eof", trials=120, seed=i)
        assert roof_e >= eof_two_qubit_mixed(rho) - 1e-8


def test_convex_roof_rejects_bad_arguments():
    rho = np.eye(4, dtype=complex) / 4
    with pytest.raises(ValueError):
        convex_roof_upper_bound(rho, measure="negativity")
    with pytest.raises(ValueError):
        convex_roof_upper_bound(rho, trials=0)
    with pytest.raises(ValueError):
        convex_roof_upper_bound(np.eye(2, dtype=complex) / 2)
