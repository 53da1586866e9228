import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from diophantine_adiabatic.errors import DomainError
from diophantine_adiabatic.fock import (bessel_i2, coherent_amplitudes, energy_level, k3,
                                        k_minus, k_plus, norm_defect, number_op,
                                        truncation_dimension)

PAPER_STATE = [0.16, 0.36, 0.51, 0.53, 0.43, 0.29, 0.17, 0.08, 0.04, 0.02]

# mpmath.besseli(2, x) at 30 digits
I2_REFERENCE = {
    0.1: 0.00125104199224175926303855438335,
    1.0: 0.135747669767038281182852569995,
    3.2: 2.78829850298703744594560778245,
    8.0: 327.595831526164760622626019782,
    20.0: 39312785.2210407562539656694234,
    50.0: 281643064024519405478.461774924,
}


def series_i(order, x, terms=200):
    """Independent power series for I_order, each term built from log-gamma."""
    return math.fsum(math.exp((2 * j + order) * math.log(x / 2)
                              - math.lgamma(j + 1) - math.lgamma(j + order + 1))
                     for j in range(terms))


def i2_by_recurrence(x):
    return series_i(0, x) - (2.0 / x) * series_i(1, x)


def test_bessel_zero():
    assert bessel_i2(0.0) == 0.0


def test_bessel_domain():
    with pytest.raises(DomainError):
        bessel_i2(-1e-3)


@pytest.mark.parametrize("x", sorted(I2_REFERENCE))
def test_bessel_reference_values(x):
    assert bessel_i2(x) == pytest.approx(I2_REFERENCE[x], rel=1e-12)


@pytest.mark.parametrize("x", [0.1, 1.0, 3.2, 8.0, 20.0])
def test_bessel_two_routes(x):
    # cancellation in I0 - 2 I1 / x limits this route at small x; 1e-10 is the stated bound
    assert bessel_i2(x) == pytest.approx(i2_by_recurrence(x), rel=1e-10)


def test_bessel_against_scipy():
    special = pytest.importorskip("scipy.special")
    xs = np.linspace(0.0, 50.0, 201)
    ours = np.array([bessel_i2(x) for x in xs])
    np.testing.assert_allclose(ours[1:], special.iv(2, xs[1:]), rtol=1e-12)


def test_coherent_matches_paper_listing():
    amps = coherent_amplitudes(4, 9)
    np.testing.assert_allclose(amps.real, PAPER_STATE, atol=0.01)
    assert np.all(amps.imag == 0)


def test_coherent_first_component():
    assert coherent_amplitudes(4, 9)[0].real == pytest.approx(4 / math.sqrt(2 * 327.595831526), rel=1e-9)
    assert coherent_amplitudes(4, 9)[0].real == pytest.approx(0.156, abs=5e-4)


@pytest.mark.parametrize("m", [0, 3, 9])
def test_coherent_vacuum(m):
    expected = np.zeros(m + 1)
    expected[0] = 1
    np.testing.assert_array_equal(coherent_amplitudes(0, m), expected)


def test_coherent_small_z_tends_to_vacuum():
    amps = coherent_amplitudes(1e-6, 4)
    assert abs(amps[0]) == pytest.approx(1.0, abs=1e-11)


def test_coherent_complex_phase():
    z = 2.0 * np.exp(0.7j)
    amps = coherent_amplitudes(z, 6)
    ref = coherent_amplitudes(abs(z), 6)
    np.testing.assert_allclose(amps, ref * np.exp(0.7j * np.arange(7)), atol=1e-14)


def test_norm_defect_values():
    assert norm_defect(4, 9) == pytest.approx(1.73549161880901e-05, rel=1e-10)
    assert norm_defect(0, 5) == 0.0
    # certified truncation error of the Catalan run, mpmath reference
    assert norm_defect(1.6, 3) == pytest.approx(0.00122985340979554, rel=1e-10)


@pytest.mark.parametrize("z, m", [(4, 9), (1.6, 3), (2.5, 5), (0.3, 1)])
def test_norm_defect_is_direct_norm(z, m):
    direct = abs(1 - np.linalg.norm(coherent_amplitudes(z, m)))
    assert norm_defect(z, m) == pytest.approx(direct, rel=1e-9)


def test_truncation_dimension():
    assert truncation_dimension(4, 1e-4) == 9
    assert truncation_dimension(0, 1e-4) == 0
    eps = norm_defect(1.6, 3)
    assert truncation_dimension(1.6, eps) == 3
    assert norm_defect(1.6, 2) > eps


@given(st.floats(0.0, 6.0), st.integers(0, 25))
def test_norm_defect_monotone(z, m):
    assert norm_defect(z, m + 1) <= norm_defect(z, m)


def test_norm_defect_tends_to_zero():
    assert norm_defect(4, 40) < 1e-20


def test_k_plus_entries():
    kp = k_plus(9)
    assert kp[1, 0] == pytest.approx(math.sqrt(3), abs=1e-7)
    assert kp.shape == (10, 10)
    assert np.all(kp[:, 9] == 0)  # overflow out of |m> dropped


@pytest.mark.parametrize("m", [0, 1, 9])
def test_k_minus_annihilates_vacuum(m):
    vac = np.zeros(m + 1)
    vac[0] = 1
    np.testing.assert_array_equal(k_minus(m) @ vac, 0)
    np.testing.assert_array_equal(k_minus(m), k_plus(m).T)


def test_number_op():
    np.testing.assert_array_equal(number_op(9), np.diag(np.arange(10)))
    np.testing.assert_array_equal(number_op(9), (k3(9) - 3 * np.eye(10)) / 2)


@pytest.mark.parametrize("n, e", [(0, 0), (1, 3), (6, 48)])
def test_energy_level(n, e):
    assert energy_level(n) == e


def test_hamiltonian_spectrum_identity():
    m = 9
    kk = k_plus(m) @ k_minus(m)
    np.testing.assert_allclose(kk, np.diag([energy_level(n) for n in range(m + 1)]), atol=1e-12)


def test_commutator_interior():
    m = 8
    comm = k_minus(m) @ k_plus(m) - k_plus(m) @ k_minus(m)
    diff = comm - k3(m)
    np.testing.assert_allclose(diff[:, :m], 0, atol=1e-12)
    assert abs(diff[m, m]) > 1  # truncation edge breaks the algebra


def test_cartan_commutators_interior():
    m = 7
    kp, km, h = k_plus(m), k_minus(m), k3(m)
    np.testing.assert_allclose((kp @ h - h @ kp), -2 * kp, atol=1e-12)
    np.testing.assert_allclose((km @ h - h @ km), 2 * km, atol=1e-12)


@pytest.mark.parametrize("z", [4, 1.6, 2 - 1j])
def test_coherent_is_k_minus_eigenstate_up_to_edge(z):
    residuals = []
    for m in (6, 9, 14, 20):
        v = coherent_amplitudes(z, m)
        r = k_minus(m) @ v - z * v
        np.testing.assert_allclose(r[:m], 0, atol=1e-13)
        residuals.append(abs(r[m]))
    assert residuals == sorted(residuals, reverse=True)
    assert residuals[-1] < 1e-4
