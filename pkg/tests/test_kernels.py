"""Special-function kernels: frozen spots, symmetries, and dual-route checks.

The singular kernel M has two independent evaluation routes (subtracted
series and adaptive quadrature); they are compared against each other, not
against themselves.  Frozen complex values come from a 30-digit mpmath run.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedload import (
    MaterialConfig,
    PoleError,
    coeff_b,
    complex_gamma,
    derive_params,
    kernel_g,
    mellin_m,
    rhs_f,
)
from gradedload.kernels import _mellin_quad, _mellin_series

# frozen spot values (mpmath, 30 dps)
B1_AT_1 = -0.08064049958557055  # nu = 0.3 material
B2_AT_1 = -0.12274756325774571
B1_AT_NU = -0.22692393059466688
B2_AT_NU = -1.4572315485675373
G1_SPOT = -0.39784716116441386 + 0.14026338618512871j  # s = 0.025 + 1i, nu = 0.1
G2_SPOT = 4.923472642206899 + 1.4026744765930974j
M_03 = 1.3648640213834512 - 0.4029243752545487j  # M(0.3, 0.204)
M_095 = 0.6815075613961104 - 0.1670811480468601j  # M(0.95, 0.204)
M_AT_1 = 0.6572263225401313 - 0.1601137881536339j  # M(1.0, delta1_minus)
DELTA1_MINUS = 0.20405105386990351
DELTA1_PLUS = -0.19938341895851416


@pytest.fixture(scope="module")
def p01():
    return derive_params(MaterialConfig(nu=0.1))


@pytest.fixture(scope="module")
def p03():
    return derive_params(MaterialConfig(nu=0.3))


# ---------------------------------------------------------------- gamma


def test_gamma_known_values():
    assert complex_gamma(1.0) == pytest.approx(1.0, rel=1e-13)
    assert complex_gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert complex_gamma(6.0) == pytest.approx(120.0, rel=1e-13)


def test_gamma_recurrence_spot():
    z = 1.5 + 1.3j
    lhs = complex_gamma(z + 1.0)
    rhs = z * complex_gamma(z)
    assert abs(lhs - rhs) / abs(rhs) <= 1e-12


def test_gamma_pole_guard():
    for bad in (0.0, -1.0, -2.0, -7.0):
        with pytest.raises(PoleError):
            complex_gamma(bad)
    with pytest.raises(PoleError):
        complex_gamma(np.array([0.5, -3.0]))


def test_gamma_reflection_window():
    # deterministic sample of the working window 0.01 <= |z| <= 100,
    # |Im z| <= 60, kept off the real integers
    rng = np.random.default_rng(20260825)
    worst = 0.0
    for _ in range(200):
        re = rng.uniform(-40.0, 40.0)
        im = rng.uniform(-60.0, 60.0)
        z = complex(re, im)
        if abs(z) < 0.01 or abs(z) > 100.0:
            continue
        if abs(im) < 1e-3 and abs(re - round(re)) < 1e-3:
            continue
        lhs = complex_gamma(z) * complex_gamma(1.0 - z)
        rhs = math.pi / np.sin(math.pi * z)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    assert worst <= 1e-11


def test_gamma_recurrence_window():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(200):
        z = complex(rng.uniform(0.1, 50.0), rng.uniform(-60.0, 60.0))
        lhs = complex_gamma(z + 1.0)
        rhs = z * complex_gamma(z)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    assert worst <= 1e-12


# ---------------------------------------------------------------- b and G


def test_coeff_b_frozen(p03):
    assert coeff_b(1, 1.0, p03) == pytest.approx(B1_AT_1, rel=1e-12)
    assert coeff_b(2, 1.0, p03) == pytest.approx(B2_AT_1, rel=1e-12)
    assert coeff_b(1, 0.3, p03) == pytest.approx(B1_AT_NU, rel=1e-12)
    assert coeff_b(2, 0.3, p03) == pytest.approx(B2_AT_NU, rel=1e-12)


def test_coeff_b_schwarz(p01):
    for j in (1, 2):
        for s in (0.2 + 0.9j, 0.025 + 3.3j, 0.7 - 2.1j):
            assert coeff_b(j, np.conj(s), p01) == pytest.approx(
                np.conj(coeff_b(j, s, p01)), rel=1e-14
            )


def test_coeff_b_bad_component(p01):
    with pytest.raises(ValueError):
        coeff_b(3, 1.0, p01)


def test_kernel_g_frozen_spots(p01):
    s = 0.025 + 1.0j
    assert kernel_g(1, s, p01) == pytest.approx(G1_SPOT, rel=1e-12)
    assert kernel_g(2, s, p01) == pytest.approx(G2_SPOT, rel=1e-12)


def test_kernel_g_schwarz(p01):
    sigma = p01.sigma
    # the named spot plus a deterministic sample on the contour line
    spots = [sigma + 0.7j]
    rng = np.random.default_rng(11)
    spots += [sigma + 1j * t for t in rng.uniform(-30.0, 30.0, size=100)]
    for j in (1, 2):
        for s in spots:
            lhs = kernel_g(j, np.conj(s), p01)
            rhs = np.conj(kernel_g(j, s, p01))
            assert abs(lhs - rhs) <= 1e-12 * max(abs(rhs), 1.0)


def test_kernel_g_asymptotes(p01):
    # far along the contour G_1 grows like +-i lam_1 beta^{s/2} and G_2
    # like +-i lam_2 beta^{-s/2}; the sign is +i in the upper half-strip
    # and -i in the lower (conjugate) half
    sigma = p01.sigma
    tau = 40.0
    lams = (p01.lam1, p01.lam2)
    expos = (0.5, -0.5)
    for j in (1, 2):
        lam = lams[j - 1]
        expo = expos[j - 1]
        s_up = sigma + 1j * tau
        ref_up = 1j * lam * p01.beta ** (expo * s_up)
        assert abs(kernel_g(j, s_up, p01) / ref_up - 1.0) <= 0.05
        s_down = sigma - 1j * tau
        ref_down = -1j * lam * p01.beta ** (expo * s_down)
        assert abs(kernel_g(j, s_down, p01) / ref_down - 1.0) <= 0.05


def test_kernel_g_pole_guard(p01):
    # s = nu makes Gamma((s - nu)/2) a pole
    with pytest.raises(PoleError):
        kernel_g(1, p01.nu, p01)


# ---------------------------------------------------------------- f


def test_rhs_f_spot():
    value = rhs_f(1.0, 0.025)
    assert value.real == pytest.approx(0.0, abs=1e-12)
    assert value.imag == pytest.approx(6.288033152857572, rel=1e-12)


def test_rhs_f_zero_sigma_limit():
    for x in (0.25, 0.5, 1.0):
        assert rhs_f(x, 1e-14) == pytest.approx(4j * math.pi / (x + 1.0), rel=1e-10)
    assert rhs_f(1.0, 1e-14) == pytest.approx(2j * math.pi, rel=1e-10)


def test_rhs_f_modulus_bounds():
    for sigma in (0.01, 0.1, 0.3):
        for x in np.linspace(0.01, 1.0, 25):
            mod = abs(rhs_f(float(x), sigma))
            assert 2.0 * math.pi - 1e-9 <= mod <= 4.0 * math.pi + 1e-9


def test_rhs_f_array():
    x = np.array([0.25, 0.5, 1.0])
    out = rhs_f(x, 0.025)
    assert out.shape == (3,)
    assert out[2] == pytest.approx(rhs_f(1.0, 0.025), rel=1e-15)


# ---------------------------------------------------------------- M


def test_mellin_frozen_spots():
    assert mellin_m(0.3, 0.204) == pytest.approx(M_03, rel=1e-12)
    assert mellin_m(0.95, 0.204) == pytest.approx(M_095, rel=1e-10)
    assert mellin_m(1.0, DELTA1_MINUS) == pytest.approx(M_AT_1, rel=1e-10)


def test_mellin_series_vs_quadrature_grid():
    # dual routes compared across the working grid of both exponent families
    worst = 0.0
    for delta in (DELTA1_MINUS, -DELTA1_MINUS, DELTA1_PLUS, -DELTA1_PLUS):
        for x in np.arange(0.05, 0.951, 0.1):
            series = _mellin_series(float(x), delta)
            quadr = _mellin_quad(float(x), delta)
            worst = max(worst, abs(series - quadr) / abs(quadr))
    assert worst <= 1e-10


def test_mellin_small_x_limit():
    delta = DELTA1_MINUS
    x = 1e-12
    head = math.pi * 1j * np.exp(1j * delta * math.log(x)) / math.sinh(math.pi * delta)
    assert mellin_m(x, delta) - head == pytest.approx(1.0 / (1j * delta), rel=1e-10)


def test_mellin_quadrature_against_log_oracle():
    # delta -> 0 analytic antiderivative validates the quadrature route
    for x in (0.5, 0.95, 1.0):
        value = _mellin_quad(x, 1e-9)
        assert value.real == pytest.approx(math.log((1.0 + x) / x), rel=1e-8)
        assert abs(value.imag) <= 1e-8


def test_mellin_domain_gates():
    with pytest.raises(ValueError):
        mellin_m(0.0, 0.2)
    with pytest.raises(ValueError):
        mellin_m(1.0001, 0.2)
    with pytest.raises(ValueError):
        mellin_m(-0.3, 0.2)
    with pytest.raises(ValueError):
        mellin_m(0.5, 0.0)


@settings(max_examples=40, derandomize=True, deadline=None)
@given(x=st.floats(0.01, 0.89), delta=st.floats(0.01, 0.5))
def test_mellin_route_agreement_and_reflection(x, delta):
    series = _mellin_series(x, delta)
    assert abs(series - _mellin_quad(x, delta)) <= 1e-9 * abs(series)
    # conjugating the exponent conjugates the kernel
    assert mellin_m(x, -delta) == pytest.approx(np.conj(mellin_m(x, delta)), rel=1e-12)
