"""Boundary functionals, load constants, and the asymptotic field expansions.

From a solved collocation system this module recovers the boundary values
``Phi_{j +-}^{(m)}(nu - 1)``, the 2x2 determinants ``Delta_+-`` and the load
constants ``C_{j +-}``, and finally the expansion coefficients that give the
displacements, their tangential derivatives, and the stresses near the
surface (small eta = y/|xi - xi0|) or at depth (large eta).

Physical outputs are real; the computed complex values carry a small
imaginary residue from the discretization, which is recorded and projected
out.  A residue above the sanity bound aborts with ``RealnessError``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConfigError,
    DegenerateDeterminantError,
    ExpansionRangeError,
    RealnessError,
    SingularPointError,
)
from .kernels import coeff_b
from .params import MU0, DerivedParams, MaterialConfig
from .system import SIESolution

__all__ = [
    "BoundaryConstants",
    "FieldCoefficients",
    "FieldResult",
    "boundary_phi",
    "determinant_delta",
    "constants_c",
    "field_coeffs",
    "displacement_field",
    "displacement_derivative",
    "stress_field",
    "derivative_large_eta",
]

# |Delta| below this is too degenerate to divide by
_DELTA_FLOOR = 1e-8
# hard sanity bound on any imaginary residue of a projected field value
_RESIDUE_SANITY = 1e-2

_SIGN_INDEX = {1: 0, -1: 1}


def boundary_phi(sol: SIESolution) -> np.ndarray:
    """Boundary values ``Phi_{j +-}^{(m)}`` at the expansion point nu - 1.

    Quadrature of the solved densities against the load kernel; the
    component-j functional integrates the opposite-component densities.
    With an all-zero solution only the forcing term ``-delta_jm /
    cos(pi nu / 2)`` survives, which pins the normalization.

    Returns
    -------
    ndarray of complex, shape (2, 2, 2)
        Indexed by (j - 1, m - 1, sign index), sign index 0 for "+", 1
        for "-".
    """
    p = sol.params
    d = sol.disc
    nu = p.nu
    xn = d.nodes[1:]
    phase = np.exp(-1j * np.pi * (p.sigma - nu) / 2.0)
    den_plus = xn * phase + 1.0 / phase
    den_minus = xn / phase + phase
    forcing = 1.0 / math.cos(np.pi * nu / 2.0)
    phi = np.zeros((2, 2, 2), dtype=complex)
    for j in (1, 2):
        # family weights of the opposite component: delta_{3-j}^+ pairs
        # with w_minus for j = 1 (exponent identity) and w_plus for j = 2
        if j == 1:
            w_plus_fam, w_minus_fam = d.w_minus, d.w_plus
        else:
            w_plus_fam, w_minus_fam = d.w_plus, d.w_minus
        for sign in (1, -1):
            for m in (1, 2):
                block = sol.blocks[(sign, m)]
                fp = block.f2_plus if j == 1 else block.f1_plus
                fm = block.f2_minus if j == 1 else block.f1_minus
                total = np.sum(fp * w_plus_fam / den_plus + fm * w_minus_fam / den_minus)
                value = sign * 0.5j / np.pi * total
                if j == m:
                    value -= forcing
                phi[j - 1, m - 1, _SIGN_INDEX[sign]] = value
    return phi


def determinant_delta(phi: np.ndarray) -> tuple[complex, complex]:
    """Determinants ``Delta_+- = Phi_1^(1) Phi_2^(2) - Phi_1^(2) Phi_2^(1)``.

    Returns
    -------
    (delta_plus, delta_minus)
    """
    out = []
    for k in (0, 1):
        out.append(
            phi[0, 0, k] * phi[1, 1, k] - phi[0, 1, k] * phi[1, 0, k]
        )
    return complex(out[0]), complex(out[1])


@dataclass(frozen=True)
class BoundaryConstants:
    """Boundary functionals with the load constants solved from them.

    ``c_plus``/``c_minus`` hold (C_1, C_2) for the two sign variants; each
    pair solves the 2x2 system  Phi_j^(1) C_1 + Phi_j^(2) C_2 = gamma_j H_j.
    """

    phi: np.ndarray
    delta_plus: complex
    delta_minus: complex
    c_plus: np.ndarray
    c_minus: np.ndarray


def constants_c(
    phi: np.ndarray, config: MaterialConfig, p: DerivedParams
) -> BoundaryConstants:
    """Solve for the load constants ``C_{j +-}`` by Cramer's rule.

    Raises
    ------
    DegenerateDeterminantError
        If either determinant has modulus below 1e-8.
    """
    delta_plus, delta_minus = determinant_delta(phi)
    for name, value in (("+", delta_plus), ("-", delta_minus)):
        if abs(value) < _DELTA_FLOOR:
            raise DegenerateDeterminantError(
                f"|Delta_{name}| = {abs(value):.3e} below floor {_DELTA_FLOOR}"
            )
    g1h1 = p.gamma1 * config.h1
    g2h2 = p.gamma2 * config.h2
    cs = []
    for k, delta in ((0, delta_plus), (1, delta_minus)):
        c1 = (g1h1 * phi[1, 1, k] - g2h2 * phi[0, 1, k]) / delta
        c2 = (g2h2 * phi[0, 0, k] - g1h1 * phi[1, 0, k]) / delta
        cs.append(np.array([c1, c2]))
    return BoundaryConstants(
        phi=phi,
        delta_plus=delta_plus,
        delta_minus=delta_minus,
        c_plus=cs[0],
        c_minus=cs[1],
    )


@dataclass(frozen=True)
class FieldCoefficients:
    """Expansion coefficients for one side of the load (one kappa).

    ``d0..d3`` drive the near-surface displacement expansion in powers of
    eta, ``e0, e1`` the deep expansion of the tangential derivative.  All
    arrays are indexed by component (j - 1).  ``d1`` and ``e0`` vanish
    analytically through the boundary conditions and are kept as numerical
    checks; ``d3`` vanishes by periodicity.
    """

    kappa: float
    d0: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    d3: np.ndarray
    e0: np.ndarray
    e1: np.ndarray


def field_coeffs(
    bc: BoundaryConstants, p: DerivedParams, kappa: float
) -> FieldCoefficients:
    """Expansion coefficients on the side ``kappa = sgn(xi0 - xi)``."""
    if kappa not in (1.0, -1.0, 1, -1):
        raise ConfigError(f"kappa must be +-1, got {kappa}")
    kappa = float(kappa)
    nu = p.nu
    phi = bc.phi
    c_plus, c_minus = bc.c_plus, bc.c_minus
    turn = np.exp(1j * np.pi * kappa * nu / 2.0)
    lead = math.gamma(nu / 2.0) * 2.0 ** (nu - 1.0) / (
        np.pi ** 1.5 * math.cos(np.pi * nu / 2.0)
    )
    gamma_tail = math.gamma((3.0 - nu) / 2.0)
    d0 = np.zeros(2, dtype=complex)
    d1 = np.zeros(2, dtype=complex)
    d2 = np.zeros(2, dtype=complex)
    d3 = np.zeros(2, dtype=complex)
    e0 = np.zeros(2, dtype=complex)
    e1 = np.zeros(2, dtype=complex)
    # signed sums of C against the boundary functionals, per component
    bracket = np.zeros(2, dtype=complex)
    for j in (1, 2):
        bracket[j - 1] = (
            c_plus[0] * phi[j - 1, 0, 0]
            + c_plus[1] * phi[j - 1, 1, 0]
            - c_minus[0] * phi[j - 1, 0, 1]
            - c_minus[1] * phi[j - 1, 1, 1]
        )
    for j in (1, 2):
        beta_j = p.beta1 if j == 1 else p.beta2
        d0[j - 1] = lead * (turn * c_plus[j - 1] + c_minus[j - 1] / turn)
        d1[j - 1] = (
            1j * kappa * 2.0 ** (nu - 1.0) * beta_j ** ((nu - 1.0) / 2.0)
            / (np.pi * gamma_tail) * bracket[j - 1]
        )
        d2[j - 1] = -nu * d0[j - 1] / (2.0 * beta_j)
        e0[j - 1] = (
            1j * 2.0 ** nu * coeff_b(j, nu, p) * beta_j ** (nu / 2.0)
            / gamma_tail * bracket[2 - j]
        )
        e1[j - 1] = (
            -2.0 * kappa / np.pi * coeff_b(j, 1.0, p) * math.sqrt(beta_j)
            * math.gamma(nu) * math.gamma((1.0 - nu) / 2.0)
            * (c_plus[2 - j] * turn + c_minus[2 - j] / turn)
        )
    return FieldCoefficients(kappa=kappa, d0=d0, d1=d1, d2=d2, d3=d3, e0=e0, e1=e1)


def _check_point(xi: float, xi0: float, y: float) -> tuple[float, float]:
    if y < 0.0:
        raise ConfigError(f"depth coordinate y must be >= 0, got {y}")
    dist = abs(xi - xi0)
    if dist == 0.0:
        raise SingularPointError("field expansions diverge at the load point xi = xi0")
    return dist, y / dist


def _project(value: complex, scale: float) -> tuple[float, float]:
    """Return (real part, relative imaginary residue)."""
    magnitude = max(abs(value), scale)
    if magnitude == 0.0:
        return 0.0, 0.0
    residue = abs(value.imag) / magnitude
    if residue > _RESIDUE_SANITY:
        raise RealnessError(
            f"imaginary residue {residue:.3e} exceeds sanity bound {_RESIDUE_SANITY}"
        )
    return value.real, residue


def _displacement_complex(
    coeffs: FieldCoefficients, xi: float, xi0: float, y: float, p: DerivedParams
) -> tuple[complex, complex]:
    dist, eta = _check_point(xi, xi0, y)
    amp = dist ** (-p.nu)
    out = []
    for j in (0, 1):
        series = (
            coeffs.d0[j]
            + coeffs.d1[j] * eta
            + coeffs.d2[j] * eta**2
            + coeffs.d3[j] * eta**3
        )
        out.append(amp * series)
    return out[0], out[1]


def displacement_field(
    coeffs: FieldCoefficients,
    xi: float,
    xi0: float,
    y: float,
    p: DerivedParams,
    eta_max: float = 1.0,
) -> tuple[float, float]:
    """Displacements ``u_1, u_2`` from the near-surface expansion.

    Valid for eta = y/|xi - xi0| <= eta_max.

    Returns
    -------
    (u1, u2) : floats (real parts; residues recorded by the caller level)
    """
    dist, eta = _check_point(xi, xi0, y)
    if eta > eta_max:
        raise ExpansionRangeError(
            f"near-surface expansion needs eta <= {eta_max}, got {eta:.3f}"
        )
    u1c, u2c = _displacement_complex(coeffs, xi, xi0, y, p)
    scale = max(abs(u1c), abs(u2c))
    return _project(u1c, scale)[0], _project(u2c, scale)[0]


def _derivative_small_complex(
    coeffs: FieldCoefficients, xi: float, xi0: float, y: float, p: DerivedParams
) -> tuple[complex, complex]:
    dist, eta = _check_point(xi, xi0, y)
    direction = math.copysign(1.0, xi - xi0)
    amp = direction * dist ** (-p.nu - 1.0)
    out = []
    for j in (0, 1):
        series = (
            -p.nu * coeffs.d0[j]
            - (p.nu + 1.0) * coeffs.d1[j] * eta
            - (p.nu + 2.0) * coeffs.d2[j] * eta**2
            - (p.nu + 3.0) * coeffs.d3[j] * eta**3
        )
        out.append(amp * series)
    return out[0], out[1]


def displacement_derivative(
    coeffs: FieldCoefficients,
    xi: float,
    xi0: float,
    y: float,
    p: DerivedParams,
    eta_max: float = 1.0,
) -> tuple[float, float]:
    """Tangential derivatives ``du_j/dxi`` from the near-surface expansion."""
    dist, eta = _check_point(xi, xi0, y)
    if eta > eta_max:
        raise ExpansionRangeError(
            f"near-surface expansion needs eta <= {eta_max}, got {eta:.3f}"
        )
    d1c, d2c = _derivative_small_complex(coeffs, xi, xi0, y, p)
    scale = max(abs(d1c), abs(d2c))
    return _project(d1c, scale)[0], _project(d2c, scale)[0]


def _stress_complex(
    coeffs: FieldCoefficients, xi: float, xi0: float, y: float, p: DerivedParams
) -> tuple[complex, complex]:
    dist, eta = _check_point(xi, xi0, y)
    nu = p.nu
    lam0 = p.cd2_cs2 - 2.0  # lam0/mu0 from (lam0 + 2 mu0)/mu0
    lamp2 = p.cd2_cs2
    front = eta**nu / dist
    d0, d2 = coeffs.d0, coeffs.d2
    # index pairing of the printed expansion: the shear stress mixes the
    # normal zeroth-order with the tangential second-order coefficient,
    # the normal stress the other way around
    s12 = front * (
        -nu * d0[1] + 2.0 * d2[0] * eta - (nu + 2.0) * d2[1] * eta**2
    )
    s22 = front * (
        -lam0 * nu * d0[0]
        + lamp2 * 2.0 * d2[1] * eta
        - lam0 * (nu + 2.0) * d2[0] * eta**2
    )
    return s12, s22


def stress_field(
    coeffs: FieldCoefficients,
    xi: float,
    xi0: float,
    y: float,
    p: DerivedParams,
    eta_max: float = 1.0,
) -> tuple[float, float]:
    """Stresses ``sigma_12/mu0, sigma_22/mu0`` from the near-surface expansion.

    At y = 0 the expansion has the exact limit 0 (traction-free surface away
    from the load point) and returns exact zeros.
    """
    dist, eta = _check_point(xi, xi0, y)
    if eta > eta_max:
        raise ExpansionRangeError(
            f"near-surface expansion needs eta <= {eta_max}, got {eta:.3f}"
        )
    if y == 0.0:
        return 0.0, 0.0
    s12c, s22c = _stress_complex(coeffs, xi, xi0, y, p)
    scale = max(abs(s12c), abs(s22c))
    return _project(s12c, scale)[0], _project(s22c, scale)[0]


def _derivative_large_complex(
    coeffs: FieldCoefficients, xi: float, xi0: float, y: float, p: DerivedParams
) -> tuple[complex, complex]:
    dist, eta = _check_point(xi, xi0, y)
    nu = p.nu
    out = []
    for j in (0, 1):
        value = (coeffs.e0[j] + coeffs.e1[j] * eta ** (nu - 1.0)) / (
            np.pi * (xi - xi0) * y**nu
        )
        out.append(value)
    return out[0], out[1]


def derivative_large_eta(
    coeffs: FieldCoefficients,
    xi: float,
    xi0: float,
    y: float,
    p: DerivedParams,
    eta_min: float = 2.0,
) -> tuple[float, float]:
    """Tangential derivatives ``du_j/dxi`` from the deep expansion.

    Valid for eta = y/|xi - xi0| >= eta_min (requires y > 0).
    """
    dist, eta = _check_point(xi, xi0, y)
    if eta < eta_min:
        raise ExpansionRangeError(
            f"deep expansion needs eta >= {eta_min}, got {eta:.3f}"
        )
    d1c, d2c = _derivative_large_complex(coeffs, xi, xi0, y, p)
    scale = max(abs(d1c), abs(d2c))
    return _project(d1c, scale)[0], _project(d2c, scale)[0]


@dataclass(frozen=True)
class FieldResult:
    """Evaluated fields at one query point.

    ``expansion`` is "near" (eta <= eta_max: displacements, derivatives and
    stresses available), "deep" (eta >= eta_min: derivatives only) or
    "out-of-range" (eta between the two expansions: nothing available).
    Unavailable entries are None.  ``imag_residue`` is the largest relative
    imaginary residue projected out of the reported values.
    """

    xi: float
    y: float
    eta: float
    expansion: str
    u1: float | None
    u2: float | None
    du1_dxi: float | None
    du2_dxi: float | None
    s12: float | None
    s22: float | None
    imag_residue: float
