"""Material and load configuration, and the parameters derived from it.

The half-plane has Lame coefficients and density growing with depth like
``depth**nu`` (0 < nu < 1), and a point load moves along the boundary at a
constant subsonic speed ``V < c_s``.  Shear modulus at unit depth is the
stress unit, ``mu0 = 1``.  Everything downstream (kernels, collocation
system, field expansions) is parameterised by the quantities computed here:
scaled slownesses, the kernel amplitudes ``lam1, lam2``, and the oscillation
exponents ``delta_j^+-`` that absorb the ``x**(+-i*eps)`` behaviour of the
kernel near the fixed singularity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, OscillationRegimeError, SubsonicViolation

__all__ = ["MU0", "MaterialConfig", "DerivedParams", "derive_params"]

# shear modulus at unit depth; all stresses and loads are scaled by it
MU0 = 1.0


@dataclass(frozen=True)
class MaterialConfig:
    """Physical input set.

    Parameters
    ----------
    nu : float
        Grading exponent of the power-law depth profile, 0 < nu < 1.
    nu_p : float
        Poisson ratio, 0 <= nu_p < 0.5.
    speed_ratio : float
        Load speed over shear wave speed, 0 < V/c_s < 1 (subsonic).
    h1, h2 : float
        Tangential and normal point-load amplitudes divided by mu0.
    xi0 : float
        Load position in the moving frame.
    """

    nu: float = 0.1
    nu_p: float = 0.3
    speed_ratio: float = 0.2
    h1: float = -1.0
    h2: float = -1.0
    xi0: float = 0.0

    def __post_init__(self) -> None:
        if not (0.0 < self.nu < 1.0):
            raise ConfigError(f"grading exponent nu must lie in (0, 1), got {self.nu}")
        if not (0.0 <= self.nu_p < 0.5):
            raise ConfigError(f"Poisson ratio nu_p must lie in [0, 0.5), got {self.nu_p}")
        if not (0.0 < self.speed_ratio):
            raise ConfigError(f"speed_ratio must be positive, got {self.speed_ratio}")
        if self.speed_ratio >= 1.0:
            raise SubsonicViolation(
                f"speed_ratio = {self.speed_ratio} is not subsonic (need V/c_s < 1)"
            )
        for name in ("h1", "h2", "xi0"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ConfigError(f"{name} must be finite, got {v}")


@dataclass(frozen=True)
class DerivedParams:
    """Parameters derived from a :class:`MaterialConfig`.

    ``a_s = c_s/V`` and ``a_d = c_d/V`` are the inverse Mach numbers of the
    shear and pressure waves; ``beta1, beta2`` the positive-definite speed
    factors of the two wave operators; ``beta = beta2/beta1`` controls the
    kernel oscillation rate ``eps``.  ``r`` and ``l`` solve the exponent
    matching conditions; the four ``delta`` values are the oscillation
    exponents of the solution families.  ``gamma1, gamma2`` scale the load
    amplitudes in the boundary conditions, and ``cd2_cs2 = (c_d/c_s)**2``
    doubles as ``(lam0 + 2 mu0)/mu0``.
    """

    nu: float
    sigma: float
    a_s: float
    a_d: float
    beta1: float
    beta2: float
    beta: float
    eps: float
    lam1: float
    lam2: float
    r_param: float
    l_param: float
    delta1_minus: float
    delta1_plus: float
    delta2_minus: float
    delta2_plus: float
    gamma1: float
    gamma2: float
    cd2_cs2: float


def _oscillation_shift(beta: float, lam1: float, lam2: float) -> tuple[float, float]:
    """Solve the exponent matching conditions for (r, l).

    cosh(pi*eps) is evaluated as (sqrt(beta) + 1/sqrt(beta))/2 to avoid an
    exp/log round trip, and l through log1p to keep accuracy when r is
    close to 1.
    """
    sqrt_beta = math.sqrt(beta)
    cosh_pi_eps = (sqrt_beta + 1.0 / sqrt_beta) / 2.0
    r = cosh_pi_eps - lam1 * lam2 / 2.0
    if r < 1.0:
        raise OscillationRegimeError(
            f"no real oscillation exponents: r = {r} < 1"
        )
    rm1 = r - 1.0
    l = math.log1p(rm1 + math.sqrt(rm1 * (r + 1.0))) / (2.0 * math.pi)
    return r, l


def derive_params(config: MaterialConfig, sigma_fraction: float = 0.25) -> DerivedParams:
    """Compute all derived parameters for a configuration.

    Parameters
    ----------
    config : MaterialConfig
    sigma_fraction : float
        Position of the inversion strip, sigma = sigma_fraction * nu.
        Must lie strictly inside (0, 1); results are insensitive to the
        choice (the default nu/4 matches the reference computations).

    Returns
    -------
    DerivedParams

    Raises
    ------
    ConfigError, SubsonicViolation, OscillationRegimeError
    """
    if not (0.0 < sigma_fraction < 1.0):
        raise ConfigError(
            f"sigma_fraction must lie in (0, 1), got {sigma_fraction}"
        )
    nu = config.nu
    cd2_cs2 = 2.0 * (1.0 - config.nu_p) / (1.0 - 2.0 * config.nu_p)
    a_s = 1.0 / config.speed_ratio
    a_d = a_s * math.sqrt(cd2_cs2)
    a_s2 = a_s * a_s
    a_d2 = a_d * a_d
    # subsonic gate guarantees a_s > 1; c_d > c_s guarantees a_d > a_s
    beta1 = a_s2 / (a_d2 - 1.0)
    beta2 = a_d2 / (a_s2 - 1.0)
    beta = beta2 / beta1
    eps = math.log(beta) / (2.0 * math.pi)
    lam1 = (a_d2 - a_s2) / ((a_d2 - 1.0) * math.sqrt(beta2))
    lam2 = (a_d2 - a_s2) / ((a_s2 - 1.0) * math.sqrt(beta1))
    r, l = _oscillation_shift(beta, lam1, lam2)
    delta1_minus = eps / 2.0 + l
    delta1_plus = -eps / 2.0 + l
    # the matching conditions pair the second family with the first:
    # delta2^- = delta1^+ and delta2^+ = delta1^-
    delta2_minus = delta1_plus
    delta2_plus = delta1_minus
    sigma = sigma_fraction * nu
    gam = math.gamma((1.0 - nu) / 2.0)
    gamma1 = gam / (MU0 * 2.0 ** (nu + 1.0) * beta1 ** ((nu - 1.0) / 2.0))
    gamma2 = gam / (cd2_cs2 * MU0 * 2.0 ** (nu + 1.0) * beta2 ** ((nu - 1.0) / 2.0))
    return DerivedParams(
        nu=nu,
        sigma=sigma,
        a_s=a_s,
        a_d=a_d,
        beta1=beta1,
        beta2=beta2,
        beta=beta,
        eps=eps,
        lam1=lam1,
        lam2=lam2,
        r_param=r,
        l_param=l,
        delta1_minus=delta1_minus,
        delta1_plus=delta1_plus,
        delta2_minus=delta2_minus,
        delta2_plus=delta2_plus,
        gamma1=gamma1,
        gamma2=gamma2,
        cd2_cs2=cd2_cs2,
    )
