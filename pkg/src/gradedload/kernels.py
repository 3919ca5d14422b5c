"""Scalar kernels of the boundary integral formulation.

The collocation system couples four unknown densities through three kinds of
coefficient: the diagonal symbol ``G_j(s)`` (a ratio of gamma functions times
the rational factor ``b_j(s)``), the forcing function ``f(x)`` generated by
the point load, and the fixed-singularity kernel ``M(x, delta)`` that
resolves the integrable endpoint singularity of the system.  All accept the
:class:`~gradedload.params.DerivedParams` produced by ``derive_params``.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma as _scipy_gamma

from .errors import PoleError
from .params import DerivedParams

__all__ = ["complex_gamma", "coeff_b", "kernel_g", "rhs_f", "mellin_m"]

# series truncation for mellin_m: relative tail bound and term cap
_SERIES_RTOL = 1e-14
_SERIES_MAX_TERMS = 10_000
# beyond this x the alternating series converges too slowly; integrate instead
_SERIES_X_MAX = 0.9


def complex_gamma(z):
    """Gamma function on the complex plane.

    Wraps the scipy implementation (Lanczos-type with reflection) and adds
    an explicit guard: non-positive integer arguments raise
    :class:`~gradedload.errors.PoleError` instead of returning inf/nan.

    Parameters
    ----------
    z : complex scalar or array_like

    Returns
    -------
    complex scalar or ndarray
    """
    za = np.asarray(z)
    on_real_axis = za.imag == 0.0
    at_pole = on_real_axis & (za.real <= 0.0) & (za.real == np.floor(za.real))
    if np.any(at_pole):
        raise PoleError(f"gamma pole at non-positive integer argument {za[at_pole].flat[0]}")
    out = _scipy_gamma(za if za.dtype.kind == "c" else za.astype(complex))
    if np.isscalar(z) or np.ndim(z) == 0:
        return complex(out)
    return out


def coeff_b(j: int, s, p: DerivedParams):
    """Rational prefactor ``b_j(s)`` of the kernel symbol, j in {1, 2}.

    Real for real ``s``; accepts complex scalars or arrays.
    """
    a_s2 = p.a_s**2
    a_d2 = p.a_d**2
    nu = p.nu
    s = np.asarray(s, dtype=complex) if np.ndim(s) else complex(s)
    if j == 1:
        num = (a_d2 - a_s2) * (s - 1.0) - nu * a_s2
        den = 2.0 * (a_d2 - 1.0) * p.beta2 ** ((1.0 - s) / 2.0) * p.beta1 ** (s / 2.0)
    elif j == 2:
        num = (a_d2 - a_s2) * (s - 1.0) - nu * (a_d2 - 2.0 * a_s2)
        den = 2.0 * (a_s2 - 1.0) * p.beta1 ** ((1.0 - s) / 2.0) * p.beta2 ** (s / 2.0)
    else:
        raise ValueError(f"component index j must be 1 or 2, got {j}")
    return num / den


def kernel_g(j: int, s, p: DerivedParams):
    """Diagonal kernel symbol ``G_j(s)``, j in {1, 2}.

    ``G_j(s) = b_j(s) * Gamma(1 - s/2) Gamma((s - nu)/2)
               / [Gamma((s + 1 - nu)/2) Gamma((3 - s)/2)]``

    Satisfies the reflection symmetry G_j(conj(s)) = conj(G_j(s)) and grows
    like ``+-i lam_j beta**(+-s/2)`` far up/down the inversion strip.  Has a
    pole at s = nu, which collocation arguments never hit.
    """
    nu = p.nu
    b = coeff_b(j, s, p)
    s = np.asarray(s, dtype=complex) if np.ndim(s) else complex(s)
    num = complex_gamma(1.0 - s / 2.0) * complex_gamma((s - nu) / 2.0)
    den = complex_gamma((s + 1.0 - nu) / 2.0) * complex_gamma((3.0 - s) / 2.0)
    return b * num / den


def rhs_f(x, sigma: float):
    """Forcing function ``f(x) = 4*pi*i / (x e^{i pi sigma/2} + e^{-i pi sigma/2})``.

    Bounded between 2*pi and 4*pi in modulus for x in [0, 1] and small sigma.
    """
    ph = np.exp(1j * np.pi * sigma / 2.0)
    out = 4j * np.pi / (np.asarray(x) * ph + 1.0 / ph)
    if np.ndim(x) == 0:
        return complex(out)
    return out


def _mellin_series(x: float, delta: float) -> complex:
    """Closed-head series for the fixed-singularity kernel.

    ``M(x, delta) = pi i x^{i delta}/sinh(pi delta)
                    + sum_{k>=0} (-1)^k x^k / (i delta - k)``

    Alternating tail truncated at relative 1e-14; the term cap is generous
    for every x reachable from the dispatcher.
    """
    head = np.pi * 1j * np.exp(1j * delta * math.log(x)) / math.sinh(np.pi * delta)
    acc = 0.0j
    xk = 1.0
    sign = 1.0
    for k in range(_SERIES_MAX_TERMS):
        term = sign * xk / (1j * delta - k)
        acc += term
        if k > 1 and abs(term) < _SERIES_RTOL * abs(head + acc):
            break
        sign = -sign
        xk *= x
    return head + acc


def _mellin_quad(x: float, delta: float) -> complex:
    """Adaptive quadrature route: integral_0^1 y^{i delta}/(y + x) dy.

    The substitution y = e^u turns the endpoint oscillation into a plain
    exponentially damped oscillation on (-inf, 0].
    """
    def re_part(u: float) -> float:
        eu = math.exp(u)
        return eu * math.cos(delta * u) / (eu + x)

    def im_part(u: float) -> float:
        eu = math.exp(u)
        return eu * math.sin(delta * u) / (eu + x)

    opts = dict(epsabs=1e-13, epsrel=1e-12, limit=400)
    re = quad(re_part, -np.inf, 0.0, **opts)[0]
    im = quad(im_part, -np.inf, 0.0, **opts)[0]
    return re + 1j * im


def mellin_m(x: float, delta: float) -> complex:
    """Fixed-singularity kernel ``M(x, delta)`` for x in (0, 1].

    Equal to ``integral_0^1 y^{i delta}/(y + x) dy``.  Evaluated by the
    singularity-subtracted series for x <= 0.9 and by adaptive quadrature
    closer to x = 1, where the alternating series loses its margin.

    Raises
    ------
    ValueError
        If x is outside (0, 1] or delta == 0.
    """
    if not (0.0 < x <= 1.0):
        raise ValueError(f"mellin_m defined for x in (0, 1], got {x}")
    if delta == 0.0:
        raise ValueError("mellin_m requires a nonzero oscillation exponent")
    if x <= _SERIES_X_MAX:
        return _mellin_series(x, delta)
    return _mellin_quad(x, delta)
