"""Collocation discretization and solution of the boundary integral system.

The four coupled integral equations on (0, 1) are discretized on a uniform
grid ``x_k = k/N`` with piecewise-constant densities carrying the oscillation
exponents ``x**(i delta)``.  Collocating at the right endpoints of the cells
gives a dense ``4N x 4N`` complex block system per sign variant; the two
variants ("+" and "-") differ only in the sign of the diagonal blocks and of
the forcing, and are assembled and factorized independently.

Block layout (rows are equations, columns unknown densities):

    [ D1   0    S+   R- ] [ F1^-]   [ r1 ]
    [ 0    D2   R+   S- ] [ F1^+] = [ r2 ]
    [ S-   R+   D3   0  ] [ F2^-]   [ r3 ]
    [ R-   S+   0    D4 ] [ F2^+]   [ r4 ]

where S(delta) carries the fixed-singularity kernel in its first column and
R(delta) is the regular complementary block; superscripts -/+ mark the two
exponent families.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg as sla

from .errors import ConfigError, SingularMatrixError
from .kernels import kernel_g, mellin_m, rhs_f
from .params import DerivedParams, MaterialConfig, derive_params

__all__ = [
    "Discretization",
    "SolutionBlock",
    "SIESolution",
    "build_grid",
    "step_weights",
    "assemble_matrix",
    "assemble_rhs",
    "lu_solve",
    "solve_system",
]


def step_weights(nodes: np.ndarray, delta: float) -> np.ndarray:
    """Cell weights ``w_n = (x_n^{i d + 1} - x_{n-1}^{i d + 1})/(i d + 1)``.

    ``nodes`` holds x_0..x_N; the returned array has one weight per cell,
    n = 1..N.  The x_0 = 0 endpoint contributes exactly zero.
    """
    power = 1j * delta + 1.0
    lifted = np.zeros(len(nodes), dtype=complex)
    lifted[1:] = np.exp(power * np.log(nodes[1:]))
    return (lifted[1:] - lifted[:-1]) / power


@dataclass(frozen=True)
class Discretization:
    """Uniform grid with the per-family quadrature data.

    ``nodes`` are x_0..x_N; the weight and kernel-head vectors are indexed
    by cell (length N).  ``w_minus``/``m_minus`` belong to the exponent
    delta1^- and ``w_plus``/``m_plus`` to delta1^+; the second family reuses
    them through the exponent pairing.
    """

    n: int
    nodes: np.ndarray
    w_minus: np.ndarray
    w_plus: np.ndarray
    m_minus: np.ndarray
    m_plus: np.ndarray


def build_grid(n: int, p: DerivedParams) -> Discretization:
    """Build the uniform grid and precompute weights and kernel heads.

    Parameters
    ----------
    n : int
        Number of cells, n >= 2.
    p : DerivedParams

    Returns
    -------
    Discretization
    """
    if n < 2:
        raise ConfigError(f"need at least 2 cells, got n = {n}")
    nodes = np.arange(n + 1, dtype=float) / n
    collocation = nodes[1:]
    w_minus = step_weights(nodes, p.delta1_minus)
    w_plus = step_weights(nodes, p.delta1_plus)
    m_minus = np.array([mellin_m(x, p.delta1_minus) for x in collocation])
    m_plus = np.array([mellin_m(x, p.delta1_plus) for x in collocation])
    return Discretization(
        n=n, nodes=nodes, w_minus=w_minus, w_plus=w_plus,
        m_minus=m_minus, m_plus=m_plus,
    )


def _singular_block(d: Discretization, weights: np.ndarray, heads: np.ndarray) -> np.ndarray:
    """Block S(delta): kernel 1/(y + x) with the fixed singularity at 0.

    Entries n >= 2 are w_n/(x_{n-1} + x_k); the first column carries the
    exact kernel head M(x_k, delta) minus the left-endpoint sum it replaces,
    so that each row sums to M(x_k, delta).
    """
    xk = d.nodes[1:]
    left = d.nodes[:-1]
    block = weights[None, :] / (left[None, :] + xk[:, None])
    block[:, 0] = heads - block[:, 1:].sum(axis=1)
    return block


def _regular_block(d: Discretization, weights: np.ndarray) -> np.ndarray:
    """Block R(delta): regular kernel 1/(1 + y x)."""
    xk = d.nodes[1:]
    left = d.nodes[:-1]
    return weights[None, :] / (1.0 + left[None, :] * xk[:, None])


def assemble_matrix(d: Discretization, p: DerivedParams, sign: int) -> np.ndarray:
    """Assemble the dense ``4N x 4N`` collocation matrix for one sign variant.

    Parameters
    ----------
    d : Discretization
    p : DerivedParams
    sign : int
        +1 or -1; flips the diagonal blocks only.

    Returns
    -------
    ndarray of complex, shape (4N, 4N)
    """
    if sign not in (1, -1):
        raise ConfigError(f"sign variant must be +1 or -1, got {sign}")
    # the assembly relies on the family pairing of the exponents
    assert p.delta2_minus == p.delta1_plus and p.delta2_plus == p.delta1_minus
    n = d.n
    xk = d.nodes[1:]
    log_xk = np.log(xk)
    arg_minus = p.sigma - 1j / np.pi * log_xk
    arg_plus = p.sigma + 1j / np.pi * log_xk
    osc_minus = np.exp(1j * p.delta1_minus * log_xk)
    osc_plus = np.exp(1j * p.delta1_plus * log_xk)
    scale = sign * 2j * np.pi
    diag1 = scale * osc_minus / kernel_g(2, arg_minus, p)
    diag2 = scale * osc_plus / kernel_g(2, arg_plus, p)
    diag3 = scale * osc_plus / kernel_g(1, arg_minus, p)
    diag4 = scale * osc_minus / kernel_g(1, arg_plus, p)
    s_plus = _singular_block(d, d.w_plus, d.m_plus)
    s_minus = _singular_block(d, d.w_minus, d.m_minus)
    r_plus = _regular_block(d, d.w_plus)
    r_minus = _regular_block(d, d.w_minus)
    a = np.zeros((4 * n, 4 * n), dtype=complex)
    rows = [slice(0, n), slice(n, 2 * n), slice(2 * n, 3 * n), slice(3 * n, 4 * n)]
    a[rows[0], rows[0]] = np.diag(diag1)
    a[rows[0], rows[2]] = s_plus
    a[rows[0], rows[3]] = r_minus
    a[rows[1], rows[1]] = np.diag(diag2)
    a[rows[1], rows[2]] = r_plus
    a[rows[1], rows[3]] = s_minus
    a[rows[2], rows[0]] = s_minus
    a[rows[2], rows[1]] = r_plus
    a[rows[2], rows[2]] = np.diag(diag3)
    a[rows[3], rows[0]] = r_minus
    a[rows[3], rows[1]] = s_plus
    a[rows[3], rows[3]] = np.diag(diag4)
    return a


def assemble_rhs(d: Discretization, p: DerivedParams, sign: int, m: int) -> np.ndarray:
    """Forcing vector for load component m in {1, 2} and one sign variant.

    Only the two equation groups belonging to component m are forced:
    rows of the first family get ``-sign * f(x_k)`` and rows of the second
    family ``+sign * conj(f(x_k))``.
    """
    if sign not in (1, -1):
        raise ConfigError(f"sign variant must be +1 or -1, got {sign}")
    if m not in (1, 2):
        raise ConfigError(f"load component m must be 1 or 2, got {m}")
    n = d.n
    f = rhs_f(d.nodes[1:], p.sigma)
    rhs = np.zeros(4 * n, dtype=complex)
    offset = 0 if m == 1 else 2 * n
    rhs[offset:offset + n] = -sign * f
    rhs[offset + n:offset + 2 * n] = sign * np.conj(f)
    return rhs


def lu_solve(matrix: np.ndarray, rhs_columns: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Solve one matrix against several right-hand sides.

    Factorizes once (dense LU with partial pivoting) and back-substitutes
    each column.  Raises :class:`SingularMatrixError` when the factorization
    is unusable.
    """
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", sla.LinAlgWarning)
            factor = sla.lu_factor(matrix)
    except sla.LinAlgError as exc:  # pragma: no cover - scipy raises rarely
        raise SingularMatrixError(str(exc)) from exc
    lu, _ = factor
    pivot_min = np.abs(np.diag(lu)).min()
    if not np.isfinite(pivot_min) or pivot_min < 1e-300:
        raise SingularMatrixError(
            f"collocation matrix numerically singular (min pivot {pivot_min:.3e})"
        )
    solutions = []
    for rhs in rhs_columns:
        x = sla.lu_solve(factor, rhs)
        if not np.all(np.isfinite(x)):
            raise SingularMatrixError("non-finite entries in solution vector")
        solutions.append(x)
    return solutions


@dataclass(frozen=True)
class SolutionBlock:
    """One solved unknown set: the four density vectors of length N."""

    f1_minus: np.ndarray
    f1_plus: np.ndarray
    f2_minus: np.ndarray
    f2_plus: np.ndarray


@dataclass(frozen=True)
class SIESolution:
    """Solutions of both sign variants for both load components.

    ``blocks`` maps (sign, m) with sign in {+1, -1} and m in {1, 2} to a
    :class:`SolutionBlock`; ``residuals`` holds the relative infinity-norm
    residual of each solve.
    """

    params: DerivedParams
    disc: Discretization
    blocks: dict
    residuals: dict


def solve_system(
    config: MaterialConfig,
    n: int = 100,
    sigma_fraction: float = 0.25,
) -> SIESolution:
    """Assemble and solve the collocation system end to end.

    Both sign variants are assembled and factorized independently; each
    factorization is reused for the two load components.

    Returns
    -------
    SIESolution
    """
    p = derive_params(config, sigma_fraction)
    d = build_grid(n, p)
    blocks: dict = {}
    residuals: dict = {}
    for sign in (1, -1):
        a = assemble_matrix(d, p, sign)
        rhs_list = [assemble_rhs(d, p, sign, m) for m in (1, 2)]
        sols = lu_solve(a, rhs_list)
        for m, f in zip((1, 2), sols):
            rhs = rhs_list[m - 1]
            res = np.abs(a @ f - rhs).max() / np.abs(rhs).max()
            blocks[(sign, m)] = SolutionBlock(
                f1_minus=f[0:n],
                f1_plus=f[n:2 * n],
                f2_minus=f[2 * n:3 * n],
                f2_plus=f[3 * n:4 * n],
            )
            residuals[(sign, m)] = float(res)
    return SIESolution(params=p, disc=d, blocks=blocks, residuals=residuals)
