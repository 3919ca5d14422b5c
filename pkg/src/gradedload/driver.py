"""End-to-end case orchestration: solve, evaluate points, sweep, export.

``solve_case`` runs the whole chain (derived parameters, collocation solve,
boundary functionals, load constants) once per configuration;
``evaluate_point`` picks the expansion valid at a query point and assembles
a :class:`~gradedload.fields.FieldResult`.  ``run_sweep`` repeats a case
over a grading or speed grid and renders deterministic CSV rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .errors import ConfigError, ExpansionRangeError, GradedLoadError
from .fields import (
    BoundaryConstants,
    FieldCoefficients,
    FieldResult,
    _derivative_large_complex,
    _derivative_small_complex,
    _displacement_complex,
    _project,
    _stress_complex,
    boundary_phi,
    constants_c,
    field_coeffs,
)
from .params import DerivedParams, MaterialConfig
from .system import SIESolution, solve_system

__all__ = [
    "RunConfig",
    "CaseSolution",
    "CaseReport",
    "solve_case",
    "evaluate_point",
    "run_case",
    "run_sweep",
    "format_report",
    "csv_text",
    "write_csv",
]

_SWEEP_KINDS = ("nu", "speed")


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs.

    ``points`` are (xi, y) query pairs.  For sweeps, ``sweep`` is "nu" or
    "speed" and ``sweep_range`` is (start, stop, step) inclusive of the
    endpoint up to half a step.
    """

    material: MaterialConfig = field(default_factory=MaterialConfig)
    n: int = 100
    sigma_fraction: float = 0.25
    points: tuple = ((-1.0, 0.0),)
    sweep: str | None = None
    sweep_range: tuple | None = None
    out: str | None = None
    eta_max: float = 1.0
    eta_min: float = 2.0

    def __post_init__(self) -> None:
        if self.sweep is not None:
            if self.sweep not in _SWEEP_KINDS:
                raise ConfigError(
                    f"sweep must be one of {_SWEEP_KINDS}, got {self.sweep!r}"
                )
            if self.sweep_range is None:
                raise ConfigError("sweep requested without a sweep range")
            start, stop, step = self.sweep_range
            if step <= 0:
                raise ConfigError(
                    f"sweep step must be positive, got {self.sweep_range}"
                )
            # stop < start is allowed and means an empty sweep; nonempty
            # ranges must stay inside the open (0, 1) validity gate shared
            # by both sweep axes.
            if start <= stop and not (0.0 < start and stop < 1.0):
                raise ConfigError(
                    f"{self.sweep} sweep values must lie in (0, 1), got {self.sweep_range}"
                )
        if not self.points:
            raise ConfigError("at least one query point is required")
        if not (0.0 < self.eta_max < self.eta_min):
            raise ConfigError(
                f"need 0 < eta_max < eta_min, got {self.eta_max}, {self.eta_min}"
            )


@dataclass(frozen=True)
class CaseSolution:
    """Solved configuration with its boundary constants."""

    config: MaterialConfig
    params: DerivedParams
    solution: SIESolution
    constants: BoundaryConstants

    def coefficients(self, kappa: float) -> FieldCoefficients:
        return field_coeffs(self.constants, self.params, kappa)


@dataclass(frozen=True)
class CaseReport:
    """A solved case together with the evaluated query points."""

    case: CaseSolution
    results: tuple


def solve_case(
    material: MaterialConfig,
    n: int = 100,
    sigma_fraction: float = 0.25,
) -> CaseSolution:
    """Run the solve chain for one configuration."""
    solution = solve_system(material, n=n, sigma_fraction=sigma_fraction)
    phi = boundary_phi(solution)
    constants = constants_c(phi, material, solution.params)
    return CaseSolution(
        config=material,
        params=solution.params,
        solution=solution,
        constants=constants,
    )


def evaluate_point(
    case: CaseSolution,
    xi: float,
    y: float,
    eta_max: float = 1.0,
    eta_min: float = 2.0,
) -> FieldResult:
    """Evaluate displacements, derivatives and stresses at one point.

    Chooses the near-surface expansion for eta <= eta_max and the deep one
    for eta >= eta_min; the gap in between has no valid expansion and
    raises :class:`ExpansionRangeError`.
    """
    p = case.params
    xi0 = case.config.xi0
    if y < 0.0:
        raise ConfigError(f"depth coordinate y must be >= 0, got {y}")
    dist = abs(xi - xi0)
    if dist == 0.0:
        from .errors import SingularPointError

        raise SingularPointError("field expansions diverge at the load point xi = xi0")
    eta = y / dist
    kappa = math.copysign(1.0, xi0 - xi)
    coeffs = case.coefficients(kappa)
    if eta <= eta_max:
        u1c, u2c = _displacement_complex(coeffs, xi, xi0, y, p)
        du1c, du2c = _derivative_small_complex(coeffs, xi, xi0, y, p)
        if y == 0.0:
            s12c, s22c = 0.0j, 0.0j
        else:
            s12c, s22c = _stress_complex(coeffs, xi, xi0, y, p)
        u_scale = max(abs(u1c), abs(u2c))
        du_scale = max(abs(du1c), abs(du2c))
        s_scale = max(abs(s12c), abs(s22c))
        u1, r1 = _project(u1c, u_scale)
        u2, r2 = _project(u2c, u_scale)
        du1, r3 = _project(du1c, du_scale)
        du2, r4 = _project(du2c, du_scale)
        s12, r5 = _project(s12c, s_scale)
        s22, r6 = _project(s22c, s_scale)
        return FieldResult(
            xi=xi, y=y, eta=eta, expansion="near",
            u1=u1, u2=u2, du1_dxi=du1, du2_dxi=du2, s12=s12, s22=s22,
            imag_residue=max(r1, r2, r3, r4, r5, r6),
        )
    if eta >= eta_min:
        du1c, du2c = _derivative_large_complex(coeffs, xi, xi0, y, p)
        du_scale = max(abs(du1c), abs(du2c))
        du1, r1 = _project(du1c, du_scale)
        du2, r2 = _project(du2c, du_scale)
        return FieldResult(
            xi=xi, y=y, eta=eta, expansion="deep",
            u1=None, u2=None, du1_dxi=du1, du2_dxi=du2, s12=None, s22=None,
            imag_residue=max(r1, r2),
        )
    raise ExpansionRangeError(
        f"eta = {eta:.3f} falls between the near range (<= {eta_max}) "
        f"and the deep range (>= {eta_min})"
    )


def run_case(rc: RunConfig) -> CaseReport:
    """Solve a configuration and evaluate every query point.

    Points falling between the two expansion ranges are reported as
    "out-of-range" rather than failing the whole run.
    """
    case = solve_case(rc.material, n=rc.n, sigma_fraction=rc.sigma_fraction)
    results = []
    for xi, y in rc.points:
        try:
            res = evaluate_point(case, xi, y, eta_max=rc.eta_max, eta_min=rc.eta_min)
        except ExpansionRangeError:
            eta = y / abs(xi - case.config.xi0)
            res = FieldResult(
                xi=xi, y=y, eta=eta, expansion="out-of-range",
                u1=None, u2=None, du1_dxi=None, du2_dxi=None,
                s12=None, s22=None, imag_residue=0.0,
            )
        results.append(res)
    return CaseReport(case=case, results=tuple(results))


def _fmt(value: float) -> str:
    return f"{value:.10g}"


def _fmtc(value: complex) -> str:
    return f"{value.real:.10g}{value.imag:+.10g}j"


def format_report(report: CaseReport) -> str:
    """Render a case report as a fixed-layout text block."""
    case = report.case
    cfg = case.config
    p = case.params
    bc = case.constants
    lines = []
    lines.append(
        "config: nu={} nu_p={} speed_ratio={} h1={} h2={} xi0={}".format(
            *map(_fmt, (cfg.nu, cfg.nu_p, cfg.speed_ratio, cfg.h1, cfg.h2, cfg.xi0))
        )
    )
    lines.append(
        "derived: a_s={} a_d={} beta1={} beta2={} eps={} l={} sigma={}".format(
            *map(_fmt, (p.a_s, p.a_d, p.beta1, p.beta2, p.eps, p.l_param, p.sigma))
        )
    )
    lines.append(f"grid: n={case.solution.disc.n}")
    lines.append(
        f"determinant: delta_plus={_fmtc(bc.delta_plus)} "
        f"delta_minus={_fmtc(bc.delta_minus)}"
    )
    for label, c in (("plus", bc.c_plus), ("minus", bc.c_minus)):
        lines.append(f"constants_{label}: c1={_fmtc(c[0])} c2={_fmtc(c[1])}")
    seen_kappa = []
    for res in report.results:
        kappa = math.copysign(1.0, case.config.xi0 - res.xi)
        if kappa not in seen_kappa:
            seen_kappa.append(kappa)
    for kappa in seen_kappa:
        co = case.coefficients(kappa)
        for j in (0, 1):
            lines.append(
                f"coeffs kappa={kappa:+.0f} j={j + 1}: "
                f"d0={_fmtc(co.d0[j])} d1={_fmtc(co.d1[j])} "
                f"d2={_fmtc(co.d2[j])} d3={_fmtc(co.d3[j])} "
                f"e0={_fmtc(co.e0[j])} e1={_fmtc(co.e1[j])}"
            )
    for res in report.results:
        parts = [
            f"point xi={_fmt(res.xi)} y={_fmt(res.y)} eta={_fmt(res.eta)} [{res.expansion}]:"
        ]
        if res.u1 is not None:
            parts.append(f"u1={_fmt(res.u1)} u2={_fmt(res.u2)}")
        if res.du1_dxi is not None:
            parts.append(f"du1_dxi={_fmt(res.du1_dxi)} du2_dxi={_fmt(res.du2_dxi)}")
        if res.s12 is not None:
            parts.append(f"s12={_fmt(res.s12)} s22={_fmt(res.s22)}")
        parts.append(f"imag_residue={res.imag_residue:.3e}")
        lines.append(" ".join(parts))
    return "\n".join(lines)


def _sweep_values(sweep_range: tuple) -> list[float]:
    # Inclusive grid; tolerate float drift of half a step at the endpoint.
    start, stop, step = sweep_range
    values = []
    k = 0
    while True:
        value = start + k * step
        if value > stop + step / 2:
            break
        values.append(value)
        k += 1
    return values


def run_sweep(rc: RunConfig) -> tuple[list[str], list[list[str]]]:
    """Sweep one parameter, evaluating the first query point per value.

    Returns the CSV header and rows (all strings, 10 significant digits).
    Numerical failures at individual sweep values are recorded in the
    ``error`` column instead of aborting; configuration errors propagate.
    If ``rc.out`` is set the table is also written there.
    """
    if rc.sweep is None:
        raise ConfigError("run_sweep called without a sweep parameter")
    xi, y = rc.points[0]
    header = [
        "sweep_value", "u1", "u2", "du1_dxi", "du2_dxi", "s12", "s22",
        "delta_re", "delta_im", "error",
    ]
    rows: list[list[str]] = []
    for value in _sweep_values(rc.sweep_range):
        if rc.sweep == "nu":
            material = replace(rc.material, nu=value)
        else:
            material = replace(rc.material, speed_ratio=value)
        try:
            case = solve_case(material, n=rc.n, sigma_fraction=rc.sigma_fraction)
            res = evaluate_point(case, xi, y, eta_max=rc.eta_max, eta_min=rc.eta_min)
        except ConfigError:
            raise
        except GradedLoadError as exc:
            rows.append([_fmt(value)] + [""] * 8 + [type(exc).__name__])
            continue
        delta = case.constants.delta_plus
        rows.append([
            _fmt(value),
            "" if res.u1 is None else _fmt(res.u1),
            "" if res.u2 is None else _fmt(res.u2),
            "" if res.du1_dxi is None else _fmt(res.du1_dxi),
            "" if res.du2_dxi is None else _fmt(res.du2_dxi),
            "" if res.s12 is None else _fmt(res.s12),
            "" if res.s22 is None else _fmt(res.s22),
            _fmt(delta.real),
            _fmt(delta.imag),
            "",
        ])
    if rc.out is not None:
        write_csv(rc.out, header, rows)
    return header, rows


def csv_text(header: list[str], rows: list[list[str]]) -> str:
    """Render a header and string rows as CSV text (CRLF line endings)."""
    import csv
    import io

    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_csv(path: str, header: list[str], rows: list[list[str]]) -> None:
    """Write a CSV table to ``path`` byte-identically to :func:`csv_text`."""
    with open(path, "w", newline="") as handle:
        handle.write(csv_text(header, rows))
