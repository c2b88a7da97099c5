"""Numerical verification of closed-form profiles.

Two independent checks are provided.  residual() substitutes a profile into
the traveling-wave equation

    psi'' + rho*psi' - b1*psi^3 + a1*psi + drive = 0

using either the exact Moebius derivatives or centered finite differences.
integrate_second_order() solves the same equation as an initial value
problem with classical fixed-step RK4 so a profile can be compared against
an integration that never saw the closed form; integrate_riccati() does the
same for the first-order equation y' = c1*y^2 + c2*y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainMismatch, EmptyGrid, NonFinite
from .kinks import KinkSolution
from .model import ModelParams

_FD_STEP = 1e-4
_BLOWUP = 1e12


@dataclass(frozen=True)
class ResidualReport:
    """Largest equation defect over a grid.

    grid records (lo, hi, n) of the points actually offered; skipped counts
    the ones dropped for sitting within tolerance of a pole.
    """

    max_abs_residual: float
    argmax_xi: float
    grid: tuple[float, float, int]
    derivative_mode: str
    skipped: int = 0


@dataclass(frozen=True)
class Trajectory:
    """Fixed-step integration output; step is signed by direction."""

    xi_values: np.ndarray
    psi_values: np.ndarray
    dpsi_values: np.ndarray
    step: float


def verification_grid(
    solution: KinkSolution,
    widths: float = 40.0,
    n: int = 4001,
    margin_widths: float = 2.0,
) -> np.ndarray:
    """Grid of n points spanning +-widths kink widths around xi0.

    Points closer than margin_widths widths to any pole are removed, so
    the grid is safe for both derivative modes.
    """
    w = 1.0 / solution.width_inverse if solution.width_inverse > 0.0 else 1.0
    xi = solution.xi0 + np.linspace(-widths * w, widths * w, int(n))
    keep = np.ones(xi.size, dtype=bool)
    for pole in solution.singularities:
        keep &= np.abs(xi - pole) > margin_widths * w
    return xi[keep]


def _as_grid(solution: KinkSolution, grid) -> np.ndarray:
    if grid is None:
        return verification_grid(solution)
    if isinstance(grid, (tuple, list)) and len(grid) == 3:
        lo, hi, n = grid
        return np.linspace(float(lo), float(hi), int(n))
    return np.asarray(grid, dtype=float).ravel()


def residual(
    solution: KinkSolution,
    rho: float | None = None,
    eta_gamma: float | None = None,
    grid=None,
    mode: str = "analytic",
) -> ResidualReport:
    """Maximum defect of the profile in the traveling-wave equation.

    rho and eta_gamma default to the values the solution was built for;
    passing others measures how badly the profile fails elsewhere.  grid
    is a (lo, hi, n) triple, an array of points, or None for the default
    pole-aware grid.  mode "analytic" uses exact derivatives, "fd" centered
    differences with step 1e-4 (noise floor near 5e-7).
    """
    if mode not in ("analytic", "fd"):
        raise ValueError(f"mode must be 'analytic' or 'fd', got {mode!r}")
    rho_val = solution.forced_rho if rho is None else float(rho)
    drive = solution.eta_gamma if eta_gamma is None else float(eta_gamma)
    xi = _as_grid(solution, grid)
    if xi.size == 0:
        raise EmptyGrid("no grid points supplied")
    sing = solution.profile.is_singular(xi)
    skipped = int(np.count_nonzero(sing))
    xi_ok = xi[~sing]
    if xi_ok.size == 0:
        raise EmptyGrid("every grid point sits on a pole")

    p = solution.profile
    psi = p.value(xi_ok)
    if mode == "analytic":
        d1 = p.first_derivative(xi_ok)
        d2 = p.second_derivative(xi_ok)
    else:
        h = _FD_STEP
        up = p.value(xi_ok + h)
        dn = p.value(xi_ok - h)
        d1 = (up - dn) / (2.0 * h)
        d2 = (up - 2.0 * psi + dn) / (h * h)

    a1 = solution.params.a1
    b1 = solution.params.b1
    res = d2 + rho_val * d1 - b1 * psi**3 + a1 * psi + drive
    k = int(np.argmax(np.abs(res)))
    return ResidualReport(
        max_abs_residual=float(abs(res[k])),
        argmax_xi=float(xi_ok[k]),
        grid=(float(xi.min()), float(xi.max()), int(xi.size)),
        derivative_mode=mode,
        skipped=skipped,
    )


def _rk4_span(xi_span, step):
    lo, hi = (float(xi_span[0]), float(xi_span[1]))
    if step <= 0.0:
        raise ValueError("step must be positive")
    if hi == lo:
        raise ValueError("empty integration span")
    n = max(1, int(round(abs(hi - lo) / step)))
    h = (hi - lo) / n
    return lo, hi, n, h


def integrate_second_order(
    params: ModelParams, psi0: float, dpsi0: float, xi_span, step: float
) -> Trajectory:
    """Classical RK4 for psi'' = -rho*psi' + b1*psi^3 - a1*psi - drive.

    xi_span may run in either direction; the stored step is signed
    accordingly.  Raises NonFinite (carrying the partial trajectory) if the
    state blows up, which happens quickly when integrating against the
    stable direction of a kink tail.
    """
    lo, hi, n, h = _rk4_span(xi_span, step)
    a1, b1, rho, drive = params.a1, params.b1, params.rho, params.drive

    def acc(y, v):
        return -rho * v + b1 * y * y * y - a1 * y - drive

    xs = lo + h * np.arange(n + 1)
    ys = np.empty(n + 1)
    vs = np.empty(n + 1)
    y, v = float(psi0), float(dpsi0)
    ys[0], vs[0] = y, v
    for i in range(n):
        k1y = v
        k1v = acc(y, v)
        k2y = v + 0.5 * h * k1v
        k2v = acc(y + 0.5 * h * k1y, k2y)
        k3y = v + 0.5 * h * k2v
        k3v = acc(y + 0.5 * h * k2y, k3y)
        k4y = v + h * k3v
        k4v = acc(y + h * k3y, k4y)
        y += h * (k1y + 2.0 * k2y + 2.0 * k3y + k4y) / 6.0
        v += h * (k1v + 2.0 * k2v + 2.0 * k3v + k4v) / 6.0
        if not (math.isfinite(y) and math.isfinite(v)) or abs(y) > _BLOWUP or abs(v) > _BLOWUP:
            partial = Trajectory(xs[: i + 1], ys[: i + 1].copy(), vs[: i + 1].copy(), h)
            raise NonFinite(
                f"integration blew up at xi={xs[i + 1]}", xi=float(xs[i + 1]), trajectory=partial
            )
        ys[i + 1], vs[i + 1] = y, v
    return Trajectory(xs, ys, vs, h)


def integrate_riccati(c1: float, c2: float, y0: float, xi_span, step: float) -> Trajectory:
    """Classical RK4 for y' = c1*y^2 + c2*y; dpsi_values holds the slopes."""
    lo, hi, n, h = _rk4_span(xi_span, step)

    def slope(y):
        return c1 * y * y + c2 * y

    xs = lo + h * np.arange(n + 1)
    ys = np.empty(n + 1)
    ds = np.empty(n + 1)
    y = float(y0)
    ys[0], ds[0] = y, slope(y)
    for i in range(n):
        k1 = slope(y)
        k2 = slope(y + 0.5 * h * k1)
        k3 = slope(y + 0.5 * h * k2)
        k4 = slope(y + h * k3)
        y += h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
        if not math.isfinite(y) or abs(y) > _BLOWUP:
            partial = Trajectory(xs[: i + 1], ys[: i + 1].copy(), ds[: i + 1].copy(), h)
            raise NonFinite(
                f"integration blew up at xi={xs[i + 1]}", xi=float(xs[i + 1]), trajectory=partial
            )
        ys[i + 1], ds[i + 1] = y, slope(y)
    return Trajectory(xs, ys, ds, h)


def compare(traj: Trajectory, solution: KinkSolution) -> float:
    """Sup-norm distance between a trajectory and a closed-form profile."""
    xi = traj.xi_values
    bad = solution.profile.is_singular(xi)
    if np.any(bad):
        offender = float(xi[np.argmax(bad)])
        raise DomainMismatch(
            f"trajectory crosses a pole of {solution.family} near xi={offender}"
        )
    return float(np.max(np.abs(traj.psi_values - solution.profile.value(xi))))
