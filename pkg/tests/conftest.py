"""Shared test helpers: the full family roster and the RK4 comparison recipe."""

from __future__ import annotations

import pytest

from glkinks.analysis import switching_midpoint
from glkinks.errors import NoCrossing
from glkinks.figures import FIGURES
from glkinks.kinks import (
    KinkSolution,
    driven_solution,
    lambda_driven_solution,
    lambda_zero_field_solution,
    montroll_solution,
    undriven_solution,
)
from glkinks.model import ModelParams, driven_setup
from glkinks.verify import compare, integrate_second_order


def build_family_suite() -> list[tuple[str, KinkSolution]]:
    """Every closed-form profile the package constructs, labeled.

    Unit coefficients for the undriven and zero-field families, the four
    reference parameter sets for the driven ones, lambda in {1, 10, 100}
    zero-field and the reference lambda sets driven.
    """
    jobs = [("montroll(0,1)", montroll_solution(0.0, 1.0))]
    params = ModelParams(1.0, 1.0)
    for index in (1, 2, 3, 4):
        jobs.append((f"undriven-{index}", undriven_solution(params, index)))
    for branch in ("+", "-"):
        for variant in ("first", "second"):
            for lam in (1.0, 10.0, 100.0):
                jobs.append(
                    (
                        f"lambda-zero-field-{variant}{branch} lam={lam:g}",
                        lambda_zero_field_solution(params, branch, variant, lam),
                    )
                )
    for spec in FIGURES.values():
        setup = driven_setup(spec.a1, spec.b1, spec.epsilon)
        jobs.append(
            (
                f"driven-{spec.case}{spec.branch} fig{spec.fig_id}",
                driven_solution(setup, spec.case, spec.branch),
            )
        )
        for lam_str in spec.lambdas:
            jobs.append(
                (
                    f"lambda-{spec.case}{spec.branch} fig{spec.fig_id} lam={lam_str}",
                    lambda_driven_solution(setup, spec.case, spec.branch, float(lam_str)),
                )
            )
    return jobs


@pytest.fixture(scope="session")
def family_suite():
    return build_family_suite()


def rk4_window(sol: KinkSolution) -> tuple[float, float]:
    """A 20-width window on which RK4 can track the profile.

    Poled profiles get the window on the side of the pole whose asymptote
    is the zero equilibrium; that end is attracting in the damping
    direction, while the other end sits on a saddle whose unstable manifold
    amplifies initial-data roundoff by ~e^20 over the window.  Smooth
    profiles are centered on the switching midpoint (a near-forbidden
    lambda can push the transition many widths from xi0).
    """
    w = 1.0 / sol.width_inverse
    if sol.singularities:
        pole = sol.singularities[0]
        if abs(sol.left_limit) < abs(sol.right_limit):
            return (pole - 22.0 * w, pole - 2.0 * w)
        return (pole + 2.0 * w, pole + 22.0 * w)
    try:
        center = switching_midpoint(sol).xi_mid
    except NoCrossing:
        center = sol.xi0
    return (center - 10.0 * w, center + 10.0 * w)


def rk4_sup(sol: KinkSolution, step: float, rho_offset: float = 0.0) -> float:
    """Sup distance between a profile and RK4 started from its own data.

    Integration runs in the direction that makes the friction term
    dissipative: forward for forced_rho > 0, backward otherwise.
    """
    lo, hi = rk4_window(sol)
    start, end = (lo, hi) if sol.forced_rho > 0.0 else (hi, lo)
    params = ModelParams(
        sol.params.a1,
        sol.params.b1,
        sol.forced_rho + rho_offset,
        gamma1=1.0,
        eta=sol.eta_gamma,
    )
    traj = integrate_second_order(
        params,
        float(sol.profile.value(start)),
        float(sol.profile.first_derivative(start)),
        (start, end),
        step,
    )
    return compare(traj, sol)
