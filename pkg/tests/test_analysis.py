"""Forbidden lambda windows, pole scans, midpoints and delay curves."""

from __future__ import annotations

import math

import numpy as np
import pytest

from glkinks.analysis import (
    delay_curve,
    lambda_forbidden_interval,
    singularity_scan,
    switching_midpoint,
)
from glkinks.errors import NoCrossing, NonPositiveRate
from glkinks.figures import FIGURES
from glkinks.kinks import (
    driven_solution,
    lambda_driven_solution,
    lambda_zero_field_solution,
    undriven_solution,
)
from glkinks.model import ModelParams, driven_setup

_FORBIDDEN_BOUNDS = {
    1: 0.12359503110847067,
    2: -0.14625445083941097,
    3: 0.76934858053138011,
    4: 0.52966127768124693,
}

_MIDPOINT_INF = {
    1: (-0.28961592980266149, 1e-9),
    2: (0.342712958, 1e-6),
    3: (-0.870829202, 1e-6),
    4: (-0.599526040, 1e-6),
}

_FIG1_MIDPOINTS = {
    0.125: -2.16495034870099,
    0.2: -0.69167861242127926,
    0.5: -0.40825490062367509,
    10.0: -0.2948122480823574,
}


def _setup_for(fig_id):
    spec = FIGURES[fig_id]
    return spec, driven_setup(spec.a1, spec.b1, spec.epsilon)


def _closed_form_midpoint(setup, case, branch, lam, xi0=0.0):
    """Midpoint crossing from the Moebius coefficients directly."""
    r = setup.rate(case)
    sb = math.sqrt(setup.b1)
    if branch == "+":
        u_mid = (2.0 * lam * r - sb) / (4.0 * lam * r)
        rate = r / math.sqrt(2.0)
    else:
        u_mid = lam * r / (2.0 * lam * r + sb)
        rate = -r / math.sqrt(2.0)
    return xi0 + math.log(u_mid) / rate


@pytest.mark.parametrize("fig_id", sorted(_FORBIDDEN_BOUNDS))
def test_forbidden_interval_reference_bounds(fig_id):
    spec, setup = _setup_for(fig_id)
    domain = lambda_forbidden_interval(setup, spec.case, spec.branch)
    assert domain.bound_value == pytest.approx(_FORBIDDEN_BOUNDS[fig_id], rel=1e-13)
    assert domain.family == f"lambda-{spec.case}{spec.branch}"
    forbidden = domain.forbidden
    bound = domain.bound_value
    assert forbidden.contains(bound)
    assert not forbidden.contains(0.0)
    assert forbidden.contains(bound * 0.5)
    assert not forbidden.contains(bound * 1.01)
    assert not forbidden.contains(-bound)
    if bound > 0.0:
        assert forbidden.lower == 0.0 and forbidden.lower_open
        assert forbidden.upper == bound and not forbidden.upper_open
    else:
        assert forbidden.lower == bound and not forbidden.lower_open
        assert forbidden.upper == 0.0 and forbidden.upper_open


def test_forbidden_interval_degenerate_root():
    setup = driven_setup(3.0, 1.0, 1.0)  # r_minus == 0 exactly
    assert setup.r_minus == 0.0
    with pytest.raises(NonPositiveRate):
        lambda_forbidden_interval(setup, "II", "+")
    domain = lambda_forbidden_interval(setup, "I", "+")
    assert domain.bound_value == pytest.approx(0.5 / setup.r_plus, rel=1e-14)


def test_singularity_scan_matches_constructor_poles():
    params = ModelParams(1.0, 1.0)
    _, setup = _setup_for(1)
    poled = [
        undriven_solution(params, 3),
        undriven_solution(params, 4),
        lambda_zero_field_solution(params, "+", "first", 1.0),
        lambda_driven_solution(setup, "I", "+", 0.05),
    ]
    for sol in poled:
        found = singularity_scan(sol)
        assert len(found) == len(sol.singularities) == 1
        assert found[0] == pytest.approx(sol.singularities[0], abs=1e-8)


def test_singularity_scan_smooth_and_out_of_range():
    params = ModelParams(1.0, 1.0)
    assert singularity_scan(undriven_solution(params, 1)) == ()
    poled = undriven_solution(params, 3)
    assert singularity_scan(poled, xi_range=(1.0, 5.0)) == ()


def test_switching_midpoint_basic_kink():
    sol = undriven_solution(ModelParams(1.0, 1.0), 1)
    crossing = switching_midpoint(sol)
    assert crossing.xi_mid == pytest.approx(0.0, abs=1e-9)
    assert crossing.n_crossings == 1
    assert not crossing.multiple


def test_switching_midpoint_no_crossing_cases():
    constant = lambda_zero_field_solution(ModelParams(4.0, 1.0), "-", "first", 0.5)
    with pytest.raises(NoCrossing):
        switching_midpoint(constant)
    poled = undriven_solution(ModelParams(1.0, 1.0), 3)
    # the midpoint level lies between the branches, never on the profile
    with pytest.raises(NoCrossing):
        switching_midpoint(poled)


@pytest.mark.parametrize("fig_id", sorted(FIGURES))
def test_switching_midpoint_matches_closed_form(fig_id):
    spec, setup = _setup_for(fig_id)
    for lam_str in spec.lambdas:
        lam = float(lam_str)
        sol = lambda_driven_solution(setup, spec.case, spec.branch, lam)
        expected = _closed_form_midpoint(setup, spec.case, spec.branch, lam)
        assert switching_midpoint(sol).xi_mid == pytest.approx(expected, abs=1e-8)


def test_fig1_midpoint_reference_values():
    spec, setup = _setup_for(1)
    for lam, expected in _FIG1_MIDPOINTS.items():
        sol = lambda_driven_solution(setup, spec.case, spec.branch, lam)
        assert switching_midpoint(sol).xi_mid == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("fig_id", sorted(_MIDPOINT_INF))
def test_particular_midpoint_reference_values(fig_id):
    spec, setup = _setup_for(fig_id)
    expected, tol = _MIDPOINT_INF[fig_id]
    sol = driven_solution(setup, spec.case, spec.branch)
    assert switching_midpoint(sol).xi_mid == pytest.approx(expected, abs=tol)


def test_fig4_outlier_midpoint():
    spec, setup = _setup_for(4)
    sol = lambda_driven_solution(setup, spec.case, spec.branch, 0.53)
    assert switching_midpoint(sol).xi_mid == pytest.approx(5.762449, abs=1e-5)


def test_delay_curve_fig1_regression():
    spec, setup = _setup_for(1)
    lams = tuple(float(s) for s in spec.lambdas)
    curve = delay_curve(
        lambda lam: lambda_driven_solution(setup, spec.case, spec.branch, lam),
        lams,
        driven_solution(setup, spec.case, spec.branch),
    )
    assert curve.lambdas == lams
    assert curve.multiplicities == (1, 1, 1, 1)
    assert curve.midpoint_inf == pytest.approx(_MIDPOINT_INF[1][0], abs=1e-9)
    for lam, mid in zip(curve.lambdas, curve.midpoints):
        assert mid == pytest.approx(_FIG1_MIDPOINTS[lam], abs=1e-9)
    offsets = [abs(m - curve.midpoint_inf) for m in curve.midpoints]
    assert offsets == sorted(offsets, reverse=True)


def test_delay_curve_input_validation():
    spec, setup = _setup_for(1)
    make = lambda lam: lambda_driven_solution(setup, spec.case, spec.branch, lam)
    particular = driven_solution(setup, spec.case, spec.branch)
    with pytest.raises(ValueError):
        delay_curve(make, (), particular)
    with pytest.raises(ValueError):
        delay_curve(make, (1.0, 1.0), particular)
    with pytest.raises(ValueError):
        delay_curve(make, (2.0, 1.0), particular)
