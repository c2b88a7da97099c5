"""Qualitative analysis of lambda families: forbidden windows, poles, delays.

The free constant lambda of a general Riccati solution deforms a kink
without changing its speed; the visible effect is a shift of the switching
midpoint.  For each driven family a window of lambda values produces a pole
instead of a kink.  This module computes that window in closed form,
locates poles and midpoints empirically by bisection, and assembles the
midpoint-versus-lambda delay curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import NoCrossing, NonPositiveRate
from .kinks import KinkSolution
from .model import AdmissibleRange, DrivenSetup, _as_case, _as_sign

_SCAN_POINTS = 10_001
_BISECT_TOL = 1e-10


@dataclass(frozen=True)
class LambdaDomain:
    """Forbidden lambda window of one driven family.

    bound_value is the signed endpoint sign(branch)*sqrt(b1)/(2r); the
    window always has 0 as its open end and the bound as its closed end,
    on whichever side of 0 the bound falls.
    """

    family: str
    forbidden: AdmissibleRange
    bound_value: float


def lambda_forbidden_interval(setup: DrivenSetup, case: str, branch) -> LambdaDomain:
    """Closed-form forbidden lambda window for one case and branch.

    Lambda values strictly between 0 and the bound (bound included) put a
    pole on the real axis; everything else, lambda = 0 excluded, gives a
    smooth kink.  Raises NonPositiveRate if the case's root vanishes, since
    then the family itself degenerates.
    """
    c = _as_case(case)
    s = _as_sign(branch)
    r = setup.rate(c)
    if r == 0.0:
        raise NonPositiveRate(f"case {c} root vanishes, no lambda family exists")
    bound = s * math.sqrt(setup.b1) / (2.0 * r)
    if bound > 0.0:
        forbidden = AdmissibleRange(0.0, bound, lower_open=True, upper_open=False)
    else:
        forbidden = AdmissibleRange(bound, 0.0, lower_open=False, upper_open=True)
    tag = "+" if s > 0 else "-"
    return LambdaDomain(family=f"lambda-{c}{tag}", forbidden=forbidden, bound_value=bound)


def _denominator(solution: KinkSolution, xi: np.ndarray) -> np.ndarray:
    # same piecewise-scaled denominator the profile evaluates with; the
    # scaling exp(-|z|) is positive, so sign changes are preserved
    _, _, _, den = solution.profile._pieces(xi)
    return den


def _default_range(solution: KinkSolution) -> tuple[float, float]:
    w = 1.0 / solution.width_inverse if solution.width_inverse > 0.0 else 1.0
    return (solution.xi0 - 40.0 * w, solution.xi0 + 40.0 * w)


def _bisect(f, lo: float, hi: float, tol: float = _BISECT_TOL) -> float:
    flo = f(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo < tol:
            return mid
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) != (fmid < 0.0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def singularity_scan(solution: KinkSolution, xi_range=None) -> tuple[float, ...]:
    """Locate profile poles by denominator sign changes, without the closed form.

    Scans a dense grid over xi_range (default +-40 widths around xi0) and
    refines each sign change by bisection to 1e-10.  Cross-checks the
    singularities the constructor reported.
    """
    lo, hi = xi_range if xi_range is not None else _default_range(solution)
    xi = np.linspace(float(lo), float(hi), _SCAN_POINTS)
    den = _denominator(solution, xi)
    sgn = np.sign(den)
    flips = np.nonzero(sgn[:-1] * sgn[1:] < 0.0)[0]
    exact = np.nonzero(sgn == 0.0)[0]

    def f(x):
        return float(_denominator(solution, np.asarray([x]))[0])

    found = [float(xi[i]) for i in exact]
    for i in flips:
        found.append(_bisect(f, float(xi[i]), float(xi[i + 1])))
    return tuple(sorted(found))


@dataclass(frozen=True)
class MidpointCrossing:
    """Where a profile crosses the midpoint of its two asymptotic levels."""

    xi_mid: float
    n_crossings: int

    @property
    def multiple(self) -> bool:
        return self.n_crossings > 1


def switching_midpoint(solution: KinkSolution, xi_range=None) -> MidpointCrossing:
    """Largest crossing of the level halfway between the two asymptotics.

    Sign changes across a pole are jumps, not crossings, and are discarded.
    Raises NoCrossing when the limits coincide or no crossing lies in range.
    """
    left, right = solution.left_limit, solution.right_limit
    if not (math.isfinite(left) and math.isfinite(right)) or left == right:
        raise NoCrossing(f"{solution.family} has no distinct finite asymptotic levels")
    level = 0.5 * (left + right)
    lo, hi = xi_range if xi_range is not None else _default_range(solution)
    xi = np.linspace(float(lo), float(hi), _SCAN_POINTS)
    vals = solution.profile.value(xi) - level
    sgn = np.sign(vals)
    flips = np.nonzero(sgn[:-1] * sgn[1:] < 0.0)[0]
    exact = np.nonzero(sgn == 0.0)[0]

    def f(x):
        return float(solution.profile.value(np.asarray([x]))[0]) - level

    crossings = [float(xi[i]) for i in exact]
    for i in flips:
        a, b = float(xi[i]), float(xi[i + 1])
        # a pole on either endpoint makes the flip a jump as well
        if any(a <= pole <= b for pole in solution.singularities):
            continue
        crossings.append(_bisect(f, a, b))
    if not crossings:
        raise NoCrossing(f"{solution.family} never reaches its midpoint level in range")
    return MidpointCrossing(xi_mid=max(crossings), n_crossings=len(crossings))


@dataclass(frozen=True)
class DelayCurve:
    """Midpoint position per lambda, with the lambda -> inf reference."""

    lambdas: tuple[float, ...]
    midpoints: tuple[float, ...]
    midpoint_inf: float
    multiplicities: tuple[int, ...]


def delay_curve(
    make_solution: Callable[[float], KinkSolution],
    lambdas: Iterable[float],
    particular: KinkSolution,
) -> DelayCurve:
    """Midpoint shift of a lambda family against its particular kink.

    make_solution maps a lambda value to the family member; particular is
    the lambda -> inf profile whose midpoint anchors the curve.  lambdas
    must be strictly increasing.
    """
    lams = tuple(float(x) for x in lambdas)
    if len(lams) == 0:
        raise ValueError("no lambda values supplied")
    if any(b <= a for a, b in zip(lams, lams[1:])):
        raise ValueError("lambda values must be strictly increasing")
    ref = switching_midpoint(particular).xi_mid
    mids = []
    counts = []
    for lam in lams:
        crossing = switching_midpoint(make_solution(lam))
        mids.append(crossing.xi_mid)
        counts.append(crossing.n_crossings)
    return DelayCurve(
        lambdas=lams,
        midpoints=tuple(mids),
        midpoint_inf=ref,
        multiplicities=tuple(counts),
    )
