"""Command line interface.

Subcommands
-----------
families   list every family constructible from given coefficients
eval       evaluate one profile on a grid and emit CSV
figure     emit the CSV data behind one of the four reference figures
verify     run the residual and integration oracle suite
delay      emit the midpoint-versus-lambda delay curve as CSV

All output is deterministic: numbers use 17 significant digits, lines end
with a single newline, and nothing depends on time, environment or
randomness.  Exit codes: 0 success, 1 verification failure, 2 usage or
parameter error, 3 domain error (poles, forbidden lambda, no crossing).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .analysis import delay_curve, lambda_forbidden_interval
from .errors import (
    ComplexDelta,
    DomainMismatch,
    EmptyGrid,
    NoCrossing,
    NonFinite,
    NonPositiveCoefficient,
    NonPositiveRate,
    SingularPoint,
)
from .figures import FIGURES
from .kinks import (
    KinkSolution,
    driven_solution,
    lambda_driven_solution,
    lambda_zero_field_solution,
    montroll_solution,
    undriven_solution,
)
from .model import (
    ModelParams,
    driven_setup,
    epsilon_admissible_interval,
    rho_case1,
    rho_case2,
)
from .verify import compare, integrate_second_order, residual

_USAGE_ERROR = 2
_DOMAIN_ERROR = 3


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation, normalized; grid is (lo, hi, n)."""

    command: str
    a1: float | None
    b1: float | None
    epsilon: float | None
    case: str | None
    branch: str | None
    index: int | None
    variant: str | None
    lambda_list: tuple[float, ...]
    xi0: float
    grid: tuple[float, float, int]
    output_path: str | None
    family: str | None
    montroll_a: float | None
    montroll_b: float | None
    fig: int | None
    perturb_rho: float


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be lo:hi:n, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}: {exc}") from None
    if n < 2:
        raise argparse.ArgumentTypeError("grid needs n >= 2")
    if not lo < hi:
        raise argparse.ArgumentTypeError("grid needs lo < hi")
    return lo, hi, n


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glkinks",
        description="Closed-form kinks of the damped double-well equation: "
        "construction, evaluation, verification, delay curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, grid_default=None):
        p.add_argument("--a1", type=float, help="linear coefficient (> 0)")
        p.add_argument("--b1", type=float, help="cubic coefficient (> 0)")
        p.add_argument("--epsilon", type=float, help="constant-drive shift")
        p.add_argument("--case", choices=("I", "II"), help="driven factorization case")
        p.add_argument("--branch", choices=("+", "-"), help="front sign / lambda branch")
        p.add_argument("--index", type=int, help="basic kink index 1..4")
        p.add_argument("--variant", choices=("first", "second"), help="zero-field lambda variant")
        p.add_argument(
            "--lambda",
            dest="lambda_list",
            type=float,
            action="append",
            default=[],
            metavar="LAM",
            help="Riccati parameter (repeatable)",
        )
        p.add_argument("--xi0", type=float, default=0.0, help="profile center (default 0)")
        p.add_argument(
            "--grid",
            type=_parse_grid,
            default=grid_default,
            metavar="LO:HI:N",
            help="evaluation grid",
        )
        p.add_argument("--out", dest="output_path", help="output file (or directory for figure)")
        p.add_argument("--family", help="family tag; inferred from flags when omitted")
        p.add_argument("--montroll-a", type=float, help="first cubic root for the unit kink")
        p.add_argument("--montroll-b", type=float, help="second cubic root for the unit kink")
        p.add_argument("--fig", type=int, help="reference figure id 1..4")

    p_families = sub.add_parser("families", help="list constructible families")
    add_common(p_families)
    p_families.set_defaults(func=cmd_families)

    p_eval = sub.add_parser("eval", help="evaluate one profile on a grid as CSV")
    add_common(p_eval, grid_default=(-15.0, 15.0, 4001))
    p_eval.set_defaults(func=cmd_eval)

    p_figure = sub.add_parser("figure", help="emit reference-figure CSV data")
    add_common(p_figure)
    p_figure.set_defaults(func=cmd_figure)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    add_common(p_verify)
    p_verify.add_argument(
        "--perturb-rho",
        type=float,
        default=0.0,
        help="test hook: offset added to every forced rho (makes the suite fail)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_delay = sub.add_parser("delay", help="emit midpoint-vs-lambda delay curve as CSV")
    add_common(p_delay)
    p_delay.set_defaults(func=cmd_delay)

    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        a1=args.a1,
        b1=args.b1,
        epsilon=args.epsilon,
        case=args.case,
        branch=args.branch,
        index=args.index,
        variant=args.variant,
        lambda_list=tuple(args.lambda_list),
        xi0=args.xi0,
        grid=args.grid if args.grid is not None else (-15.0, 15.0, 4001),
        output_path=args.output_path,
        family=args.family,
        montroll_a=args.montroll_a,
        montroll_b=args.montroll_b,
        fig=args.fig,
        perturb_rho=getattr(args, "perturb_rho", 0.0),
    )


def _require(cfg: RunConfig, *names: str):
    missing = [n for n in names if getattr(cfg, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise ValueError(f"missing required flags for this family: {flags}")


def _infer_family(cfg: RunConfig) -> str:
    if cfg.family is not None:
        return cfg.family
    if cfg.montroll_a is not None or cfg.montroll_b is not None:
        return "montroll"
    if cfg.epsilon is not None:
        return "lambda-driven" if cfg.lambda_list else "driven"
    if cfg.lambda_list:
        return "lambda-zero-field"
    if cfg.index is not None:
        return "undriven"
    raise ValueError(
        "cannot infer family; pass --family or identifying flags "
        "(--index, --epsilon, --lambda, --montroll-a/--montroll-b)"
    )


def _single_lambda(cfg: RunConfig) -> float:
    if len(cfg.lambda_list) != 1:
        raise ValueError("this command takes exactly one --lambda")
    return cfg.lambda_list[0]


def _build_solution(cfg: RunConfig) -> KinkSolution:
    family = _infer_family(cfg)
    if family == "montroll":
        _require(cfg, "montroll_a", "montroll_b")
        return montroll_solution(cfg.montroll_a, cfg.montroll_b, cfg.xi0)
    if family == "undriven":
        _require(cfg, "a1", "b1", "index")
        return undriven_solution(ModelParams(cfg.a1, cfg.b1), cfg.index, cfg.xi0)
    if family == "driven":
        _require(cfg, "a1", "b1", "epsilon", "case", "branch")
        setup = driven_setup(cfg.a1, cfg.b1, cfg.epsilon)
        return driven_solution(setup, cfg.case, cfg.branch, cfg.xi0)
    if family == "lambda-driven":
        _require(cfg, "a1", "b1", "epsilon", "case", "branch")
        setup = driven_setup(cfg.a1, cfg.b1, cfg.epsilon)
        return lambda_driven_solution(setup, cfg.case, cfg.branch, _single_lambda(cfg), cfg.xi0)
    if family == "lambda-zero-field":
        _require(cfg, "a1", "b1", "branch", "variant")
        params = ModelParams(cfg.a1, cfg.b1)
        return lambda_zero_field_solution(
            params, cfg.branch, cfg.variant, _single_lambda(cfg), cfg.xi0
        )
    raise ValueError(f"unknown family {family!r}")


def _solution_comment_pairs(sol: KinkSolution, cfg: RunConfig) -> list[tuple[str, str]]:
    pairs = [
        ("family", sol.family),
        ("a1", _fmt(sol.params.a1)),
        ("b1", _fmt(sol.params.b1)),
    ]
    if sol.setup is not None:
        pairs.append(("epsilon", _fmt(sol.setup.epsilon)))
        pairs.append(("eta_times_gamma1", _fmt(sol.setup.eta_times_gamma1)))
    if sol.lam is not None:
        pairs.append(("lambda", _fmt(sol.lam)))
    pairs.extend(
        [
            ("xi0", _fmt(sol.xi0)),
            ("rho", _fmt(sol.forced_rho)),
            ("width_inverse", _fmt(sol.width_inverse)),
            ("left_limit", _fmt(sol.left_limit)),
            ("right_limit", _fmt(sol.right_limit)),
            ("grid", f"{_fmt(cfg.grid[0])}:{_fmt(cfg.grid[1])}:{cfg.grid[2]}"),
        ]
    )
    return pairs


def _write_lines(path: str | None, lines: list[str]):
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _csv_lines(comment_pairs: list[tuple[str, str]], header: str, rows: list[str]) -> list[str]:
    lines = [f"# glkinks {__version__}"]
    lines.extend(f"# {k}={v}" for k, v in comment_pairs)
    lines.append(header)
    lines.extend(rows)
    return lines


def cmd_families(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _require(cfg, "a1", "b1")
    params = ModelParams(cfg.a1, cfg.b1)
    lines = [f"# glkinks {__version__}"]
    for index in (1, 2, 3, 4):
        sol = undriven_solution(params, index)
        poles = (
            "poles " + ";".join(_fmt(p) for p in sol.singularities)
            if sol.singularities
            else "smooth"
        )
        lines.append(
            f"undriven-{index}  rho={_fmt(sol.forced_rho)}  "
            f"width={_fmt(1.0 / sol.width_inverse)}  "
            f"limits {_fmt(sol.left_limit)} -> {_fmt(sol.right_limit)}  {poles}"
        )
    for branch in ("+", "-"):
        for variant in ("first", "second"):
            sol = lambda_zero_field_solution(params, branch, variant, 10.0)
            lines.append(
                f"lambda-zero-field-{variant}{branch}  rho={_fmt(sol.forced_rho)}  "
                f"width={_fmt(1.0 / sol.width_inverse)}  pole set depends on lambda"
            )
    if cfg.epsilon is not None:
        setup = driven_setup(cfg.a1, cfg.b1, cfg.epsilon)
        for case in ("I", "II"):
            for branch in ("+", "-"):
                sign = 1 if branch == "+" else -1
                rho = rho_case1(setup, sign) if case == "I" else rho_case2(setup, sign)
                window = epsilon_admissible_interval(cfg.a1, cfg.b1, case, sign)
                verdict = "admissible" if window.contains(cfg.epsilon) else "rho <= 0"
                sol = driven_solution(setup, case, branch)
                lines.append(
                    f"driven-{case}{branch}  rho={_fmt(rho)}  {verdict} "
                    f"(positive-rho window {window})  "
                    f"width={_fmt(1.0 / sol.width_inverse)}  "
                    f"limits {_fmt(sol.left_limit)} -> {_fmt(sol.right_limit)}"
                )
                domain = lambda_forbidden_interval(setup, case, branch)
                lines.append(
                    f"lambda-{case}{branch}  rho={_fmt(rho)}  "
                    f"forbidden lambda {domain.forbidden}"
                )
    _write_lines(cfg.output_path, lines)
    return 0


def _eval_rows(sol: KinkSolution, grid: tuple[float, float, int]) -> tuple[list[str], int]:
    lo, hi, n = grid
    xi = np.linspace(lo, hi, n)
    singular = sol.profile.is_singular(xi)
    values = sol.profile.value(xi)
    rows = []
    for x, v, s in zip(xi, values, singular):
        if s:
            rows.append(f"{_fmt(x)},,1")
        else:
            rows.append(f"{_fmt(x)},{_fmt(float(v))},0")
    return rows, int(np.count_nonzero(singular))


def cmd_eval(args: argparse.Namespace) -> int:
    cfg = _config(args)
    sol = _build_solution(cfg)
    rows, n_singular = _eval_rows(sol, cfg.grid)
    if n_singular == len(rows):
        print("error: every grid point is singular", file=sys.stderr)
        return _DOMAIN_ERROR
    lines = _csv_lines(_solution_comment_pairs(sol, cfg), "xi,psi,is_singular", rows)
    _write_lines(cfg.output_path, lines)
    return 0


def cmd_figure(args: argparse.Namespace) -> int:
    import os

    cfg = _config(args)
    if cfg.fig is None or cfg.fig not in FIGURES:
        print(f"error: --fig must be one of {sorted(FIGURES)}", file=sys.stderr)
        return _USAGE_ERROR
    spec = FIGURES[cfg.fig]
    out_dir = cfg.output_path or "."
    os.makedirs(out_dir, exist_ok=True)
    setup = driven_setup(spec.a1, spec.b1, spec.epsilon)
    sign = 1 if spec.branch == "+" else -1
    rho = rho_case1(setup, sign) if spec.case == "I" else rho_case2(setup, sign)

    written = []
    for lam_str in spec.lambdas:
        sol = lambda_driven_solution(setup, spec.case, spec.branch, float(lam_str), spec.xi0)
        grid_cfg = RunConfig(
            command="figure",
            a1=spec.a1,
            b1=spec.b1,
            epsilon=spec.epsilon,
            case=spec.case,
            branch=spec.branch,
            index=None,
            variant=None,
            lambda_list=(float(lam_str),),
            xi0=spec.xi0,
            grid=spec.grid,
            output_path=None,
            family=None,
            montroll_a=None,
            montroll_b=None,
            fig=spec.fig_id,
            perturb_rho=0.0,
        )
        rows, _ = _eval_rows(sol, spec.grid)
        pairs = [("fig", str(spec.fig_id))] + _solution_comment_pairs(sol, grid_cfg)
        name = f"fig{spec.fig_id}_lambda_{lam_str}.csv"
        _write_lines(os.path.join(out_dir, name), _csv_lines(pairs, "xi,psi,is_singular", rows))
        written.append(name)

    sidecar = [
        f"# glkinks {__version__}",
        "key,value",
        f"fig,{spec.fig_id}",
        f"a1,{_fmt(spec.a1)}",
        f"b1,{_fmt(spec.b1)}",
        f"epsilon,{_fmt(spec.epsilon)}",
        f"case,{spec.case}",
        f"branch,{spec.branch}",
        f"xi0,{_fmt(spec.xi0)}",
        f"grid,{_fmt(spec.grid[0])}:{_fmt(spec.grid[1])}:{spec.grid[2]}",
        f"lambda_set,{';'.join(spec.lambdas)}",
        f"rho_caption,{_fmt(spec.rho_caption)}",
        f"rho_recomputed,{_fmt(rho)}",
    ]
    name = f"fig{spec.fig_id}_params.csv"
    _write_lines(os.path.join(out_dir, name), sidecar)
    written.append(name)
    for name in written:
        print(name)
    return 0


def _verification_jobs(cfg: RunConfig):
    """(label, solution) pairs for the requested scope."""
    jobs = []
    if cfg.family is None or cfg.family == "montroll":
        jobs.append(("montroll(0,1)", montroll_solution(0.0, 1.0)))
    if cfg.family is None or cfg.family == "undriven":
        params = ModelParams(cfg.a1 or 1.0, cfg.b1 or 1.0)
        for index in (1, 2, 3, 4):
            jobs.append((f"undriven-{index}", undriven_solution(params, index)))
    if cfg.family is None or cfg.family == "lambda-zero-field":
        params = ModelParams(cfg.a1 or 1.0, cfg.b1 or 1.0)
        for branch in ("+", "-"):
            for variant in ("first", "second"):
                for lam in (1.0, 10.0, 100.0):
                    jobs.append(
                        (
                            f"lambda-zero-field-{variant}{branch} lam={lam:g}",
                            lambda_zero_field_solution(params, branch, variant, lam),
                        )
                    )
    if cfg.family is None or cfg.family in ("driven", "lambda-driven"):
        for spec in FIGURES.values():
            setup = driven_setup(spec.a1, spec.b1, spec.epsilon)
            if cfg.family is None or cfg.family == "driven":
                jobs.append(
                    (
                        f"driven-{spec.case}{spec.branch} fig{spec.fig_id}",
                        driven_solution(setup, spec.case, spec.branch),
                    )
                )
            if cfg.family is None or cfg.family == "lambda-driven":
                for lam_str in spec.lambdas:
                    jobs.append(
                        (
                            f"lambda-{spec.case}{spec.branch} fig{spec.fig_id} lam={lam_str}",
                            lambda_driven_solution(
                                setup, spec.case, spec.branch, float(lam_str)
                            ),
                        )
                    )
    return jobs


_KNOWN_SCOPES = ("montroll", "undriven", "driven", "lambda-driven", "lambda-zero-field")


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if cfg.family is not None and cfg.family not in _KNOWN_SCOPES:
        print(f"error: unknown family {cfg.family!r}", file=sys.stderr)
        return _USAGE_ERROR
    jobs = _verification_jobs(cfg)
    lines = []
    failures = 0
    for label, sol in jobs:
        rho = sol.forced_rho + cfg.perturb_rho
        report = residual(sol, rho=rho, mode="analytic")
        ok = report.max_abs_residual < 1e-10
        failures += 0 if ok else 1
        lines.append(
            f"{'PASS' if ok else 'FAIL'}  residual {label}: "
            f"max={report.max_abs_residual:.3e} at xi={report.argmax_xi:.6g} "
            f"(skipped {report.skipped})"
        )
    # one integration oracle per run keeps the suite under a few seconds
    oracle = undriven_solution(ModelParams(cfg.a1 or 1.0, cfg.b1 or 1.0), 1)
    w = 1.0 / oracle.width_inverse
    span = (oracle.xi0 - 10.0 * w, oracle.xi0 + 10.0 * w)
    params = ModelParams(
        oracle.params.a1, oracle.params.b1, oracle.forced_rho + cfg.perturb_rho
    )
    traj = integrate_second_order(
        params,
        float(oracle.profile.value(span[0])),
        float(oracle.profile.first_derivative(span[0])),
        span,
        1e-3,
    )
    sup = compare(traj, oracle)
    ok = sup < 1e-6
    failures += 0 if ok else 1
    lines.append(f"{'PASS' if ok else 'FAIL'}  rk4 undriven-1: sup={sup:.3e}")
    lines.append(f"{len(jobs) + 1 - failures}/{len(jobs) + 1} checks passed")
    _write_lines(cfg.output_path, lines)
    return 0 if failures == 0 else 1


def cmd_delay(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if cfg.fig is not None:
        if cfg.fig not in FIGURES:
            print(f"error: --fig must be one of {sorted(FIGURES)}", file=sys.stderr)
            return _USAGE_ERROR
        spec = FIGURES[cfg.fig]
        a1, b1, eps, case, branch, xi0 = (
            spec.a1,
            spec.b1,
            spec.epsilon,
            spec.case,
            spec.branch,
            spec.xi0,
        )
        lams = cfg.lambda_list or tuple(float(s) for s in spec.lambdas)
    else:
        _require(cfg, "a1", "b1", "epsilon", "case", "branch")
        a1, b1, eps, case, branch, xi0 = (
            cfg.a1,
            cfg.b1,
            cfg.epsilon,
            cfg.case,
            cfg.branch,
            cfg.xi0,
        )
        lams = cfg.lambda_list
    if not lams:
        raise ValueError("delay needs at least one --lambda")
    lams = tuple(sorted(set(float(x) for x in lams)))

    setup = driven_setup(a1, b1, eps)
    domain = lambda_forbidden_interval(setup, case, branch)
    bad = [lam for lam in lams if domain.forbidden.contains(lam)]
    if bad:
        named = ", ".join(_fmt(x) for x in bad)
        print(
            f"error: lambda values inside forbidden interval {domain.forbidden}: {named}",
            file=sys.stderr,
        )
        return _DOMAIN_ERROR

    particular = driven_solution(setup, case, branch, xi0)
    curve = delay_curve(
        lambda lam: lambda_driven_solution(setup, case, branch, lam, xi0), lams, particular
    )
    pairs = [
        ("a1", _fmt(a1)),
        ("b1", _fmt(b1)),
        ("epsilon", _fmt(eps)),
        ("case", case),
        ("branch", branch),
        ("xi0", _fmt(xi0)),
    ]
    rows = [
        f"{_fmt(lam)},{_fmt(mid)},{1 if mult > 1 else 0}"
        for lam, mid, mult in zip(curve.lambdas, curve.midpoints, curve.multiplicities)
    ]
    lines = _csv_lines(pairs, "lambda,xi_mid,multiplicity_flag", rows)
    lines.append(f"# midpoint_inf={_fmt(curve.midpoint_inf)}")
    _write_lines(cfg.output_path, lines)
    return 0


def _merge_grid_flag(argv: list[str]) -> list[str]:
    # "--grid -10:10:5" confuses argparse (leading dash); fold into one token
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--grid" and i + 1 < len(argv):
            out.append(f"--grid={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(_merge_grid_flag(list(argv)))
    try:
        return args.func(args)
    except (NonPositiveCoefficient, ComplexDelta, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR
    except (
        SingularPoint,
        NonPositiveRate,
        NoCrossing,
        EmptyGrid,
        DomainMismatch,
        NonFinite,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
