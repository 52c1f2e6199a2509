"""Command-line frontend.

Every library operation is reachable through one of the subcommands:

    weights-verify   transform bound checks on a deterministic sample grid
    bounds           the analytic bound calculators
    pi-ap            primes in one arithmetic progression
    bt-check         Brun-Titchmarsh checks across residues
    bqf              binary quadratic form reduction/counting report
    chebotarev       Frobenius-class counts and the counting chain
    mellin-check     contour evaluation of the smoothed sum vs direct
    lang-trotter     trace / Frobenius-field counting and shape report

Reports are emitted as JSON (default) or CSV with a header row; floats are
printed with 12 significant digits so repeated runs diff cleanly.  A flat
``key = value`` config file supplies defaults which flags override; the
environment variable CHEB_THREADS overrides the thread count (counting
kernels are vectorized; the setting is recorded in the report metadata).
Exit status is 0 on success and 2 on a domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import bounds as bounds_mod
from . import bqf as bqf_mod
from . import chebotarev as cheb
from . import elliptic
from . import explicit
from . import progressions as ap
from .errors import CapacityError, DomainError
from .sieve import CountSeries, li, partial_sum_pi_from_theta, primes_upto, segmented_primes
from .weights import (WeightSpec, check_decay_bound, check_growth_bound,
                      check_left_line_bound, check_real_axis_bound,
                      laplace_transform, weight_value)

SUBCOMMANDS = ("weights-verify", "bounds", "pi-ap", "bt-check", "bqf",
               "chebotarev", "mellin-check", "lang-trotter")


@dataclass
class RunConfig:
    """Resolved invocation: subcommand, parameters, output and run knobs."""

    command: str
    params: dict
    fmt: str = "json"
    checkpoints: list = field(default_factory=list)
    memory_budget: int = 2**33
    threads: int = 1
    delta0: float = 1e-3
    eta: float = 1e-2
    c1: float = 1.0
    slack: float = 0.1


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (float, np.floating)):
        return float(f"{float(v):.12g}")
    if isinstance(v, np.integer):
        return int(v)
    return v


def emit(rows: list[dict], fmt: str, meta: dict) -> str:
    rows = [{k: _fmt(v) for k, v in row.items()} for row in rows]
    if fmt == "json":
        doc = {"meta": {k: _fmt(v) for k, v in meta.items()}, "rows": rows}
        if len(rows) == 1:
            doc.update(rows[0])
        return json.dumps(doc, sort_keys=True, indent=2)
    out = io.StringIO()
    fieldnames = list(rows[0].keys()) if rows else ["empty"]
    writer = csv.DictWriter(out, fieldnames=fieldnames)
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (f"{v:.12g}" if isinstance(v, float) else v)
                         for k, v in row.items()})
    return out.getvalue().rstrip("\n")


def _parse_checkpoints(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _read_config(path: str) -> dict:
    values: dict[str, str] = {}
    with open(path) as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{line_no}: expected 'key = value'")
            key, val = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = val
    return values


# ---------------------------------------------------------------- commands


def _cmd_weights_verify(args) -> list[dict]:
    spec = WeightSpec(x=args.x, ell=args.ell, eps=args.eps)
    rng = np.random.default_rng(args.seed)
    rows = [{"check": "value-at-zero", "lhs": laplace_transform(spec, 0).real,
             "rhs": 0.75, "passed": 0.5 < laplace_transform(spec, 0).real < 0.75}]
    lo, hi = spec.support
    for t in (lo - 0.01, lo, 0.5, 0.75, 1.0, hi, hi + 0.01):
        f = weight_value(spec, t)
        rows.append({"check": "weight-in-unit-interval", "s_re": t, "s_im": 0.0,
                     "alpha": 0.0, "lhs": f, "rhs": 1.0, "passed": 0.0 <= f <= 1.0})
    for _ in range(args.samples):
        sigma = float(10.0 ** rng.uniform(-2, 0.7))
        t = float(rng.uniform(-50, 50))
        alpha = float(rng.uniform(0, spec.ell))
        r = check_decay_bound(spec, complex(sigma, t), alpha)
        rows.append({"check": "halfplane-decay", "s_re": sigma, "s_im": t,
                     "alpha": alpha, "lhs": r.lhs, "rhs": r.rhs, "passed": r.passed})
        g = check_growth_bound(spec, complex(sigma, t))
        rows.append({"check": "growth", "s_re": sigma, "s_im": t, "alpha": 0.0,
                     "lhs": g.lhs, "rhs": g.rhs, "passed": g.passed})
        v = check_real_axis_bound(spec, sigma)
        rows.append({"check": "real-axis", "s_re": sigma, "s_im": 0.0, "alpha": 0.0,
                     "lhs": v.lhs, "rhs": v.rhs, "passed": v.passed})
        w = check_left_line_bound(spec, t)
        rows.append({"check": "left-line", "s_re": -0.5, "s_im": t, "alpha": float(spec.ell),
                     "lhs": w.lhs, "rhs": w.rhs, "passed": w.passed})
    return rows


def _cmd_bounds(args, cfg: RunConfig) -> list[dict]:
    inv = bounds_mod.FieldInvariants(
        n_K=args.n_k, D_K=args.d_k, Q=args.q_max,
        degree_LK=args.degree_lk,
        ramified_primes=frozenset(int(p) for p in args.ramified.split(",") if p.strip()),
        delta0=cfg.delta0)
    comp = bounds_mod.log_complexity(inv)
    ranges = bounds_mod.range_thresholds(inv, constant=args.constant)
    row = {
        "complexity": comp.value,
        "degree_dominated": comp.degree_dominated,
        "asymptotic_regime": comp.asymptotic,
        "range_basic_log": ranges.basic.log,
        "range_balanced_log": ranges.balanced.log,
        "range_sharp_log": ranges.sharp.log,
        "range_compact_log": ranges.compact.log,
        "extension_complexity": ranges.complexity,
    }
    if args.sigma is not None and args.t_height is not None:
        row["density_bound_log"] = bounds_mod.density_bound(
            inv, args.sigma, args.t_height, constant=args.constant).log
    if args.lam is not None:
        row["low_lying_bound_log"] = bounds_mod.low_lying_density_bound(
            args.lam, clamp=args.clamp).log
    if args.lambda1 is not None:
        row["repulsion_threshold"] = bounds_mod.repulsion_threshold(args.lambda1, cfg.eta)
    if args.beta1 is not None and args.t_height is not None:
        row["exclusion_boundary"] = bounds_mod.deuring_heilbronn_exclusion(
            inv, args.beta1, args.t_height, c1=cfg.c1)
    if args.theta is not None:
        row["bt_constant"] = bounds_mod.brun_titchmarsh_constant(args.theta)
    return [row]


def _cmd_pi_ap(args, cfg: RunConfig) -> list[dict]:
    query = ap.APQuery(q=args.q, a=args.a, x=args.x)
    row = {"q": args.q, "a": args.a, "x": args.x, "count": ap.pi_ap(query)}
    if args.q >= 2 and args.x > args.q:
        mv = ap.montgomery_vaughan_check(query)
        row.update(mv_bound=mv.rhs, mv_passed=mv.passed)
        my = ap.maynard_check(query, slack=cfg.slack)
        row.update(piecewise_bound=my.rhs, piecewise_passed=my.passed, heuristic=my.heuristic)
    return [row]


def _cmd_bt_check(args, cfg: RunConfig) -> list[dict]:
    rows = []
    residues = ([args.a] if args.a is not None else
                [a for a in range(1, args.q) if math.gcd(a, args.q) == 1])
    for a in residues:
        query = ap.APQuery(q=args.q, a=a, x=args.x)
        mv = ap.montgomery_vaughan_check(query)
        my = ap.maynard_check(query, slack=cfg.slack)
        rows.append({"q": args.q, "a": a, "x": args.x, "count": mv.lhs,
                     "mv_bound": mv.rhs, "mv_passed": mv.passed,
                     "piecewise_bound": my.rhs, "piecewise_passed": my.passed})
    return rows


def _cmd_bqf(args, cfg: RunConfig) -> list[dict]:
    a, b, c = (int(t) for t in args.form.split(","))
    form = bqf_mod.reduce_form(a, b, c)
    summary = bqf_mod.class_number(args.D)
    if form.D != args.D:
        raise DomainError(f"form discriminant -{form.D} does not match --D {args.D}")
    checkpoints = cfg.checkpoints or [args.x]
    series = bqf_mod.count_represented_primes(form, int(args.x), checkpoints)
    report = bqf_mod.representation_density_report(form, int(args.x))
    rows = []
    for x_cp, count in zip(series.checkpoints, series.counts):
        target = report.delta * li(float(x_cp)) / report.h if x_cp >= 2 else math.nan
        rows.append({"x": float(x_cp), "count": int(count), "target": target,
                     "ratio": count / target if target else math.nan,
                     "h": report.h, "delta_Q": report.delta,
                     "below_upper_bound": bool(count < 2.0 * target) if target else False,
                     "in_proven_range": report.in_proven_range})
    return rows


def _make_extension(args) -> tuple[cheb.AbelianExtension, cheb.ConjClass]:
    if args.d is not None:
        ext = cheb.quadratic_field(args.d)
        if args.cls not in ("split", "inert"):
            raise DomainError("quadratic class must be 'split' or 'inert'")
        cls = cheb.ConjClass(args.cls)
    elif args.cyclotomic is not None:
        ext = cheb.cyclotomic_field(args.cyclotomic)
        cls = cheb.ConjClass(int(args.cls))
    else:
        raise DomainError("need --d or --cyclotomic")
    return ext, cls


def _cmd_chebotarev(args, cfg: RunConfig) -> list[dict]:
    ext, cls = _make_extension(args)
    report = cheb.density_ratio_report(ext, cls, args.x)
    chain = cheb.counting_chain_check(ext, cls, args.x0, args.x)
    # partial-summation estimate of the count from a theta checkpoint table
    grid = np.unique(np.concatenate((np.geomspace(args.x0, args.x, 512), [args.x0, args.x])))
    theta_series = CountSeries(
        checkpoints=grid,
        counts=np.array([cheb.theta_class(ext, cls, t) for t in grid]),
        label="theta table")
    est = partial_sum_pi_from_theta(theta_series, args.x0, args.x)
    return [{
        "kind": ext.kind, "class": str(cls.key), "x": args.x,
        "count": report.count,
        "expected": report.expected,
        "ratio": report.ratio,
        "psi": cheb.psi_class(ext, cls, args.x),
        "theta": cheb.theta_class(ext, cls, args.x),
        "partial_sum_estimate": est,
        "chain_lhs": chain.lhs, "chain_rhs": chain.rhs, "chain_passed": chain.passed,
        "range_threshold_log": report.threshold.log,
        "in_proven_range": report.in_proven_range,
    }]


def _cmd_mellin_check(args, cfg: RunConfig) -> list[dict]:
    if args.q == 1:
        ext, cls = cheb.trivial_extension(), cheb.ConjClass(cheb.FULL)
    else:
        ext, cls = cheb.cyclotomic_field(args.q), cheb.ConjClass(args.residue)
    spec = WeightSpec(x=args.x, ell=args.ell, eps=args.eps)
    n_max = args.n_max or explicit.support_cap(spec)
    if args.char_index is not None:
        # single-character series: the direct side is the complex sum
        series = explicit.character_log_deriv(args.q, args.char_index, n_max)
        t = np.log(series.values.astype(float)) / spec.log_x
        direct = complex(np.sum(series.coeffs * weight_value(spec, t)))
        res = explicit.contour_sum(series, spec, t_max=args.t_max, quad_step=args.step)
        diff = abs(complex(res.value, res.imag_part) - direct)
        return [{
            "q": args.q, "char_index": args.char_index, "x": args.x,
            "ell": args.ell, "direct_re": direct.real, "direct_im": direct.imag,
            "contour_re": res.value, "contour_im": res.imag_part,
            "difference": diff, "budget": res.budget,
            "within_budget": diff <= res.budget,
        }]
    direct = cheb.weighted_prime_sum(ext, cls, spec)
    if args.q == 1:
        series = explicit.zeta_log_deriv(n_max)
    else:
        series = explicit.class_log_deriv(ext, cls, n_max)
    res = explicit.contour_sum(series, spec, t_max=args.t_max, quad_step=args.step)
    return [{
        "q": args.q, "x": args.x, "ell": args.ell, "eps": args.eps,
        "t_max": args.t_max, "direct": direct, "contour": res.value,
        "difference": abs(res.value - direct), "budget": res.budget,
        "tail": res.tail, "quad_error": res.quad_error,
        "within_budget": res.consistent_with(direct),
        "budget_fraction_of_direct": res.budget / abs(direct) if direct else math.inf,
    }]


def _cmd_lang_trotter(args, cfg: RunConfig) -> list[dict]:
    if args.curves_file:
        curves = elliptic.read_curves(args.curves_file)
    else:
        a_coef, b_coef = (int(t) for t in args.curve.split(","))
        curves = [elliptic.CurveModel(a_coef, b_coef)]
    checkpoints = cfg.checkpoints or [args.x]
    rows = []
    for curve in curves:
        if args.mode == "trace":
            series = elliptic.trace_match_count(curve, args.a, int(args.x), checkpoints)
        else:
            series = elliptic.frobenius_field_count(curve, args.disc, int(args.x), checkpoints)
        shape = elliptic.growth_shape_report(series, args.mode,
                                             cm_flagged=bool(curve.cm_flag))
        for i, x_cp in enumerate(series.checkpoints):
            rows.append({
                "curve": f"{curve.A},{curve.B}", "mode": args.mode,
                "x": float(x_cp), "count": int(series.counts[i]),
                "theorem_ratio": float(shape.theorem_ratio[i]),
                "conjecture_ratio": float(shape.conjecture_ratio[i]),
                "cm_flagged": shape.cm_flagged,
            })
    return rows


# ------------------------------------------------------------------ driver


def _add_common_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # shared flags accepted both before and after the subcommand; the
    # after-the-subcommand copies use SUPPRESS so they never clobber a
    # value the top-level parse already set
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--config", default=d(None),
                        help="flat 'key = value' defaults file")
    parser.add_argument("--format", choices=("csv", "json"), default=d("json"),
                        help="report format (default json)")
    parser.add_argument("--checkpoints", type=str, default=d(""),
                        help="comma-separated x checkpoints for counting commands")
    parser.add_argument("--threads", type=int,
                        default=d(int(os.environ.get("CHEB_THREADS", "1"))),
                        help="thread count (recorded; kernels are vectorized)")
    parser.add_argument("--memory-budget", type=int, default=d(2**33),
                        help="largest sieve bound accepted")
    parser.add_argument("--delta0", type=float, default=d(1e-3),
                        help="complexity offset delta0 (default 1e-3)")
    parser.add_argument("--eta", type=float, default=d(1e-2),
                        help="low-lying window parameter (default 1e-2)")
    parser.add_argument("--c1", type=float, default=d(1.0),
                        help="exclusion constant c1 (default 1)")
    parser.add_argument("--slack", type=float, default=d(0.1),
                        help="o(1) stand-in for the heuristic check (default 0.1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebkit",
        description="Prime counting in Frobenius classes and explicit bound calculators")
    _add_common_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    p = sub.add_parser("weights-verify", help="check the transform bounds on a sample")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bounds", help="evaluate the analytic bound calculators")
    p.add_argument("--n-k", type=int, required=True)
    p.add_argument("--d-k", type=float, required=True)
    p.add_argument("--q-max", type=float, required=True)
    p.add_argument("--degree-lk", type=int, default=1)
    p.add_argument("--ramified", type=str, default="")
    p.add_argument("--constant", type=float, default=1.0)
    p.add_argument("--sigma", type=float)
    p.add_argument("--t-height", type=float)
    p.add_argument("--lam", type=float)
    p.add_argument("--clamp", action="store_true")
    p.add_argument("--lambda1", type=float)
    p.add_argument("--beta1", type=float)
    p.add_argument("--theta", type=float)

    p = sub.add_parser("pi-ap", help="count primes in one progression")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("bt-check", help="Brun-Titchmarsh checks across residues")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--a", type=int)

    p = sub.add_parser("bqf", help="binary quadratic form counting report")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--form", type=str, required=True, help="a,b,c")

    p = sub.add_parser("chebotarev", help="Frobenius class counts")
    p.add_argument("--d", type=int, help="squarefree d for a quadratic field")
    p.add_argument("--cyclotomic", type=int, help="cyclotomic conductor q")
    p.add_argument("--class", dest="cls", type=str, required=True,
                   help="'split'/'inert' or a residue")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--x0", type=float, default=10.0)

    p = sub.add_parser("mellin-check", help="contour vs direct smoothed sum")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--residue", type=int, default=1)
    p.add_argument("--char-index", type=int,
                   help="check one character's series instead of a class")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--t-max", type=float, default=500.0)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--n-max", type=int)

    p = sub.add_parser("lang-trotter", help="trace / Frobenius-field counting")
    p.add_argument("--curve", type=str, help="A,B")
    p.add_argument("--curves-file", type=str)
    p.add_argument("--mode", choices=("trace", "field"), required=True)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--disc", type=int, help="imaginary quadratic discriminant")
    p.add_argument("--x", type=float, required=True)
    return parser


_KNOWN_CONFIG_KEYS = {
    "format", "checkpoints", "threads", "memory_budget", "delta0", "eta",
    "c1", "slack", "x", "ell", "eps", "samples", "seed", "n_k", "d_k",
    "q_max", "degree_lk", "ramified", "constant", "sigma", "t_height",
    "lam", "lambda1", "beta1", "theta", "q", "a", "D", "form", "d",
    "cyclotomic", "cls", "x0", "residue", "char_index", "t_max", "step",
    "n_max", "curve", "curves_file", "mode", "disc",
}


def _apply_config_defaults(parser: argparse.ArgumentParser, values: dict) -> None:
    """Install config values as defaults on the parser tree.

    Subparsers parse into a fresh namespace, so the defaults must be set on
    each of them, and config-supplied values satisfy otherwise-required
    flags.
    """
    parser.set_defaults(**values)
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                _apply_config_defaults(sub, values)
        elif action.dest in values:
            action.required = False


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one invocation; returns (exit_code, report_text)."""
    parser = build_parser()
    try:
        # pre-scan for --config so its values become defaults
        if "--config" in argv:
            cfg_path = argv[argv.index("--config") + 1]
            overrides = _read_config(cfg_path)
            unknown = set(overrides) - _KNOWN_CONFIG_KEYS
            if unknown:
                raise DomainError(f"unknown config keys: {sorted(unknown)}")
            _apply_config_defaults(
                parser, {k: _coerce_config_value(v) for k, v in overrides.items()})
        args = parser.parse_args(argv)
        cfg = RunConfig(
            command=args.command, params=vars(args), fmt=args.format,
            checkpoints=_parse_checkpoints(args.checkpoints),
            memory_budget=args.memory_budget, threads=args.threads,
            delta0=args.delta0, eta=args.eta, c1=args.c1, slack=args.slack)
        x_req = getattr(args, "x", None)
        if x_req is not None and x_req > cfg.memory_budget:
            raise CapacityError(
                f"x = {x_req:g} exceeds the memory budget {cfg.memory_budget}")
        if cfg.command == "weights-verify":
            rows = _cmd_weights_verify(args)
        elif cfg.command == "bounds":
            rows = _cmd_bounds(args, cfg)
        elif cfg.command == "pi-ap":
            rows = _cmd_pi_ap(args, cfg)
        elif cfg.command == "bt-check":
            rows = _cmd_bt_check(args, cfg)
        elif cfg.command == "bqf":
            rows = _cmd_bqf(args, cfg)
        elif cfg.command == "chebotarev":
            rows = _cmd_chebotarev(args, cfg)
        elif cfg.command == "mellin-check":
            rows = _cmd_mellin_check(args, cfg)
        else:
            rows = _cmd_lang_trotter(args, cfg)
        meta = {"command": cfg.command, "threads": cfg.threads}
        return 0, emit(rows, cfg.fmt, meta)
    except (DomainError, CapacityError, ValueError) as exc:
        return 2, f"error: {exc}"


def _coerce_config_value(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    if text.lower() in ("true", "false"):
        return text.lower() == "true"
    return text


def main() -> None:
    code, text = run(sys.argv[1:])
    stream = sys.stdout if code == 0 else sys.stderr
    print(text, file=stream)
    raise SystemExit(code)


# operation coverage table: every public library operation must appear in at
# least one subcommand's implementation (checked by the test suite)
SUBCOMMAND_OPERATIONS = {
    "weights-verify": (laplace_transform, weight_value, check_decay_bound,
                       check_growth_bound, check_real_axis_bound,
                       check_left_line_bound),
    "bounds": (bounds_mod.log_complexity, bounds_mod.density_bound,
               bounds_mod.low_lying_density_bound, bounds_mod.repulsion_threshold,
               bounds_mod.deuring_heilbronn_exclusion,
               bounds_mod.brun_titchmarsh_constant, bounds_mod.range_thresholds,
               bounds_mod.extension_complexity),
    "pi-ap": (ap.pi_ap, ap.euler_phi, primes_upto, segmented_primes,
              ap.montgomery_vaughan_check, ap.maynard_check),
    "bt-check": (ap.montgomery_vaughan_check, ap.maynard_check, ap.residue_counts),
    "bqf": (bqf_mod.reduce_form, bqf_mod.class_number, bqf_mod.delta_q,
            bqf_mod.count_represented_primes, bqf_mod.representation_density_report, li),
    "chebotarev": (cheb.artin_class, cheb.psi_class, cheb.theta_class,
                   cheb.pi_class, cheb.counting_chain_check,
                   cheb.density_ratio_report, partial_sum_pi_from_theta),
    "mellin-check": (cheb.weighted_prime_sum, explicit.zeta_log_deriv,
                     explicit.class_log_deriv, explicit.character_log_deriv,
                     explicit.contour_sum, explicit.tail_bound),
    "lang-trotter": (elliptic.trace_of_frobenius, elliptic.trace_match_count,
                     elliptic.frobenius_field_count, elliptic.growth_shape_report,
                     elliptic.read_curves),
}

if __name__ == "__main__":
    main()
