"""Command-line front end.

Every subcommand writes one report (JSON, or CSV where supported) to
standard output. Exit status is 0 when the result is satisfied or passes, 2
when it is valid but flagged, and 1 on errors, which are reported on
standard error as ``error[<code>] <module>.<operation>: <message>``.
"""
import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import diophantine, measure, schauder, shiftrep
from .numerics import RankDeficiencyError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FLAGGED = 2


class CliError(Exception):
    def __init__(self, code, where, message):
        super().__init__(message)
        self.code = code
        self.where = where


def _num(x):
    """Round floats to 12 significant digits; refuse non-finite values."""
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        if not math.isfinite(x):
            raise CliError("non-finite", "cli.run", f"refusing to serialize {x!r}")
        return float(f"{float(x):.12g}")
    return x


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return _num(obj)


def _dump_json(obj):
    return json.dumps(_clean(obj), indent=2) + "\n"


def _dump_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else _num(v) for v in row])
    return buf.getvalue()


def _load_json(path, where):
    if path is None:
        raise CliError("missing-input", where, "an input file is required")
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError("io", where, str(exc)) from None
    except json.JSONDecodeError as exc:
        raise CliError("malformed-json", where, f"{path}: {exc}") from None


def _load_system(path):
    obj = _load_json(path, "schauder.load")
    try:
        return schauder.SchauderSystem.from_json(obj)
    except ValueError as exc:
        raise CliError("bad-system", "schauder.load", str(exc)) from None


def _load_measure(path):
    obj = _load_json(path, "measure.load")
    try:
        return measure.DiscreteMeasure.from_json(obj)
    except ValueError as exc:
        raise CliError("bad-measure", "measure.load", str(exc)) from None


def _require(value, flag, where):
    if value is None:
        raise CliError("missing-parameter", where, f"{flag} is required")
    return value


def _format(args, allowed, default="json"):
    fmt = args.format or default
    if fmt not in allowed:
        raise CliError("unsupported-format", f"cli.{args.command}", f"--format {fmt} not available here")
    return fmt


def cmd_basis_constant(args):
    fmt = _format(args, ("json", "csv"))
    sys_ = _load_system(args.system)
    report = schauder.basis_constant(sys_)
    if fmt == "csv":
        rows = zip(range(1, sys_.count + 1), report.norms, report.idempotency_residuals)
        return _dump_csv(["n", "norm_Qn", "idempotency_residual"], rows), EXIT_OK
    return _dump_json(report.to_json()), EXIT_OK


def cmd_angles(args):
    _format(args, ("json",))
    sys_ = _load_system(args.system)
    theta = np.arccos(schauder.cosine_matrix(sys_))
    np.fill_diagonal(theta, 0.0)
    k, l = schauder.closest_pair(sys_)
    out = {
        "theta": theta.tolist(),
        "min_angle": schauder.angle(sys_, k, l),
        "closest_pair": [k, l],
        "pair_lower_bound": schauder.pair_lower_bound(sys_, k, l),
    }
    return _dump_json(out), EXIT_OK


def _random_suite(args):
    trials = args.n if args.n is not None else 1000
    d_max = args.d if args.d is not None else 12
    if trials < 1 or d_max < 2:
        raise CliError("precondition", "schauder.verify_angle_theorem", "need --n >= 1 and --d >= 2")
    rng = np.random.default_rng(args.seed)
    failures = 0
    worst = math.inf
    for _ in range(trials):
        report = schauder.verify_angle_theorem(schauder.random_system(rng, int(rng.integers(2, d_max + 1))))
        failures += not report.passed
        worst = min(worst, report.min_angle - report.bound)
    out = {"trials": trials, "seed": args.seed, "d_max": d_max, "failures": failures,
           "min_margin": worst, "pass": failures == 0}
    return _dump_json(out), EXIT_OK if failures == 0 else EXIT_FLAGGED


def cmd_verify_theorem(args):
    _format(args, ("json",))
    if args.system is None:
        return _random_suite(args)
    report = schauder.verify_angle_theorem(_load_system(args.system))
    return _dump_json(report.to_json()), EXIT_OK if report.passed else EXIT_FLAGGED


def _parse_reals(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise CliError("bad-parameter", "diophantine.simultaneous_approx", f"--x: {exc}") from None


def cmd_approx(args):
    _format(args, ("json",))
    where = "diophantine.simultaneous_approx"
    x = _parse_reals(_require(args.x, "--x", where))
    n = _require(args.n, "--n", where)
    if not x or n < 1:
        raise CliError("precondition", where, "need at least one real and --n >= 1")
    result = diophantine.simultaneous_approx(x, n)
    out = result.to_json()
    out["verified"] = diophantine.verify_bound(x, result, n)
    return _dump_json(out), EXIT_OK if result.satisfied else EXIT_FLAGGED


def cmd_moment_search(args):
    _format(args, ("json",))
    nu = _load_measure(args.measure)
    eps = _require(args.eps, "--eps", "measure.near_unimodular_exponent")
    cap = args.cap if args.cap is not None else 10_000_000
    result = measure.near_unimodular_exponent(nu, eps, cap)
    return _dump_json(result.to_json()), EXIT_OK if result.satisfied else EXIT_FLAGGED


DIVERGENCE_COLUMNS = ["d", "M_d", "theta_min", "angle_bound", "pair_bound", "conditioning_flag"]


def cmd_divergence(args):
    fmt = _format(args, ("json", "csv"), default="csv")
    nu = _load_measure(args.measure)
    d_max = args.dmax if args.dmax is not None else min(len(nu), 40)
    rows = shiftrep.shift_divergence_experiment(nu, d_max)
    status = EXIT_OK if all(r.flag == "ok" for r in rows) else EXIT_FLAGGED
    if fmt == "csv":
        return _dump_csv(DIVERGENCE_COLUMNS, (r.as_tuple() for r in rows)), status
    return _dump_json([dict(zip(DIVERGENCE_COLUMNS, r.as_tuple())) for r in rows]), status


def cmd_shift_rep(args):
    _format(args, ("json",))
    nu = _load_measure(args.measure)
    d = args.d if args.d is not None else len(nu)
    rep = shiftrep.shift_representation(nu, d)
    return _dump_json(rep.to_json()), EXIT_OK


def cmd_example(args):
    _format(args, ("json",))
    n_blocks = _require(args.n, "--n", "schauder.example_minimal_sequence")
    sys_ = schauder.example_minimal_sequence(n_blocks)
    k, l = schauder.closest_pair(sys_)
    out = {
        "blocks": n_blocks,
        "min_angle": schauder.angle(sys_, k, l),
        "closest_pair": [k, l],
        "pair_lower_bound": schauder.pair_lower_bound(sys_, k, l),
        "basis_constant": schauder.basis_constant(sys_).basis_constant,
        "system": sys_.to_json(),
    }
    return _dump_json(out), EXIT_OK


COMMANDS = {
    "basis-constant": (cmd_basis_constant, "schauder.basis_constant"),
    "angles": (cmd_angles, "schauder.angle"),
    "verify-theorem": (cmd_verify_theorem, "schauder.verify_angle_theorem"),
    "approx": (cmd_approx, "diophantine.simultaneous_approx"),
    "moment-search": (cmd_moment_search, "measure.near_unimodular_exponent"),
    "divergence": (cmd_divergence, "shiftrep.shift_divergence_experiment"),
    "shift-rep": (cmd_shift_rep, "shiftrep.shift_representation"),
    "example-2-2": (cmd_example, "schauder.example_minimal_sequence"),
}


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's 2 (reserved for flagged results)
    def error(self, message):
        raise CliError("bad-arguments", "cli.parse", message)


def build_parser():
    parser = _Parser(
        prog="schauderkit",
        description="Schauder-basis diagnostics, Dirichlet approximation and moment searches.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--system", help="system JSON (matrix format plus optional labels)")
    parser.add_argument("--measure", help='measure JSON {"atoms": [{"t": ..., "w": ...}, ...]}')
    parser.add_argument("--x", help="comma-separated reals for approx")
    parser.add_argument("--n", type=int, help="Dirichlet ceiling, block count, or number of trials")
    parser.add_argument("--eps", type=float, help="target epsilon for moment-search")
    parser.add_argument("--cap", type=int, help="largest exponent scanned by moment-search")
    parser.add_argument("--dmax", type=int, help="largest truncation for divergence")
    parser.add_argument("--d", type=int, help="dimension for shift-rep, max dimension for random suites")
    parser.add_argument("--format", choices=("json", "csv"))
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    where = "cli.parse"
    try:
        args = build_parser().parse_args(argv)
        handler, where = COMMANDS[args.command]
        text, status = handler(args)
    except CliError as exc:
        print(f"error[{exc.code}] {exc.where}: {exc}", file=stderr)
        return EXIT_ERROR
    except RankDeficiencyError as exc:
        print(f"error[rank-deficient] {where}: {exc}", file=stderr)
        return EXIT_ERROR
    except (ValueError, IndexError) as exc:
        print(f"error[precondition] {where}: {exc}", file=stderr)
        return EXIT_ERROR
    stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
