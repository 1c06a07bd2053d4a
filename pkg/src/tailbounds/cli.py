"""Command line surface: bound, solve, verify, moments.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 when the
command succeeds (bound satisfied, no fuzz violations), 1 when a bound is
violated or fuzzing found violations, 2 on usage or input errors.
"""

import argparse
import json
import sys

from . import bounds as bd
from .dist import RangedVariable, from_samples, make_finite
from .errors import MalformedRowError, TailboundsError
from .oracle import THEOREMS, FuzzConfig, fuzz_theorem
from .transforms import PositivePart, phi_from_spec

BOUND_THEOREMS = (
    "general_chebyshev",
    "markov_staircase",
    "eisenberg",
    "reverse_markov_gen",
    "chebyshev_gen",
    "cantelli_gen",
    "hoeffding_gen",
)


def parse_distribution_file(path):
    """Load a distribution from a text file, auto-detecting the format.

    Two formats: a CSV whose first data row is the header "value,prob"
    followed by value,prob atom rows, or a headerless single column of
    sample values (one real per line, duplicates weighted by count).
    Blank lines and lines starting with "#" are skipped everywhere.
    """
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            rows.append((line_no, text))
    if not rows:
        raise MalformedRowError(0, f"no data rows in {path}")
    if rows[0][1].replace(" ", "").lower() == "value,prob":
        pairs = []
        for line_no, text in rows[1:]:
            parts = [p.strip() for p in text.split(",")]
            if len(parts) != 2:
                raise MalformedRowError(line_no, text)
            try:
                pairs.append((float(parts[0]), float(parts[1])))
            except ValueError:
                raise MalformedRowError(line_no, text) from None
        return make_finite(pairs)
    samples = []
    for line_no, text in rows:
        if "," in text:
            # comma row without the value,prob header up front
            raise MalformedRowError(line_no, text)
        try:
            samples.append(float(text))
        except ValueError:
            raise MalformedRowError(line_no, text) from None
    return from_samples(samples)


def _dist_from_spec(spec):
    """A --dist argument: inline "bern:q" shorthand or a file path."""
    if spec.startswith("bern:"):
        try:
            q = float(spec[5:])
        except ValueError:
            raise TailboundsError(f"bad bernoulli spec {spec!r}") from None
        if not 0.0 <= q <= 1.0:
            raise TailboundsError(f"bernoulli parameter must be in [0, 1], got {q}")
        return make_finite([(0.0, 1.0 - q), (1.0, q)])
    return parse_distribution_file(spec)


def _floats(text, flag):
    toks = [t.strip() for t in text.split(",") if t.strip()]
    if not toks:
        raise TailboundsError(f"{flag}: no values in {text!r}")
    try:
        return [float(t) for t in toks]
    except ValueError:
        raise TailboundsError(f"{flag}: could not parse {text!r}") from None


def _parse_known(text):
    known = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        k, sep, v = part.partition("=")
        try:
            if not sep:
                raise ValueError
            known[int(k)] = float(v)
        except ValueError:
            raise TailboundsError(f"--known: could not parse {part!r}") from None
    return known


def _parse_ranges(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition(":")
        try:
            if not sep:
                raise ValueError
            out.append((float(lo), float(hi)))
        except ValueError:
            raise TailboundsError(f"--ranges: could not parse {part!r}") from None
    return out


def _print_report(report):
    print(f"theorem: {report.theorem}")
    print(f"{'k':>3} {'lambda_k':>14} {'c_k':>14} {'P_k':>14} {'c_k*P_k':>14}")
    rows = zip(report.ladder, report.coefficients, report.tails)
    for k, (lam, c, p) in enumerate(rows, start=1):
        print(f"{k:>3} {lam:>14.6g} {c:>14.6g} {p:>14.6g} {c * p:>14.6g}")
    print(f"lhs = {report.lhs:.12g}")
    print(f"rhs = {report.rhs:.12g}")
    print(f"slack = {report.slack:.12g}")
    print(f"satisfied: {'yes' if report.satisfied else 'NO'}")
    if report.params:
        extras = ", ".join(f"{k}={v:g}" for k, v in report.params.items())
        print(f"params: {extras}")


def _cmd_bound(args):
    ladder = bd.ThresholdLadder(tuple(_floats(args.ladder, "--ladder")))
    th = args.theorem
    if th == "hoeffding_gen":
        if not args.dists:
            raise TailboundsError("hoeffding_gen requires --dists")
        dists = [_dist_from_spec(s.strip()) for s in args.dists.split(",") if s.strip()]
        if args.ranges:
            ranges = _parse_ranges(args.ranges)
            if len(ranges) != len(dists):
                raise TailboundsError(
                    f"--ranges gives {len(ranges)} pairs for {len(dists)} variables"
                )
        else:
            ranges = [(d.min_support, d.max_support) for d in dists]
        variables = [RangedVariable(d, lo, hi) for d, (lo, hi) in zip(dists, ranges)]
        report = bd.hoeffding_gen(variables, ladder)
    else:
        if not args.dist:
            raise TailboundsError(f"{th} requires --dist")
        d = _dist_from_spec(args.dist)
        if th in ("general_chebyshev", "markov_staircase"):
            phi = phi_from_spec(args.phi) if args.phi else PositivePart()
            op = bd.general_chebyshev if th == "general_chebyshev" else bd.markov_staircase
            report = op(d, phi, ladder)
        elif th == "eisenberg":
            if not args.weights:
                raise TailboundsError("eisenberg requires --weights")
            report = bd.eisenberg(d, ladder, _floats(args.weights, "--weights"))
        elif th == "reverse_markov_gen":
            if args.m is None:
                raise TailboundsError("reverse_markov_gen requires --m")
            report = bd.reverse_markov_gen(d, ladder, args.m)
        elif th == "chebyshev_gen":
            report = bd.chebyshev_gen(d, ladder)
        else:
            report = bd.cantelli_gen(d, ladder)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        _print_report(report)
    return 0 if report.satisfied else 1


def _cmd_solve(args):
    coeffs = _floats(args.coeffs, "--coeffs")
    known = _parse_known(args.known)
    sol = bd.solve_unknown_tail(coeffs, args.budget, known, args.unknown)
    if args.json:
        print(json.dumps({"bound": sol.bound, "raw": sol.raw}))
    else:
        print(f"{sol.bound:.12g}")
    return 0


def _cmd_verify(args):
    names = THEOREMS if args.theorem == "all" else (args.theorem,)
    config = FuzzConfig(trials=args.trials, seed=args.seed)
    summaries = [fuzz_theorem(t, config) for t in names]
    total = sum(s.violations for s in summaries)
    if args.json:
        print(json.dumps([s.to_dict() for s in summaries]))
    else:
        for s in summaries:
            print(
                f"{s.theorem:<20} trials={s.trials_run} "
                f"violations={s.violations} worst_slack={s.worst_slack:.6g}"
            )
        print(f"total violations: {total}")
    return 0 if total == 0 else 1


def _cmd_moments(args):
    mom = _dist_from_spec(args.dist).moments()
    if args.json:
        print(
            json.dumps(
                {"mean": mom.mean, "variance": mom.variance, "mean_abs": mom.mean_abs}
            )
        )
    else:
        print(f"mean = {mom.mean:.12g}")
        print(f"variance = {mom.variance:.12g}")
        print(f"mean_abs = {mom.mean_abs:.12g}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tailbounds",
        description="Staircase tail bounds over finite distributions.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("bound", help="evaluate one staircase inequality")
    p.add_argument("--theorem", required=True, choices=BOUND_THEOREMS)
    p.add_argument("--dist", help="CSV path or bern:q")
    p.add_argument(
        "--ladder", required=True, help="comma-separated thresholds, first > 0"
    )
    p.add_argument("--phi", help="pospart | power:p | shifted-square:t | exp:s")
    p.add_argument("--m", type=float, help="support upper bound (reverse_markov_gen)")
    p.add_argument("--weights", help="comma-separated weights (eisenberg)")
    p.add_argument("--dists", help="comma-separated per-variable specs (hoeffding_gen)")
    p.add_argument("--ranges", help="lo:hi pairs, default = each variable's support")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve", help="invert a budgeted bound for one tail")
    p.add_argument("--coeffs", required=True, help="comma-separated, nonnegative")
    p.add_argument("--budget", required=True, type=float)
    p.add_argument("--known", default="", help="k=v pairs, comma-separated, 1-based")
    p.add_argument("--unknown", required=True, type=int, help="1-based index")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="fuzz the inequalities on random instances")
    p.add_argument("--theorem", default="all", choices=("all",) + THEOREMS)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("moments", help="print mean, variance and E|X|")
    p.add_argument("--dist", required=True, help="CSV path or bern:q")
    p.add_argument("--json", action="store_true")
    return parser


_HANDLERS = {
    "bound": _cmd_bound,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "moments": _cmd_moments,
}


def execute(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.verb](args)
    except TailboundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # stray parse errors not wrapped above are still input errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(execute())


if __name__ == "__main__":
    entrypoint()
