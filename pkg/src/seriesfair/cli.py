"""Command-line front end.

Exit codes: 0 success, 1 data/domain error, 2 usage error, 3 self-check
failure. Probabilities and multipliers print with 9 decimals, crossovers
with 6.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from .analysis import SIGNIFICANCE_THRESHOLD, MultipleCrossoverError, fairness_verdict, fmt9
from .core import FormatError, SeriesFormat
from .enumeration import Side, enumerate_victory_scenarios, series_win_polynomial
from .morale import Mode, MoraleModel, ProbabilityRangeError, series_outcome_dp, simulate_series
from .records import R_PAPER, RecordError, average_road_multiplier, bundled_path, load_records, road_multiplier
from . import reproduce

EXIT_OK, EXIT_DATA, EXIT_USAGE, EXIT_SELFCHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _format_arg(text: str) -> SeriesFormat:
    try:
        return SeriesFormat.parse(text)
    except FormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v) or v <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive finite number: {text!r}")
    return v


def _finite_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return v


# derive


def render_derive(fmt: SeriesFormat) -> str:
    scenarios = enumerate_victory_scenarios(fmt, Side.ADVANTAGED)
    width = max(8, fmt.length)
    lines = [
        f"format: {fmt.name} ({fmt.code})",
        f"scenarios: {len(scenarios)}",
        f"{'scenario':<{width}}  probability",
    ]
    lines += [f"{s.games:<{width}}  {s.factored_text()}" for s in scenarios]
    lines.append(f"polynomial: {series_win_polynomial(fmt).to_text()}")
    return "\n".join(lines) + "\n"


def cmd_derive(args) -> int:
    sys.stdout.write(render_derive(args.format))
    return EXIT_OK


# compare


def cmd_compare(args) -> int:
    try:
        report = fairness_verdict(args.longer, args.shorter, args.r, args.threshold)
    except MultipleCrossoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    sys.stdout.write(report.to_text())
    return EXIT_OK


# multiplier


def _resolve_csv(path: str):
    if path.startswith("@"):
        return bundled_path(path[1:])
    return path


def cmd_multiplier(args) -> int:
    try:
        records = load_records(_resolve_csv(args.csv))
    except (OSError, KeyError) as exc:
        print(f"error: cannot read {args.csv}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except RecordError as exc:
        print(f"error: {args.csv}: {exc}", file=sys.stderr)
        return EXIT_DATA
    if args.team:
        records = [r for r in records if args.team in (r.team, r.label)]
        if not records:
            print(f"error: no team matching {args.team!r}", file=sys.stderr)
            return EXIT_DATA
    try:
        rows = [(r, road_multiplier(r)) for r in records]
        mean = average_road_multiplier(records) if records else None
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    print("team,home,road,road_multiplier")
    for rec, m in rows:
        print(f"{rec.label},{rec.home_record},{rec.road_record},{fmt9(m)}")
    print(f"mean,{len(rows)} teams,,{'n/a' if mean is None else fmt9(mean)}")
    return EXIT_OK


# sweep


@dataclass(frozen=True)
class SweepSpec:
    quantity: str
    formats: tuple[SeriesFormat, ...]
    lo: float
    hi: float
    step: float
    r_value: float = R_PAPER
    a: float | None = None
    mode: Mode | None = None

    def __post_init__(self):
        if not (0.0 <= self.lo < self.hi <= 1.0):
            raise UsageError("grid needs 0 <= lo < hi <= 1")
        if not self.step > 0:
            raise UsageError("step must be positive")
        if (self.hi - self.lo) / self.step > 1e6:
            raise UsageError("grid has more than 10^6 steps")
        need = 2 if self.quantity == "difference" else 1
        if len(self.formats) != need:
            raise UsageError(f"{self.quantity} sweep needs {need} format(s)")

    @property
    def uses_morale(self) -> bool:
        return self.a is not None or self.mode is not None

    def grid(self) -> list[float]:
        n = int(math.floor((self.hi - self.lo) / self.step + 1e-9))
        pts = [round(self.lo + i * self.step, 12) for i in range(n + 1)]
        if self.hi - pts[-1] > 1e-9:
            pts.append(self.hi)
        return pts

    def value(self, p: float) -> float:
        if self.uses_morale:
            mode = self.mode or Mode.FIXED
            model = MoraleModel(p, self.r_value, self.a or 0.0, mode)
            vals = [series_outcome_dp(f, model)[0] for f in self.formats]
        else:
            vals = [series_win_polynomial(f).evaluate(p, self.r_value) for f in self.formats]
        return vals[0] if len(vals) == 1 else vals[0] - vals[1]


def cmd_sweep(args) -> int:
    try:
        spec = SweepSpec(
            quantity=args.quantity,
            formats=tuple(args.formats),
            lo=args.lo,
            hi=args.hi,
            step=args.step,
            r_value=args.r,
            a=args.a,
            mode=Mode(args.mode) if args.mode else None,
        )
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = ["p,value"]
    try:
        for p in spec.grid():
            out.append(f"{p:.6f},{fmt9(spec.value(p))}")
    except ProbabilityRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


# simulate


def cmd_simulate(args) -> int:
    try:
        model = MoraleModel(args.p, args.r, args.a, Mode(args.mode), strict=not args.clamp)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        exact, _, clamped = series_outcome_dp(args.format, model)
        sim = simulate_series(args.format, model, args.trials, args.seed)
    except ProbabilityRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    se = math.sqrt(max(exact * (1.0 - exact), 0.0) / args.trials)
    dev = abs(sim.frequency - exact)
    print(f"format: {args.format.name} ({args.format.code})")
    print(f"model: mode={model.mode.value} p={fmt9(model.p)} r={fmt9(model.r)} a={fmt9(model.a)}")
    print(f"trials: {sim.trials}")
    print(f"seed: {args.seed}")
    print(f"wins: {sim.wins}")
    print(f"frequency: {fmt9(sim.frequency)}")
    print(f"exact: {fmt9(exact)}")
    print(f"deviation: {fmt9(dev)}")
    print(f"standard_error: {fmt9(se)}")
    print(f"bound_6se: {fmt9(6 * se)}")
    if clamped:
        print("clamped: yes")
    ok = dev <= 6 * se + 1e-12
    print(f"self_check: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_SELFCHECK


# reproduce-paper


def cmd_reproduce(args) -> int:
    results = reproduce.run_all()
    width = max(len(c.name) for _, c in results)
    failed = 0
    for group, c in results:
        status = "PASS" if c.passed else "FAIL"
        failed += not c.passed
        line = f"{status}  {group:<11} {c.name:<{width}}"
        if args.verbose or not c.passed:
            line += f"  {c.detail}"
        print(line.rstrip())
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_SELFCHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seriesfair", description="Exact best-of-N series win probabilities with home-field advantage."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("derive", help="list victory scenarios and the win polynomial")
    d.add_argument("format", type=_format_arg, help='e.g. "2-3-2" or "HHAAAHH"')
    d.set_defaults(func=cmd_derive)

    c = sub.add_parser("compare", help="extreme-value comparison of two formats")
    c.add_argument("longer", type=_format_arg)
    c.add_argument("shorter", type=_format_arg)
    c.add_argument("--r", type=_positive_float, default=R_PAPER)
    c.add_argument("--threshold", type=_finite_float, default=SIGNIFICANCE_THRESHOLD)
    c.set_defaults(func=cmd_compare)

    m = sub.add_parser("multiplier", help="road multipliers from a records CSV (@extremes, @champions are bundled)")
    m.add_argument("csv")
    m.add_argument("--team", help='team name or "season team" label')
    m.set_defaults(func=cmd_multiplier)

    s = sub.add_parser("sweep", help="CSV of win probability or difference over a p grid")
    s.add_argument("--quantity", choices=("win", "difference"), default="win")
    s.add_argument("--format", dest="formats", type=_format_arg, action="append", required=True,
                   help="repeat twice for a difference sweep (longer first)")
    s.add_argument("--lo", type=_finite_float, default=0.0)
    s.add_argument("--hi", type=_finite_float, default=1.0)
    s.add_argument("--step", type=_finite_float, default=0.01)
    s.add_argument("--r", type=_positive_float, default=R_PAPER)
    s.add_argument("--a", type=_finite_float, default=None, help="morale shift; enables the DP model")
    s.add_argument("--mode", choices=[m.value for m in Mode], default=None)
    s.set_defaults(func=cmd_sweep)

    sim = sub.add_parser("simulate", help="Monte Carlo check against the exact DP")
    sim.add_argument("format", type=_format_arg)
    sim.add_argument("--p", type=_finite_float, required=True)
    sim.add_argument("--r", type=_positive_float, default=R_PAPER)
    sim.add_argument("--a", type=_finite_float, default=0.0)
    sim.add_argument("--mode", choices=[m.value for m in Mode], default="none")
    sim.add_argument("--trials", type=int, default=100_000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--clamp", action="store_true", help="clip out-of-range game probabilities")
    sim.set_defaults(func=cmd_simulate)

    rp = sub.add_parser("reproduce-paper", help="run every published-value check")
    rp.add_argument("-v", "--verbose", action="store_true")
    rp.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be at least 1")
    if not 0 <= getattr(args, "seed", 0) < 2**64:
        parser.error("--seed must be a 64-bit unsigned integer")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
