"""Exit criteria. Each test prints one line and records its sub-checks for the summary."""
import math
import random
from collections import Counter
from pathlib import Path

import pytest

from conftest import ACCEPTANCE
from oracles import play_all_sum, terminated_sum
from seriesfair import cli
from seriesfair.analysis import difference_function, fairness_verdict
from seriesfair.core import BivariatePolynomial, SeriesFormat
from seriesfair.enumeration import Side, enumerate_victory_scenarios, series_win_polynomial
from seriesfair.morale import Mode, MoraleModel, SimulationResult, series_outcome_dp, simulate_series
from seriesfair.records import TeamRecord, road_multiplier

R_PAPER = 0.894762228
GOLDEN = Path(__file__).parent / "golden"
F = SeriesFormat.parse
P = BivariatePolynomial.p()
R = BivariatePolynomial.r()


class Criterion:
    def __init__(self, num, title):
        self.key = (num, title)
        self.subs = ACCEPTANCE.setdefault(self.key, [])

    def check(self, name, ok, detail=""):
        self.subs.append((name, bool(ok), detail))

    def close(self, name, got, expected, tol):
        err = abs(got - expected)
        self.check(name, err <= tol, f"got {got:.12g} expected {expected:.12g} err {err:.2e} tol {tol:.0e}")

    def finish(self):
        failed = [s for s in self.subs if not s[1]]
        num, title = self.key
        print(f"[{'PASS' if not failed else 'FAIL'}] criterion {num}: {title}")
        assert not failed, "; ".join(f"{n}: {d}" for n, _, d in failed)


def test_criterion_1_symbolic_identities():
    c = Criterion(1, "symbolic identities")
    three = (2 * R + 1) * P**2 - 2 * R * P**3
    five = (3 * R**2 + 6 * R + 1) * P**3 - (9 * R**2 + 6 * R) * P**4 + 6 * R**2 * P**5
    seven = (
        (4 * R**3 + 18 * R**2 + 12 * R + 1) * P**4
        - (24 * R**3 + 48 * R**2 + 12 * R) * P**5
        + (40 * R**3 + 30 * R**2) * P**6
        - 20 * R**3 * P**7
    )
    f = 6 * R**2 * P**5 - (9 * R**2 + 6 * R) * P**4 + (3 * R**2 + 8 * R + 1) * P**3 - (2 * R + 1) * P**2
    s = (
        -20 * R**3 * P**7
        + (40 * R**3 + 30 * R**2) * P**6
        - (24 * R**3 + 54 * R**2 + 12 * R) * P**5
        + (4 * R**3 + 27 * R**2 + 18 * R + 1) * P**4
        - (3 * R**2 + 6 * R + 1) * P**3
    )
    for name, expected in (("1-1-1", three), ("1-2", three), ("2-3", five), ("2-2-1", five), ("2-3-2", seven)):
        c.check(f"{name} polynomial", series_win_polynomial(F(name)) == expected)
    c.check("f(p)", difference_function(F("2-3"), F("1-1-1")) == f)
    c.check("s(p)", difference_function(F("2-3-2"), F("2-3")) == s)
    for name, fmt in SeriesFormat.canonical().items():
        total = series_win_polynomial(fmt, Side.ADVANTAGED) + series_win_polynomial(fmt, Side.OPPONENT)
        c.check(f"{name} completeness", total == BivariatePolynomial.one())
    c.finish()


def test_criterion_2_scenario_counts():
    c = Criterion(2, "scenario counts and tables")
    for name, n in (("1-1-1", 3), ("1-2", 3), ("2-3", 10), ("2-2-1", 10), ("2-3-2", 35)):
        c.check(f"{name} count", len(enumerate_victory_scenarios(F(name))) == n)
    seven = [s.games for s in enumerate_victory_scenarios(F("2-3-2"))]
    printed_short = {
        "WWww", "LWwww", "WLwww", "WWlww", "WWwlw", "LLwwwW", "LWlwwW", "LWwlwW",
        "LWwwlW", "WLlwwW", "WLwlwW", "WLwwlW", "WWllwW", "WWlwlW", "WWwllW",
    }
    short = [g for g in seven if len(g) < 7]
    c.check("15 printed short scenarios", set(short) == printed_short and len(short) == 15)
    classes = Counter(
        (g.count("W"), g.count("w"), g.count("L"), g.count("l")) for g in seven if len(g) == 7
    )
    c.check("9/9/1/1 multiplicities", classes == {(2, 2, 2, 1): 9, (3, 1, 1, 2): 9, (1, 3, 3, 0): 1, (4, 0, 0, 3): 1})
    c.finish()


def test_criterion_3_numeric_regression():
    c = Criterion(3, "numeric regression at r = 0.894762228")
    cases = {
        "five vs three": (F("2-3"), F("1-1-1"), (0.294269665, 0.756820873), (-0.056156576, 0.047338476), 0.537783),
        "seven vs five": (F("2-3-2"), F("2-3"), (0.329786090, 0.723663130), (-0.038565024, 0.034221072), 0.533711),
    }
    reports = {}
    for label, (longer, shorter, crit, extremes, cross) in cases.items():
        rep = fairness_verdict(longer, shorter, R_PAPER)
        reports[label] = rep
        interior = [x for x in rep.critical_points_in_01 if 0 < x < 1]
        c.check(f"{label}: two interior critical points", len(interior) == 2, str(interior))
        for got, exp in zip(interior, crit):
            c.close(f"{label}: critical point {exp}", got, exp, 1e-8)
        c.close(f"{label}: min value", rep.min_advantage, extremes[0], 1e-8)
        c.close(f"{label}: max value", rep.max_advantage, extremes[1], 1e-8)
        c.close(f"{label}: crossover", rep.crossover_in_01, cross, 5e-7)
    f = difference_function(F("2-3"), F("1-1-1")).fix_r(R_PAPER)
    c.close("f(0.4)", f(0.4), -0.0431953192, 1e-9)
    c.check("five vs three significant", reports["five vs three"].significant)
    c.check("seven vs five not significant", not reports["seven vs five"].significant)
    c.finish()


def test_criterion_4_ivt_brackets():
    c = Criterion(4, "sign changes of the derivatives beyond p = 1")
    f = fairness_verdict(F("2-3"), F("1-1-1"), R_PAPER).external_root_brackets
    s = fairness_verdict(F("2-3-2"), F("2-3"), R_PAPER).external_root_brackets

    def inside(brs, lo, hi):
        return any(lo < a and b < hi for a, b in brs)

    c.check("f' in (1, 2)", inside(f, 1.0, 2.0), str(f))
    c.check("s' in (1, 1.05)", inside(s, 1.0, 1.05), str(s))
    c.check("s' in (1.05, 1.1)", inside(s, 1.05, 1.1), str(s))
    c.finish()


PRINTED_MULTIPLIERS = [
    ("2001 Braves", 40, 41, 48, 33, 1.2),
    ("1997 Orioles", 46, 35, 52, 29, 1.130434783),
    ("2001 Astros", 44, 37, 49, 32, 1.113636364),
    ("2005 White Sox", 47, 34, 52, 29, 1.106382979),
    ("2006 Tigers", 46, 35, 49, 32, 1.065217391),
    ("2000 White Sox", 46, 35, 49, 32, 1.065217391),
    ("2000 Mets", 55, 26, 39, 42, 0.709090909),
    ("2005 Braves", 53, 28, 37, 44, 0.698113208),
    ("2006 Cardinals", 49, 31, 34, 47, 0.685311162),
    ("2003 Athletics", 57, 24, 39, 42, 0.684210526),
    ("2005 Astros", 53, 28, 36, 45, 0.679245283),
    ("2005 White Sox", 47, 34, 52, 29, 1.106382979),
    ("1995 Braves", 44, 28, 46, 26, 1.045454545),
    ("1999 Yankees", 48, 33, 50, 31, 1.041666667),
    ("2000 Yankees", 44, 35, 43, 39, 0.941518847),
    ("2001 Diamondbacks", 48, 33, 44, 37, 0.916666667),
    ("1996 Yankees", 49, 31, 43, 39, 0.856147337),
    ("1998 Yankees", 62, 19, 52, 29, 0.838709677),
    ("2002 Angels", 54, 27, 45, 36, 0.833333333),
    ("2004 Red Sox", 55, 26, 43, 38, 0.781818182),
    ("1997 Marlins", 52, 29, 40, 41, 0.769230769),
    ("2003 Marlins", 53, 28, 38, 43, 0.716981131),
    ("2006 Cardinals", 49, 31, 34, 47, 0.685311162),
]


def test_criterion_5_road_multipliers():
    c = Criterion(5, "23 printed road multipliers within 5e-10")
    assert len(PRINTED_MULTIPLIERS) == 23
    for label, hw, hl, rw, rl, printed in PRINTED_MULTIPLIERS:
        season, team = label.split(" ", 1)
        m = road_multiplier(TeamRecord(team, int(season), hw, hl, rw, rl))
        c.close(label, m, printed, 5e-10)
    c.finish()


def test_criterion_6_oracle_equivalence():
    c = Criterion(6, "polynomial = terminated sum = play-all sum (1e-12)")
    rng = random.Random(6)
    for name, fmt in SeriesFormat.canonical().items():
        poly = series_win_polynomial(fmt)
        worst = 0.0
        for _ in range(25):
            p = rng.random()
            r = rng.uniform(0.5, min(1.5, 1.0 / p if p > 0 else 1.5))
            exact = poly.evaluate(p, r)
            worst = max(worst, abs(exact - terminated_sum(fmt.code, p, r)), abs(exact - play_all_sum(fmt.code, p, r)))
        c.check(f"{name}: 25 samples", worst <= 1e-12, f"worst {worst:.2e}")
    c.finish()


MC_MATRIX = [
    ("2-3-2", Mode.NONE, 0.6, R_PAPER, 0.0),
    ("2-3-2", Mode.FIXED, 0.6, R_PAPER, 0.05),
    ("2-3-2", Mode.CUMULATIVE, 0.55, R_PAPER, 0.03),
    ("2-2-1", Mode.FIXED, 0.45, 1.0, -0.04),
    ("2-3", Mode.CUMULATIVE, 0.5, 0.9, 0.06),
    ("1-1-1", Mode.FIXED, 0.7, 0.85, 0.1),
]


def test_criterion_7_morale_properties():
    c = Criterion(7, "morale model properties")
    worst_reduction = worst_total = 0.0
    for fmt in SeriesFormat.canonical().values():
        for i in range(21):
            for j in range(1, 21):
                p, r = i * 0.05, j * 0.05
                base = series_outcome_dp(fmt, MoraleModel(p, r))
                for mode in (Mode.FIXED, Mode.CUMULATIVE):
                    adv, opp, _ = series_outcome_dp(fmt, MoraleModel(p, r, 0.0, mode))
                    worst_reduction = max(worst_reduction, abs(adv - base[0]))
                for mode, a in ((Mode.FIXED, 0.03), (Mode.CUMULATIVE, -0.02)):
                    try:
                        adv, opp, _ = series_outcome_dp(fmt, MoraleModel(p, r, a, mode))
                    except ValueError:
                        continue
                    worst_total = max(worst_total, abs(adv + opp - 1.0))
    c.check("a = 0 reduces to base model", worst_reduction <= 1e-12, f"worst {worst_reduction:.2e}")
    c.check("DP total probability is 1", worst_total <= 1e-12, f"worst {worst_total:.2e}")
    trials = 1_000_000
    for k, (name, mode, p, r, a) in enumerate(MC_MATRIX):
        model = MoraleModel(p, r, a, mode)
        v = series_outcome_dp(F(name), model)[0]
        sim = simulate_series(F(name), model, trials, seed=1000 + k)
        bound = 4 * math.sqrt(v * (1 - v) / trials)
        c.check(f"MC {name} {mode.value} p={p} a={a}", abs(sim.frequency - v) <= bound,
                f"freq {sim.frequency:.6f} exact {v:.6f} bound {bound:.2e}")
    m = MoraleModel(0.6, R_PAPER, 0.05, Mode.FIXED)
    gap = abs(series_outcome_dp(F("2-2-1"), m)[0] - series_outcome_dp(F("2-3"), m)[0])
    c.check("order dependence for a != 0", gap > 1e-6, f"gap {gap:.2e}")
    c.finish()


def test_criterion_8_permutation_invariance():
    c = Criterion(8, "venue permutations leave the polynomial unchanged")
    rng = random.Random(8)
    for name, fmt in SeriesFormat.canonical().items():
        base = series_win_polynomial(fmt)
        same = True
        for _ in range(20):
            venues = list(fmt.venues)
            rng.shuffle(venues)
            same &= series_win_polynomial(SeriesFormat.from_venues(venues)) == base
        c.check(f"{name}: 20 permutations", same)
    c.finish()


def _run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out


def test_criterion_9_cli(capsys, tmp_path, monkeypatch):
    c = Criterion(9, "CLI: reproduce-paper, derive golden files, exit codes")
    code, out = _run(capsys, "reproduce-paper")
    failing = [line for line in out.splitlines() if line.startswith("FAIL")]
    c.check("reproduce-paper passes", code == 0, " | ".join(failing))
    for name in ("1-1-1", "1-2", "2-3", "2-2-1", "2-3-2"):
        _, out = _run(capsys, "derive", name)
        c.check(f"derive {name} golden", out == (GOLDEN / f"derive_{name}.txt").read_text())
    c.check("exit 0 on success", _run(capsys, "compare", "2-3-2", "2-3")[0] == 0)
    missing = tmp_path / "missing.csv"
    c.check("exit 1 on data error", _run(capsys, "multiplier", str(missing))[0] == 1)
    c.check("exit 2 on usage error", _run(capsys, "derive", "HH")[0] == 2)
    monkeypatch.setattr(cli, "simulate_series", lambda f, m, n, s: SimulationResult(0, n))
    c.check("exit 3 on self-check failure", _run(capsys, "simulate", "2-3-2", "--p", "0.6")[0] == 3)
    c.finish()
