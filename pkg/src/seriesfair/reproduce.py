"""Published reference values and the checks that reproduce them."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .analysis import difference_function, fairness_verdict
from .core import BivariatePolynomial, SeriesFormat
from .enumeration import Side, enumerate_victory_scenarios, series_win_polynomial
from .records import R_PAPER, bundled_path, load_records, road_multiplier

P = BivariatePolynomial.p()
R = BivariatePolynomial.r()

THREE_GAME = (2 * R + 1) * P**2 - 2 * R * P**3
FIVE_GAME = (3 * R**2 + 6 * R + 1) * P**3 - (9 * R**2 + 6 * R) * P**4 + 6 * R**2 * P**5
SEVEN_GAME = (
    (4 * R**3 + 18 * R**2 + 12 * R + 1) * P**4
    - (24 * R**3 + 48 * R**2 + 12 * R) * P**5
    + (40 * R**3 + 30 * R**2) * P**6
    - 20 * R**3 * P**7
)
FIVE_MINUS_THREE = (
    6 * R**2 * P**5 - (9 * R**2 + 6 * R) * P**4 + (3 * R**2 + 8 * R + 1) * P**3 - (2 * R + 1) * P**2
)
SEVEN_MINUS_FIVE = (
    -20 * R**3 * P**7
    + (40 * R**3 + 30 * R**2) * P**6
    - (24 * R**3 + 54 * R**2 + 12 * R) * P**5
    + (4 * R**3 + 27 * R**2 + 18 * R + 1) * P**4
    - (3 * R**2 + 6 * R + 1) * P**3
)
FIVE_MINUS_THREE_DERIVATIVE = (
    30 * R**2 * P**4 - (36 * R**2 + 24 * R) * P**3 + (9 * R**2 + 24 * R + 3) * P**2 - (4 * R + 2) * P
)
SEVEN_MINUS_FIVE_DERIVATIVE = (
    -140 * R**3 * P**6
    + (240 * R**3 + 180 * R**2) * P**5
    - (120 * R**3 + 270 * R**2 + 60 * R) * P**4
    + (16 * R**3 + 108 * R**2 + 72 * R + 4) * P**3
    - (9 * R**2 + 18 * R + 3) * P**2
)

THREE_GAME_SCENARIOS = {"1-1-1": {"Ww", "WlW", "LwW"}, "1-2": {"wW", "wLW", "lWW"}}
FIVE_GAME_SCENARIOS = {
    "2-3": {"wwW", "lwWW", "wlWW", "wwLW", "llWWW", "lwLWW", "lwWLW", "wlLWW", "wlWLW", "wwLLW"},
    "2-2-1": {"WWw", "LWww", "WLww", "WWlw", "LLwwW", "LWlwW", "LWwlW", "WLlwW", "WLwlW", "WWllW"},
}
SEVEN_GAME_SHORT_SCENARIOS = {
    "WWww", "LWwww", "WLwww", "WWlww", "WWwlw", "LLwwwW", "LWlwwW", "LWwlwW",
    "LWwwlW", "WLlwwW", "WLwlwW", "WLwwlW", "WWllwW", "WWlwlW", "WWwllW",
}
# (W, w, L, l) -> occurrences among seven-game victories
SEVEN_GAME_FULL_LENGTH_CLASSES = {(2, 2, 2, 1): 9, (3, 1, 1, 2): 9, (1, 3, 3, 0): 1, (4, 0, 0, 3): 1}

CRITICAL_POINTS = {
    "five_vs_three": (0.294269665, 0.756820873),
    "seven_vs_five": (0.329786090, 0.723663130),
}
EXTREME_VALUES = {
    "five_vs_three": (-0.056156576, 0.047338476),
    "seven_vs_five": (-0.038565024, 0.034221072),
}
F_AT_0_4 = -0.0431953192
CROSSOVERS = {"five_vs_three": 0.537783, "seven_vs_five": 0.533711}

# (label, home W-L, road W-L, printed multiplier), in printed order
EXTREMES_TABLE = [
    ("2001 Braves", (40, 41), (48, 33), 1.2),
    ("1997 Orioles", (46, 35), (52, 29), 1.130434783),
    ("2001 Astros", (44, 37), (49, 32), 1.113636364),
    ("2005 White Sox", (47, 34), (52, 29), 1.106382979),
    ("2006 Tigers", (46, 35), (49, 32), 1.065217391),
    ("2000 White Sox", (46, 35), (49, 32), 1.065217391),
    ("2000 Mets", (55, 26), (39, 42), 0.709090909),
    ("2005 Braves", (53, 28), (37, 44), 0.698113208),
    ("2006 Cardinals", (49, 31), (34, 47), 0.685311162),
    ("2003 Athletics", (57, 24), (39, 42), 0.684210526),
    ("2005 Astros", (53, 28), (36, 45), 0.679245283),
]
CHAMPIONS_TABLE = [
    ("2005 White Sox", (47, 34), (52, 29), 1.106382979),
    ("1995 Braves", (44, 28), (46, 26), 1.045454545),
    ("1999 Yankees", (48, 33), (50, 31), 1.041666667),
    ("2000 Yankees", (44, 35), (43, 39), 0.941518847),
    ("2001 Diamondbacks", (48, 33), (44, 37), 0.916666667),
    ("1996 Yankees", (49, 31), (43, 39), 0.856147337),
    ("1998 Yankees", (62, 19), (52, 29), 0.838709677),
    ("2002 Angels", (54, 27), (45, 36), 0.833333333),
    ("2004 Red Sox", (55, 26), (43, 38), 0.781818182),
    ("1997 Marlins", (52, 29), (40, 41), 0.769230769),
    ("2003 Marlins", (53, 28), (38, 43), 0.716981131),
    ("2006 Cardinals", (49, 31), (34, 47), 0.685311162),
]
MULTIPLIER_TOL = 5e-10


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _close(name: str, actual: float, expected: float, tol: float) -> Check:
    err = abs(actual - expected)
    return Check(name, err <= tol, f"got {actual:.12g}, printed {expected:.12g}, |err|={err:.2e} (tol {tol:.0e})")


def _exact(name: str, actual, expected) -> Check:
    return Check(name, actual == expected, "" if actual == expected else f"got {actual}, expected {expected}")


def _fmt(name: str) -> SeriesFormat:
    return SeriesFormat.parse(name)


def symbolic_checks() -> list[Check]:
    out = []
    for name in ("1-1-1", "1-2"):
        out.append(_exact(f"three-game polynomial {name}", series_win_polynomial(_fmt(name)), THREE_GAME))
    for name in ("2-3", "2-2-1"):
        out.append(_exact(f"five-game polynomial {name}", series_win_polynomial(_fmt(name)), FIVE_GAME))
    out.append(_exact("seven-game polynomial 2-3-2", series_win_polynomial(_fmt("2-3-2")), SEVEN_GAME))
    f = difference_function(_fmt("2-3"), _fmt("1-1-1"))
    s = difference_function(_fmt("2-3-2"), _fmt("2-3"))
    out.append(_exact("f(p) = five minus three", f, FIVE_MINUS_THREE))
    out.append(_exact("s(p) = seven minus five", s, SEVEN_MINUS_FIVE))
    out.append(_exact("f'(p)", f.derivative_p(), FIVE_MINUS_THREE_DERIVATIVE))
    out.append(_exact("s'(p)", s.derivative_p(), SEVEN_MINUS_FIVE_DERIVATIVE))
    for name, fmt in SeriesFormat.canonical().items():
        total = series_win_polynomial(fmt, Side.ADVANTAGED) + series_win_polynomial(fmt, Side.OPPONENT)
        out.append(_exact(f"advantaged + opponent = 1 ({name})", total, BivariatePolynomial.one()))
    return out


def scenario_checks() -> list[Check]:
    out = []
    for table in (THREE_GAME_SCENARIOS, FIVE_GAME_SCENARIOS):
        for name, expected in table.items():
            got = {s.games for s in enumerate_victory_scenarios(_fmt(name))}
            out.append(_exact(f"scenario table {name}", got, expected))
    seven = [s.games for s in enumerate_victory_scenarios(_fmt("2-3-2"))]
    out.append(_exact("seven-game scenario count", len(seven), 35))
    out.append(_exact("seven-game scenarios of 4-6 games", {g for g in seven if len(g) < 7}, SEVEN_GAME_SHORT_SCENARIOS))
    classes = Counter()
    for g in seven:
        if len(g) == 7:
            classes[(g.count("W"), g.count("w"), g.count("L"), g.count("l"))] += 1
    out.append(_exact("seven-game full-length pattern multiplicities", dict(classes), SEVEN_GAME_FULL_LENGTH_CLASSES))
    for n, k in ((3, 3), (5, 10), (7, 35)):
        fmt = _fmt({3: "1-1-1", 5: "2-3", 7: "2-3-2"}[n])
        out.append(_exact(f"best-of-{n} scenario count", len(enumerate_victory_scenarios(fmt)), k))
    return out


def numeric_checks(r: float = R_PAPER) -> list[Check]:
    out = []
    pairs = {"five_vs_three": ("2-3", "1-1-1"), "seven_vs_five": ("2-3-2", "2-3")}
    for key, (longer, shorter) in pairs.items():
        rep = fairness_verdict(_fmt(longer), _fmt(shorter), r)
        interior = [c for c in rep.critical_points_in_01 if 0 < c < 1]
        out.append(_exact(f"{key}: zero is a critical point", 0.0 in rep.critical_points_in_01, True))
        out.append(_exact(f"{key}: two interior critical points", len(interior), 2))
        for c, expected in zip(interior, CRITICAL_POINTS[key]):
            out.append(_close(f"{key}: critical point {expected}", c, expected, 1e-8))
        for expected, c in zip(EXTREME_VALUES[key], CRITICAL_POINTS[key]):
            got = rep.difference_poly.fix_r(r)(c)
            out.append(_close(f"{key}: value at {c}", got, expected, 1e-8))
        out.append(_close(f"{key}: min over [0,1]", rep.min_advantage, EXTREME_VALUES[key][0], 1e-8))
        out.append(_close(f"{key}: max over [0,1]", rep.max_advantage, EXTREME_VALUES[key][1], 1e-8))
        for p0 in (0.0, 1.0):
            out.append(_close(f"{key}: value at p={p0:g}", rep.value_at(p0), 0.0, 1e-12))
        out.append(_close(f"{key}: crossover", rep.crossover_in_01, CROSSOVERS[key], 5e-7))
    f = difference_function(_fmt("2-3"), _fmt("1-1-1"))
    out.append(_close("f(0.4)", f.fix_r(r)(0.4), F_AT_0_4, 1e-9))
    five_three = fairness_verdict(_fmt("2-3"), _fmt("1-1-1"), r)
    seven_five = fairness_verdict(_fmt("2-3-2"), _fmt("2-3"), r)
    out.append(_exact("five vs three is significant", five_three.significant, True))
    out.append(_exact("seven vs five is not significant", seven_five.significant, False))
    return out


def _inside(brackets, lo, hi) -> bool:
    return any(lo <= a and b <= hi for a, b in brackets)


def bracket_checks(r: float = R_PAPER) -> list[Check]:
    f = fairness_verdict(_fmt("2-3"), _fmt("1-1-1"), r).external_root_brackets
    s = fairness_verdict(_fmt("2-3-2"), _fmt("2-3"), r).external_root_brackets
    return [
        Check("f' changes sign in (1, 2)", _inside(f, 1.0, 2.0), str(f)),
        Check("s' changes sign in (1, 1.05)", _inside(s, 1.0, 1.05), str(s)),
        Check("s' changes sign in (1.05, 1.1)", _inside(s, 1.05, 1.1), str(s)),
    ]


def multiplier_checks() -> list[Check]:
    out = []
    for fixture, table in (("extremes", EXTREMES_TABLE), ("champions", CHAMPIONS_TABLE)):
        recs = load_records(bundled_path(fixture))
        out.append(_exact(f"{fixture} fixture rows", len(recs), len(table)))
        for rec, (label, home, road, printed) in zip(recs, table):
            same = rec.label == label and (rec.home_wins, rec.home_losses) == home and (
                rec.road_wins, rec.road_losses) == road
            out.append(_exact(f"{fixture}: {label} record", same, True))
            out.append(_close(f"{fixture}: {label} multiplier", road_multiplier(rec), printed, MULTIPLIER_TOL))
    return out


ALL_GROUPS: dict[str, Callable[[], list[Check]]] = {
    "symbolic": symbolic_checks,
    "scenarios": scenario_checks,
    "numeric": numeric_checks,
    "brackets": bracket_checks,
    "multipliers": multiplier_checks,
}


def run_all() -> list[tuple[str, Check]]:
    return [(group, c) for group, fn in ALL_GROUPS.items() for c in fn()]
