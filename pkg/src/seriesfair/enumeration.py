"""Victory scenarios of a series and the exact win-probability polynomial.

Game codes follow the home/road notation: ``W``/``L`` are home games of the
advantaged team (won/lost), ``w``/``l`` are its road games. Per-game win
probability is ``p`` at home and ``r*p`` on the road.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .core import BivariatePolynomial, SeriesFormat, Venue

__all__ = [
    "Side",
    "Scenario",
    "enumerate_victory_scenarios",
    "scenario_probability",
    "series_win_polynomial",
    "game_factor",
]


class Side(enum.Enum):
    ADVANTAGED = "advantaged"
    OPPONENT = "opponent"

    @property
    def other(self) -> Side:
        return Side.OPPONENT if self is Side.ADVANTAGED else Side.ADVANTAGED


_P = BivariatePolynomial.p()
_RP = BivariatePolynomial.r() * _P
_ONE = BivariatePolynomial.one()

_FACTORS = {
    "W": _P,
    "L": _ONE - _P,
    "w": _RP,
    "l": _ONE - _RP,
}


def game_factor(code: str) -> BivariatePolynomial:
    """Probability polynomial of a single game code."""
    try:
        return _FACTORS[code]
    except KeyError:
        raise ValueError(f"unknown game code {code!r}") from None


def _code(venue: Venue, advantaged_wins: bool) -> str:
    ch = "W" if advantaged_wins else "L"
    return ch if venue is Venue.HOME else ch.lower()


@dataclass(frozen=True)
class Scenario:
    games: str
    winner: Side

    def check(self, fmt: SeriesFormat) -> None:
        """Raise ValueError unless this is a terminated scenario of ``fmt``."""
        if not self.games:
            raise ValueError("empty scenario")
        if len(self.games) > fmt.length:
            raise ValueError(f"{self.games!r} is longer than the series")
        need = fmt.wins_needed
        adv = opp = 0
        for i, g in enumerate(self.games):
            if g not in _FACTORS:
                raise ValueError(f"unknown game code {g!r}")
            home = g.isupper()
            if home != (fmt.venues[i] is Venue.HOME):
                raise ValueError(f"game {i + 1} of {self.games!r} has the wrong venue")
            if adv == need or opp == need:
                raise ValueError(f"{self.games!r} continues after the clinch")
            if g in "Ww":
                adv += 1
            else:
                opp += 1
        wins = adv if self.winner is Side.ADVANTAGED else opp
        last_adv = self.games[-1] in "Ww"
        if wins != need or last_adv != (self.winner is Side.ADVANTAGED):
            raise ValueError(f"{self.games!r} is not a clinch for {self.winner.value}")

    def counts(self) -> Counter:
        return Counter(self.games)

    def factored_text(self) -> str:
        """Product form, e.g. ``p^2(rp)(1-p)(1-rp)``."""
        n = self.counts()
        parts = []
        for code, sym in (("W", "p"), ("w", "(rp)"), ("L", "(1-p)"), ("l", "(1-rp)")):
            k = n.get(code, 0)
            if k:
                parts.append(sym if k == 1 else f"{sym}^{k}")
        return "".join(parts) or "1"

    def __str__(self) -> str:
        return self.games


def enumerate_victory_scenarios(
    fmt: SeriesFormat, side: Side = Side.ADVANTAGED
) -> list[Scenario]:
    """All terminated sequences in which ``side`` clinches.

    Depth-first over game index, advantaged-team win explored before loss,
    so the order is deterministic.
    """
    need = fmt.wins_needed
    out: list[Scenario] = []

    def walk(prefix: str, adv: int, opp: int) -> None:
        if adv == need or opp == need:
            winner = Side.ADVANTAGED if adv == need else Side.OPPONENT
            if winner is side:
                out.append(Scenario(prefix, winner))
            return
        venue = fmt.venues[len(prefix)]
        walk(prefix + _code(venue, True), adv + 1, opp)
        walk(prefix + _code(venue, False), adv, opp + 1)

    walk("", 0, 0)
    return out


def scenario_probability(s: Scenario) -> BivariatePolynomial:
    if not s.games:
        raise ValueError("empty scenario")
    n = s.counts()
    poly = BivariatePolynomial.one()
    for code, k in sorted(n.items()):
        poly = poly * game_factor(code) ** k
    return poly


@lru_cache(maxsize=None)
def series_win_polynomial(
    fmt: SeriesFormat, side: Side = Side.ADVANTAGED
) -> BivariatePolynomial:
    total = BivariatePolynomial.zero()
    for s in enumerate_victory_scenarios(fmt, side):
        total = total + scenario_probability(s)
    return total
