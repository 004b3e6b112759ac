"""Morale-adjusted series models: exact DP and a Monte Carlo oracle.

The advantaged team's per-game probability depends on the venue and on the
current lead ``wins_advantaged - wins_opponent``:

* ``NONE``: ``p`` at home, ``r*p`` on the road.
* ``FIXED``: base shifted by ``a*sign(lead)`` (a tied series is unadjusted).
* ``CUMULATIVE``: base shifted by ``a*lead``.

The road multiplier scales the shifted value, e.g. ``r*(p + a)``.

Monte Carlo seeding: trials are grouped in chunks of ``CHUNK_SIZE``; chunk
``i`` draws from ``PCG64(SeedSequence(seed, spawn_key=(i,)))``, one uniform
per scheduled game (all games are drawn even after a clinch). Counts
therefore depend only on ``(seed, trials, format, model)`` and not on how
chunks are spread over workers.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import SeriesFormat, Venue

__all__ = [
    "Mode",
    "MoraleModel",
    "SeriesState",
    "ProbabilityRangeError",
    "SimulationResult",
    "game_win_probability",
    "series_win_probability_dp",
    "series_outcome_dp",
    "simulate_series",
    "simulate_chunk",
    "CHUNK_SIZE",
]

CHUNK_SIZE = 1 << 16


class Mode(enum.Enum):
    NONE = "none"
    FIXED = "fixed"
    CUMULATIVE = "cumulative"


class ProbabilityRangeError(ValueError):
    def __init__(self, state: SeriesState, venue: Venue, value: float):
        self.state = state
        self.venue = venue
        self.value = value
        super().__init__(
            f"game probability {value!r} outside [0, 1] at state "
            f"{state.wins_advantaged}-{state.wins_opponent} (game {state.game_index + 1}, "
            f"{venue.name.lower()})"
        )


@dataclass(frozen=True)
class MoraleModel:
    p: float
    r: float
    a: float = 0.0
    mode: Mode = Mode.NONE
    strict: bool = True

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p!r}")
        if not self.r > 0:
            raise ValueError(f"r must be positive, got {self.r!r}")
        if isinstance(self.mode, str):
            object.__setattr__(self, "mode", Mode(self.mode))


@dataclass(frozen=True)
class SeriesState:
    wins_advantaged: int = 0
    wins_opponent: int = 0

    @property
    def game_index(self) -> int:
        return self.wins_advantaged + self.wins_opponent

    @property
    def lead(self) -> int:
        return self.wins_advantaged - self.wins_opponent


def _raw_probability(model: MoraleModel, lead: int, venue: Venue) -> float:
    if model.mode is Mode.NONE:
        shift = 0.0
    elif model.mode is Mode.FIXED:
        shift = model.a * ((lead > 0) - (lead < 0))
    else:
        shift = model.a * lead
    base = model.p + shift
    return base if venue is Venue.HOME else model.r * base


def game_win_probability(model: MoraleModel, state: SeriesState, venue: Venue) -> float:
    q = _raw_probability(model, state.lead, venue)
    if not 0.0 <= q <= 1.0:
        if model.strict:
            raise ProbabilityRangeError(state, venue, q)
        q = min(1.0, max(0.0, q))
    return q


def series_outcome_dp(fmt: SeriesFormat, model: MoraleModel) -> tuple[float, float, bool]:
    """Forward DP over reachable states.

    Returns ``(advantaged_win, opponent_win, clamped)``; ``clamped`` is True
    when a non-strict model had to clip some reachable probability.
    """
    need = fmt.wins_needed
    frontier = {(0, 0): 1.0}
    adv_total = opp_total = 0.0
    clamped = False
    for venue in fmt.venues:
        nxt: dict[tuple[int, int], float] = {}
        for (wa, wo), mass in frontier.items():
            state = SeriesState(wa, wo)
            raw = _raw_probability(model, state.lead, venue)
            q = game_win_probability(model, state, venue)
            clamped = clamped or q != raw
            for key, share in (((wa + 1, wo), mass * q), ((wa, wo + 1), mass * (1.0 - q))):
                if key[0] == need:
                    adv_total += share
                elif key[1] == need:
                    opp_total += share
                else:
                    nxt[key] = nxt.get(key, 0.0) + share
        frontier = nxt
        if not frontier:
            break
    return adv_total, opp_total, clamped


def series_win_probability_dp(fmt: SeriesFormat, model: MoraleModel) -> float:
    return series_outcome_dp(fmt, model)[0]


@dataclass(frozen=True)
class SimulationResult:
    wins: int
    trials: int

    @property
    def frequency(self) -> float:
        return self.wins / self.trials

    def __iter__(self):
        yield from (self.wins, self.trials, self.frequency)


def _probability_table(fmt: SeriesFormat, model: MoraleModel) -> np.ndarray:
    """``table[g, wa, wo]``: advantaged-team win probability of game g."""
    need = fmt.wins_needed
    table = np.zeros((fmt.length, need, need))
    for g, venue in enumerate(fmt.venues):
        for wa in range(need):
            for wo in range(need):
                if wa + wo != g:
                    continue
                table[g, wa, wo] = game_win_probability(model, SeriesState(wa, wo), venue)
    return table


def _chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def _run_chunk(fmt: SeriesFormat, table: np.ndarray, seed: int, chunk: int, size: int) -> int:
    need = fmt.wins_needed
    u = _chunk_rng(seed, chunk).random((size, fmt.length))
    wa = np.zeros(size, dtype=np.int64)
    wo = np.zeros(size, dtype=np.int64)
    for g in range(fmt.length):
        live = (wa < need) & (wo < need)
        q = table[g, np.minimum(wa, need - 1), np.minimum(wo, need - 1)]
        won = u[:, g] < q
        wa += live & won
        wo += live & ~won
    return int(np.count_nonzero(wa == need))


def simulate_chunk(
    fmt: SeriesFormat, model: MoraleModel, seed: int, chunk: int, size: int = CHUNK_SIZE
) -> int:
    """Advantaged-team wins in one chunk of trials."""
    return _run_chunk(fmt, _probability_table(fmt, model), seed, chunk, size)


def simulate_series(
    fmt: SeriesFormat,
    model: MoraleModel,
    trials: int,
    seed: int = 0,
    workers: int = 1,
) -> SimulationResult:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    # validates every reachable state up front, so errors surface in strict mode
    table = _probability_table(fmt, model)
    n_chunks, rest = divmod(trials, CHUNK_SIZE)
    jobs = [(i, CHUNK_SIZE) for i in range(n_chunks)]
    if rest:
        jobs.append((n_chunks, rest))
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(lambda j: _run_chunk(fmt, table, seed, *j), jobs))
    else:
        counts = [_run_chunk(fmt, table, seed, i, n) for i, n in jobs]
    return SimulationResult(wins=sum(counts), trials=trials)
