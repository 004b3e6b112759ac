"""Morale effects: when the order of games matters.

With a morale shift a, the advantaged team's chance in the next game
depends on whether it leads or trails. Polynomials no longer apply, so a
dynamic program over series states is used, checked against Monte Carlo.
"""
import math

from seriesfair import Mode, MoraleModel, R_PAPER, SeriesFormat, series_win_probability_dp, simulate_series

seven = SeriesFormat.two_three_two()
for mode in Mode:
    model = MoraleModel(p=0.6, r=R_PAPER, a=0.05, mode=mode)
    exact = series_win_probability_dp(seven, model)
    sim = simulate_series(seven, model, trials=200_000, seed=42)
    se = math.sqrt(exact * (1 - exact) / sim.trials)
    print(f"{mode.value:<10} exact={exact:.6f} simulated={sim.frequency:.6f} (se {se:.1e})")

# Under morale, 2-2-1 and 2-3 are no longer equivalent.
model = MoraleModel(p=0.6, r=R_PAPER, a=0.05, mode=Mode.FIXED)
for name in ("2-2-1", "2-3"):
    print(name, f"{series_win_probability_dp(SeriesFormat.parse(name), model):.6f}")

# A seven-vs-five comparison over a range of morale shifts.
five = SeriesFormat.two_three()
for a in (-0.06, -0.03, 0.0, 0.03, 0.06):
    m = MoraleModel(0.6, R_PAPER, a, Mode.CUMULATIVE)
    diff = series_win_probability_dp(seven, m) - series_win_probability_dp(five, m)
    print(f"a={a:+.2f}  seven - five = {diff:+.6f}")
