"""Deriving series win probabilities exactly.

Every victory scenario of a series is a product of per-game factors:
p for a home win, 1-p for a home loss, rp for a road win, 1-rp for a
road loss. Summing the scenarios gives a polynomial in p and r.
"""
from seriesfair import SeriesFormat, enumerate_victory_scenarios, series_win_polynomial

# A 2-3 best-of-five: two road games, then three at home.
five = SeriesFormat.parse("2-3")
for s in enumerate_victory_scenarios(five):
    print(f"{s.games:<6} {s.factored_text()}")
print("P(win) =", series_win_polynomial(five).to_text())

# Moving the venues around does not change the answer when games are independent.
print(series_win_polynomial(SeriesFormat.parse("2-2-1")) == series_win_polynomial(five))

# The seven-game 2-3-2 series has 35 victory scenarios; 20 go the distance.
seven = SeriesFormat.two_three_two()
scenarios = enumerate_victory_scenarios(seven)
print(len(scenarios), sum(len(s.games) == 7 for s in scenarios))
print("P(win) =", series_win_polynomial(seven).to_text())

# Polynomials are exact, so r = 1 collapses to the classic venue-free formula.
print(series_win_polynomial(SeriesFormat.one_one_one()).fix_r(1.0).coefficients)
