"""Treating r as a free parameter with a plain grid sweep.

For each road multiplier the largest advantage of a seven-game series over
a five-game one is recomputed. A curve like this is what `seriesfair sweep`
emits as CSV for plotting elsewhere.

Once r > 1 the road probability rp passes 1 near p = 1, the difference
picks up extra sign changes, and the single-crossover assumption breaks.
"""
import numpy as np

from seriesfair import SeriesFormat, fairness_verdict
from seriesfair.analysis import MultipleCrossoverError, crossover_roots, difference_function

seven, five = SeriesFormat.two_three_two(), SeriesFormat.two_three()
print("r,max_advantage,min_advantage,crossover")
for r in np.arange(0.70, 1.101, 0.05):
    try:
        rep = fairness_verdict(seven, five, float(r))
    except MultipleCrossoverError as exc:
        print(f"{r:.2f},,,{len(exc.roots)} crossovers")
        continue
    cross = "" if rep.crossover_in_01 is None else f"{rep.crossover_in_01:.6f}"
    print(f"{r:.2f},{rep.max_advantage:.6f},{rep.min_advantage:.6f},{cross}")

print(crossover_roots(difference_function(seven, five), 1.05))
